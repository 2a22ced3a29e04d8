#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautilt {

using Residue = std::uint32_t;

/// Raised when operands live over different prime fields or have
/// incompatible shapes.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Arithmetic in the prime field F_p. Moduli are restricted to p < 2^15 so
/// that products of residues fit comfortably in 32 bits.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    [[nodiscard]] std::uint32_t p() const { return p_; }

    [[nodiscard]] Residue add(Residue a, Residue b) const { return (a + b) % p_; }
    [[nodiscard]] Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} * b) % p_); }
    [[nodiscard]] Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue inv(Residue a) const;
    [[nodiscard]] Residue reduce(long long v) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

[[nodiscard]] bool is_prime(std::uint32_t n);

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Residue> entries);

    static FpMatrix identity(std::size_t n, std::uint32_t p);
    static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p,
                              std::size_t cols_if_empty = 0);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::uint32_t p() const { return p_; }
    [[nodiscard]] PrimeField field() const { return PrimeField(p_); }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    [[nodiscard]] Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v);

    [[nodiscard]] std::span<const Residue> entries() const { return data_; }
    [[nodiscard]] std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] FpMatrix transpose() const;
    [[nodiscard]] FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b);
    [[nodiscard]] FpMatrix column(std::size_t c) const { return block(0, c, rows_, 1); }
    [[nodiscard]] FpMatrix select_columns(std::span<const std::size_t> cols) const;
    [[nodiscard]] FpMatrix select_rows(std::span<const std::size_t> rows) const;
    [[nodiscard]] FpMatrix scaled(Residue s) const;

    FpMatrix& operator+=(const FpMatrix& o);
    FpMatrix& operator-=(const FpMatrix& o);

    friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
    friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }
    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<Residue> data_;
};

[[nodiscard]] FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
[[nodiscard]] FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
[[nodiscard]] FpMatrix hstack(const std::vector<FpMatrix>& blocks, std::size_t rows, std::uint32_t p);
[[nodiscard]] FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b);

/// Result of Gauss-Jordan elimination. `transform * source == rref`.
class EchelonReport {
public:
    explicit EchelonReport(const FpMatrix& m);

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
    [[nodiscard]] std::size_t nullity() const { return rref_.cols() - rank(); }
    [[nodiscard]] const FpMatrix& rref() const { return rref_; }
    [[nodiscard]] const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    /// Columns form a basis of the right kernel.
    [[nodiscard]] FpMatrix kernel_basis() const;
    /// Columns form a basis of the column space (pivot columns of the source).
    [[nodiscard]] FpMatrix image_basis() const;
    /// Some x with source * x == rhs, or nullopt when rhs is outside the column space.
    [[nodiscard]] std::optional<FpMatrix> solve(const FpMatrix& rhs) const;

private:
    FpMatrix source_;
    FpMatrix rref_;
    FpMatrix transform_;
    std::vector<std::size_t> pivots_;
};

[[nodiscard]] inline EchelonReport reduce(const FpMatrix& m) { return EchelonReport(m); }
[[nodiscard]] std::size_t rank(const FpMatrix& m);
[[nodiscard]] FpMatrix kernel(const FpMatrix& m);
[[nodiscard]] std::optional<FpMatrix> solve(const FpMatrix& m, const FpMatrix& rhs);
[[nodiscard]] std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Columns of a basis of the span of the columns of `m` (pivot columns).
[[nodiscard]] FpMatrix column_space(const FpMatrix& m);
/// Columns of a basis of the intersection of two column spaces.
[[nodiscard]] FpMatrix intersect_spaces(const FpMatrix& a, const FpMatrix& b);
/// Whether every column of `sub` lies in the column span of `space`.
[[nodiscard]] bool contained_in(const FpMatrix& sub, const FpMatrix& space);
/// Rows q with q * m == 0, stacked; full row rank.
[[nodiscard]] FpMatrix left_kernel(const FpMatrix& m);

}  // namespace tautilt
