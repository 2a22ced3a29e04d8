#include "tautilt/fp_matrix.hpp"

#include <sstream>
#include <utility>

namespace tautilt {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 15)) throw UsageError("modulus " + std::to_string(p) + " is not a supported prime");
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw UsageError("inverse of zero in F_p");
    // extended Euclid
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
        long long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return reduce(t);
}

Residue PrimeField::reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    (void)PrimeField(p);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Residue> entries)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(entries)) {
    (void)PrimeField(p);
    if (data_.size() != rows * cols) throw UsageError("entry count does not match shape");
    for (auto& e : data_)
        if (e >= p) throw UsageError("entry out of range for modulus");
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p, std::size_t cols_if_empty) {
    PrimeField f(p);
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw UsageError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(rows[r][c]);
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long v) { (*this)(r, c) = PrimeField(p_).reduce(v); }

bool FpMatrix::is_zero() const {
    for (auto e : data_)
        if (e != 0) return false;
    return true;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block out of range");
    FpMatrix b(nr, nc, p_);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void FpMatrix::set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw UsageError("block out of range");
    if (b.p() != p_ && !b.empty()) throw UsageError("modulus mismatch");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> cols) const {
    FpMatrix b(rows_, cols.size(), p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) b(r, j) = (*this)(r, cols[j]);
    return b;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> rows) const {
    FpMatrix b(rows.size(), cols_, p_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) b(i, c) = (*this)(rows[i], c);
    return b;
}

FpMatrix FpMatrix::scaled(Residue s) const {
    PrimeField f(p_);
    FpMatrix m = *this;
    for (auto& e : m.data_) e = f.mul(e, s);
    return m;
}

FpMatrix& FpMatrix::operator+=(const FpMatrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw UsageError("shape mismatch in addition");
    if (o.p_ != p_) throw UsageError("modulus mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = (data_[i] + o.data_[i]) % p_;
    return *this;
}

FpMatrix& FpMatrix::operator-=(const FpMatrix& o) {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw UsageError("shape mismatch in subtraction");
    if (o.p_ != p_) throw UsageError("modulus mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
    return *this;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("shape mismatch in product");
    if (a.p_ != b.p_) throw UsageError("modulus mismatch");
    FpMatrix c(a.rows_, b.cols_, a.p_);
    const std::uint64_t p = a.p_;
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::uint64_t x = a(i, k);
            if (x == 0) continue;
            const Residue* brow = b.data_.data() + k * b.cols_;
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
            if (k % 4096 == 4095)
                for (auto& v : acc) v %= p;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Residue>(acc[j] % p);
    }
    return c;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows()) throw UsageError("hstack row mismatch");
    FpMatrix m(a.rows(), a.cols() + b.cols(), a.p());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.cols()) throw UsageError("vstack column mismatch");
    FpMatrix m(a.rows() + b.rows(), a.cols(), a.p());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

FpMatrix hstack(const std::vector<FpMatrix>& blocks, std::size_t rows, std::uint32_t p) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw UsageError("hstack row mismatch");
        cols += b.cols();
    }
    FpMatrix m(rows, cols, p);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        m.set_block(0, c, b);
        c += b.cols();
    }
    return m;
}

FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

EchelonReport::EchelonReport(const FpMatrix& m)
    : source_(m), rref_(m), transform_(FpMatrix::identity(m.rows(), m.p())) {
    const PrimeField f(m.p());
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    auto row_op = [&](FpMatrix& x, std::size_t dst, std::size_t src, Residue factor) {
        // x[dst] -= factor * x[src]
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (x(src, c) != 0) x(dst, c) = f.sub(x(dst, c), f.mul(factor, x(src, c)));
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && rref_(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(rref_(piv, k), rref_(r, k));
            for (std::size_t k = 0; k < rows; ++k) std::swap(transform_(piv, k), transform_(r, k));
        }
        const Residue iv = f.inv(rref_(r, c));
        for (std::size_t k = 0; k < cols; ++k) rref_(r, k) = f.mul(rref_(r, k), iv);
        for (std::size_t k = 0; k < rows; ++k) transform_(r, k) = f.mul(transform_(r, k), iv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || rref_(i, c) == 0) continue;
            const Residue factor = rref_(i, c);
            row_op(rref_, i, r, factor);
            row_op(transform_, i, r, factor);
        }
        pivots_.push_back(c);
        ++r;
    }
}

FpMatrix EchelonReport::kernel_basis() const {
    const PrimeField f(rref_.p());
    const std::size_t cols = rref_.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots_) is_pivot[c] = true;
    FpMatrix k(cols, cols - rank(), rref_.p());
    std::size_t j = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        k(free, j) = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) k(pivots_[i], j) = f.neg(rref_(i, free));
        ++j;
    }
    return k;
}

FpMatrix EchelonReport::image_basis() const { return source_.select_columns(pivots_); }

std::optional<FpMatrix> EchelonReport::solve(const FpMatrix& rhs) const {
    if (rhs.rows() != source_.rows()) throw UsageError("solve: right-hand side has wrong height");
    if (rhs.p() != source_.p()) throw UsageError("modulus mismatch");
    FpMatrix t = transform_ * rhs;
    for (std::size_t i = rank(); i < t.rows(); ++i)
        for (std::size_t c = 0; c < t.cols(); ++c)
            if (t(i, c) != 0) return std::nullopt;
    FpMatrix x(source_.cols(), rhs.cols(), source_.p());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        for (std::size_t c = 0; c < t.cols(); ++c) x(pivots_[i], c) = t(i, c);
    return x;
}

std::size_t rank(const FpMatrix& m) { return EchelonReport(m).rank(); }
FpMatrix kernel(const FpMatrix& m) { return EchelonReport(m).kernel_basis(); }
std::optional<FpMatrix> solve(const FpMatrix& m, const FpMatrix& rhs) { return EchelonReport(m).solve(rhs); }

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    EchelonReport e(m);
    if (e.rank() != m.rows()) return std::nullopt;
    return e.solve(FpMatrix::identity(m.rows(), m.p()));
}

FpMatrix column_space(const FpMatrix& m) { return EchelonReport(m).image_basis(); }

FpMatrix intersect_spaces(const FpMatrix& a, const FpMatrix& b) {
    // x in span(a) ∩ span(b)  <=>  a u = b w ; kernel of [a | -b]
    FpMatrix ab = hstack(a, b.scaled(b.p() - 1));
    FpMatrix k = kernel(ab);
    FpMatrix u = k.block(0, 0, a.cols(), k.cols());
    return column_space(a * u);
}

bool contained_in(const FpMatrix& sub, const FpMatrix& space) {
    if (sub.cols() == 0) return true;
    if (space.cols() == 0) return sub.is_zero();
    return rank(hstack(space, sub)) == rank(space);
}

FpMatrix left_kernel(const FpMatrix& m) { return kernel(m.transpose()).transpose(); }

}  // namespace tautilt
