#include <doctest.h>

#include <random>

#include "tautilt/fp_matrix.hpp"

using namespace tautilt;

namespace {

// Leibniz determinant, exponential but fine for n <= 4.
Residue det(const FpMatrix& m) {
    const auto f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Residue acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) cols.push_back(k);
        const Residue minor = det(m.select_rows(rows).select_columns(cols));
        const Residue term = f.mul(m(0, c), minor);
        acc = (c % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const FpMatrix& m) {
    std::size_t best = 0;
    const std::size_t r = m.rows(), c = m.cols();
    for (std::uint32_t rm = 1; rm < (1u << r); ++rm)
        for (std::uint32_t cm = 1; cm < (1u << c); ++cm) {
            if (__builtin_popcount(rm) != __builtin_popcount(cm)) continue;
            const std::size_t k = static_cast<std::size_t>(__builtin_popcount(rm));
            if (k <= best) continue;
            std::vector<std::size_t> rows, cols;
            for (std::size_t i = 0; i < r; ++i)
                if (rm >> i & 1u) rows.push_back(i);
            for (std::size_t j = 0; j < c; ++j)
                if (cm >> j & 1u) cols.push_back(j);
            if (det(m.select_rows(rows).select_columns(cols)) != 0) best = k;
        }
    return best;
}

FpMatrix random_matrix(std::mt19937& g, std::size_t r, std::size_t c, std::uint32_t p) {
    FpMatrix m(r, c, p);
    std::uniform_int_distribution<Residue> d(0, p - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(g);
    return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
    PrimeField f(7);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.reduce(-1) == 6);
    CHECK_THROWS_AS(PrimeField(8), UsageError);
}

TEST_CASE("rank agrees with minors") {
    std::mt19937 g(11);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int t = 0; t < 60; ++t) {
            const std::size_t r = 1 + g() % 4, c = 1 + g() % 4;
            FpMatrix m = random_matrix(g, r, c, p);
            if (t % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.block(0, 0, 1, c));
            CHECK(rank(m) == rank_by_minors(m));
        }
    }
}

TEST_CASE("kernel, solve and inverse") {
    std::mt19937 g(5);
    for (int t = 0; t < 40; ++t) {
        FpMatrix m = random_matrix(g, 3, 5, 3);
        FpMatrix k = kernel(m);
        CHECK(k.cols() == 5 - rank(m));
        CHECK((m * k).is_zero());
        FpMatrix x = random_matrix(g, 5, 1, 3);
        auto s = solve(m, m * x);
        REQUIRE(s.has_value());
        CHECK(m * *s == m * x);
        FpMatrix q = left_kernel(m.transpose());
        CHECK((q * m.transpose()).is_zero());
    }
    FpMatrix a = FpMatrix::from_rows({{1, 1}, {0, 1}}, 2);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == FpMatrix::identity(2, 2));
    CHECK_FALSE(inverse(FpMatrix::from_rows({{1, 1}, {1, 1}}, 2)).has_value());
    CHECK_FALSE(solve(FpMatrix::from_rows({{1, 0}, {0, 0}}, 5), FpMatrix::from_rows({{0}, {1}}, 5)).has_value());
}

TEST_CASE("space intersection") {
    FpMatrix a = FpMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}, 3);
    FpMatrix b = FpMatrix::from_rows({{1, 0}, {0, 0}, {0, 1}}, 3);
    FpMatrix i = intersect_spaces(a, b);
    CHECK(i.cols() == 1);
    CHECK(contained_in(i, a));
    CHECK(contained_in(i, b));
    CHECK_FALSE(contained_in(b, a));
}

TEST_CASE("mixed moduli are rejected") {
    CHECK_THROWS_AS(FpMatrix(1, 1, 2) + FpMatrix(1, 1, 3), UsageError);
    CHECK_THROWS_AS(FpMatrix(1, 2, 2) * FpMatrix(1, 2, 2), UsageError);
}
