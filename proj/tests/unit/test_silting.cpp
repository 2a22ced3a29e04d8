#include <doctest.h>

#include "fixtures.hpp"
#include "tautilt/homology.hpp"
#include "tautilt/silting.hpp"

using namespace tautilt;

namespace {
std::size_t bound_for(const std::string& name) { return name == "dual_numbers" ? 2 : 3; }

ProjComplex regular_stalk(const AlgebraPtr& a) { return stalk(a, ProjSum{std::vector<std::size_t>(a->vertex_count(), 1)}); }

std::vector<TwoTermSilting> silting_of(const std::string& name) {
    auto a = fixture(name);
    return enumerate_two_term_silting(a, enumerate_indecomposables(a, {bound_for(name), 1e7}));
}
}  // namespace

TEST_CASE("two-term silting counts") {
    CHECK(silting_of("k").size() == 2);
    CHECK(silting_of("dual_numbers").size() == 2);
    CHECK(silting_of("a2").size() == 5);
    CHECK(silting_of("a3").size() == 14);
    CHECK(silting_of("a3_rad2").size() == 12);
}

TEST_CASE("stalk A and A[1] are silting") {
    for (const std::string name : {"k", "dual_numbers", "a2", "a3", "a3_rad2"}) {
        auto a = fixture(name);
        auto t = silting_test(regular_stalk(a));
        CHECK(t.presilting);
        CHECK(t.silting);
        CHECK(silting_test(shift(regular_stalk(a), 1)).silting);
    }
}

TEST_CASE("presilting but not silting") {
    auto a = fixture("a2");
    auto t = silting_test(stalk(a, proj_single(*a, 0)));
    CHECK(t.presilting);
    CHECK_FALSE(t.silting);
    CHECK(t.summands == 1);
}

TEST_CASE("approximations") {
    auto a = fixture("a3");
    auto ind = enumerate_indecomposables(a, {3, 1e7});
    const auto objs = two_term_indecomposables(a, ind);
    std::vector<ProjComplex> list;
    for (const auto& o : objs) list.push_back(o.complex);
    const auto z = regular_stalk(a);
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::vector<ProjComplex> one{list[i]};
        auto l = left_approximation(z, one);
        CHECK(is_left_approximation(z, one, l));
        CHECK(l.uses.size() == hom_k_dim(z, list[i], 0));
        auto r = right_approximation(list[i], {z});
        CHECK(is_right_approximation(list[i], {z}, r));
        auto full = left_approximation(z, one, false);
        CHECK(is_left_approximation(z, one, full));
    }
    // the zero map is not an approximation when a nonzero map exists
    const std::vector<ProjComplex> one{list.front()};
    REQUIRE(hom_k_dim(z, list.front(), 0) > 0);
    KApprox bad{list.front(), zero_chain(z, list.front(), 0), {0}};
    CHECK_FALSE(is_left_approximation(z, one, bad));
}

TEST_CASE("Bongartz triangle lands in add P") {
    for (const std::string name : {"a2", "a3_rad2"}) {
        for (const auto& s : silting_of(name)) {
            auto t = bongartz_triangle(s.complex);
            CHECK_MESSAGE(t.v_in_add, s.name);
            CHECK_MESSAGE(t.u_in_add, s.name);
            CHECK(is_chain_map(t.a_stalk, t.v, t.approx));
        }
    }
}

TEST_CASE("names") {
    auto a = fixture("a2");
    auto objs = two_term_indecomposables(a, enumerate_indecomposables(a, {3, 1e7}));
    CHECK(objs.size() == 5);
    CHECK(complex_name(a, regular_stalk(a), objs).find('?') == std::string::npos);
    CHECK(complex_name(a, zero_complex(a), objs) == "0");
}
