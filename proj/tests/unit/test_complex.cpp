#include <doctest.h>

#include "fixtures.hpp"
#include "tautilt/complex.hpp"
#include "tautilt/homology.hpp"

using namespace tautilt;

namespace {
const std::vector<std::string> kFixtures = {"k", "dual_numbers", "a2", "a3", "a3_rad2"};
std::size_t bound_for(const std::string& name) { return name == "dual_numbers" ? 2 : 3; }
bool iso(const ModuleRep& a, const ModuleRep& b) { return is_isomorphic(a, b).has_value(); }

ProjComplex shifted_projective(const AlgebraPtr& a, std::size_t v) { return two_term(a, proj_single(*a, v), proj_zero(*a), zero_map(projective_module(a, v).rep, zero_module(a).rep)); }
}  // namespace

TEST_CASE("stalk homs") {
    for (const auto& name : kFixtures) {
        auto a = fixture(name);
        auto ind = enumerate_indecomposables(a, {bound_for(name), 1e7});
        for (std::size_t u = 0; u < a->vertex_count(); ++u) {
            auto q = stalk(a, proj_single(*a, u));
            for (std::size_t v = 0; v < a->vertex_count(); ++v)
                CHECK(hom_k_dim(q, stalk(a, proj_single(*a, v)), 1) == 0);
            for (const auto& m : ind) CHECK(hom_k_dim(q, presentation_complex(m), 0) == hom_dim(projective_module(a, u), m));
        }
        // maps into shifted projectives compute the transpose
        for (const auto& m : ind) {
            auto pm = presentation_complex(m);
            std::size_t total = 0;
            for (std::size_t u = 0; u < a->vertex_count(); ++u) {
                const std::size_t d = hom_k_dim(pm, shifted_projective(a, u), 0);
                if (is_projective(m)) CHECK(d == 0);
                total += d;
            }
            CHECK(total == transpose(m).total());
        }
    }
}

TEST_CASE("homology of presentations") {
    auto a = fixture("a3_rad2");
    for (const auto& m : enumerate_indecomposables(a, {3, 1e7})) CHECK(iso(h0(presentation_complex(m)), m));
    CHECK(h0(shifted_projective(a, 0)).is_zero());
    CHECK(iso(h_minus1(presentation_complex(simple_module(a, 0))), simple_module(a, 2)));
}

TEST_CASE("cones") {
    auto a = fixture("a3_rad2");
    auto x = presentation_complex(simple_module(a, 0));
    auto c = cone(x, x, identity_chain(x));
    CHECK(decompose_complex(c).empty());
    auto y = presentation_complex(simple_module(a, 1));
    auto c0 = cone(x, y, zero_chain(x, y, 0));
    CHECK(is_isomorphic_k(c0, direct_sum(y, shift(x, 1))));
    CHECK_FALSE(as_two_term(c0).has_value());
}

TEST_CASE("decompose complexes") {
    auto a = fixture("a3_rad2");
    ProjSum all{{1, 1, 1}};
    CHECK(decompose_complex(stalk(a, all)).size() == 3);
    auto p = proj_single(*a, 1);
    auto contractible = two_term(a, p, p, identity_map(projective_module(a, 1).rep));
    CHECK(decompose_complex(contractible).empty());
    auto sum = direct_sum(presentation_complex(simple_module(a, 0)), shifted_projective(a, 2));
    auto parts = decompose_complex(sum);
    REQUIRE(parts.size() == 2);
    for (const auto& name : kFixtures) {
        auto b = fixture(name);
        for (const auto& m : enumerate_indecomposables(b, {bound_for(name), 1e7}))
            if (!is_projective(m)) CHECK(decompose_complex(presentation_complex(m)).size() == 1);
    }
}

TEST_CASE("minimize gives homotopy inverse maps") {
    auto a = fixture("a3_rad2");
    auto x = direct_sum(presentation_complex(simple_module(a, 0)),
                        two_term(a, proj_single(*a, 0), proj_single(*a, 0), identity_map(projective_module(a, 0).rep)));
    auto m = minimize(x);
    CHECK(is_chain_map(m.complex, x, m.iota));
    CHECK(is_chain_map(x, m.complex, m.pi));
    auto pi_iota = compose(m.pi, m.iota, m.complex, x, m.complex);
    CHECK(is_null_homotopic(m.complex, m.complex, add_chains(pi_iota, scale_chain(identity_chain(m.complex), 1))));
    auto iota_pi = compose(m.iota, m.pi, x, m.complex, x);
    CHECK(is_null_homotopic(x, x, add_chains(iota_pi, scale_chain(identity_chain(x), 1))));
    CHECK(m.complex.term(-1) == proj_single(*a, 1));
}

TEST_CASE("E-groups versus tau") {
    for (const auto& name : kFixtures) {
        CAPTURE(name);
        auto a = fixture(name);
        auto ind = enumerate_indecomposables(a, {bound_for(name), 1e7});
        for (const auto& m : ind)
            for (const auto& n : ind) {
                auto pm = presentation_complex(m), pn = presentation_complex(n);
                CHECK((hom_k_dim(pm, pn, 1) == 0) == (hom_dim(n, tau(m)) == 0));
                CHECK(hom_k_dim(pm, pn, 2) == 0);
                CHECK(hom_k_dim(pm, pn, -2) == 0);
            }
    }
}

TEST_CASE("complex json round trip") {
    auto a = fixture("a3_rad2");
    auto x = presentation_complex(simple_module(a, 0));
    auto y = complex_from_json(a, complex_to_json(x));
    CHECK(y.terms == x.terms);
    CHECK(y.diffs == x.diffs);
}
