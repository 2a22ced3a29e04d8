#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tautilt/module.hpp"

using namespace tautilt;

namespace {
std::size_t count(const std::string& name, std::size_t bound) {
    return enumerate_indecomposables(fixture(name), {bound, 1e7}).size();
}
}  // namespace

TEST_CASE("projectives of the worked example") {
    auto a = fixture("a3_rad2");
    CHECK(projective_module(a, 0).dims() == std::vector<std::size_t>{1, 1, 0});
    CHECK(projective_module(a, 1).dims() == std::vector<std::size_t>{0, 1, 1});
    auto p3 = projective_module(a, 2);
    CHECK(p3.dims() == std::vector<std::size_t>{0, 0, 1});
    CHECK(is_isomorphic(p3, simple_module(a, 2)).has_value());
    CHECK(injective_module(a, 1).dims() == std::vector<std::size_t>{1, 1, 0});
    CHECK(is_indecomposable(projective_module(a, 0)));
    CHECK(projective_module(fixture("k"), 0).total() == 1);
}

TEST_CASE("decompose the regular module") {
    auto a = fixture("a3_rad2");
    auto parts = decompose(regular_module(a));
    REQUIRE(parts.size() == 3);
    for (std::size_t v = 0; v < 3; ++v) CHECK(find_isomorphic(parts, projective_module(a, v)).has_value());
    auto s = simple_module(a, 0);
    auto twice = decompose(direct_sum(s, s));
    REQUIRE(twice.size() == 2);
    CHECK(is_isomorphic(twice[0], s).has_value());
    auto again = decompose(twice[0]);
    CHECK(again.size() == 1);
}

TEST_CASE("isomorphism survives a change of basis") {
    auto a = fixture("a3");
    auto m = direct_sum(projective_module(a, 0), simple_module(a, 1));
    std::mt19937 g(3);
    RepMap change;
    for (auto d : m.dims()) {
        FpMatrix c(d, d, 2);
        do {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) c(i, j) = g() % 2;
        } while (rank(c) != d);
        change.push_back(c);
    }
    ModuleRep n{a, conjugate(m.rep, change)};
    auto w = is_isomorphic(m, n);
    REQUIRE(w.has_value());
    CHECK(is_morphism(m.rep, n.rep, *w));
    CHECK(is_iso_map(*w));
    CHECK_FALSE(is_isomorphic(simple_module(a, 0), simple_module(a, 1)).has_value());
}

TEST_CASE("enumeration counts") {
    CHECK(count("k", 3) == 1);
    CHECK(count("dual_numbers", 2) == 2);
    CHECK(count("dual_numbers", 3) == 2);
    CHECK(count("a2", 3) == 3);
    CHECK(count("a3", 3) == 6);
    CHECK(count("a3_rad2", 3) == 5);
    CHECK(count("a3_rad2", 6) == 5);
}

TEST_CASE("guard aborts large searches") {
    CHECK_THROWS_AS((void)enumerate_indecomposables(fixture("dual_numbers"), {8, 1e5}), GuardError);
}

TEST_CASE("module file round trip") {
    auto a = fixture("a3_rad2");
    auto m = projective_module(a, 0);
    auto back = module_from_json(a, module_to_json(m));
    CHECK(back.rep == m.rep);
    nlohmann::json bad = {{"dims", {1, 1, 1}}, {"mats", {{"alpha", {{1}}}, {"beta", {{1}}}}}};
    CHECK_THROWS_AS((void)module_from_json(a, bad), ParseError);
}

TEST_CASE("summand dimension vectors add up") {
    auto a = fixture("a3");
    auto m = direct_sum(regular_module(a), injective_module(a, 2));
    std::vector<std::size_t> sum(3, 0);
    for (const auto& s : decompose_with_maps(m)) {
        for (std::size_t v = 0; v < 3; ++v) sum[v] += s.object.dims()[v];
        CHECK(is_morphism(s.object.rep, m.rep, s.inclusion));
        CHECK(is_morphism(m.rep, s.object.rep, s.projection));
        CHECK(is_iso_map(compose(s.projection, s.inclusion)));
    }
    CHECK(sum == m.dims());
}
