#include <doctest.h>

#include "fixtures.hpp"
#include "tautilt/suite.hpp"

using namespace tautilt;

TEST_CASE("verify_all on every fixture") {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"k", 2}, {"dual_numbers", 2}, {"a2", 5}, {"a3", 14}, {"a3_rad2", 12}};
    for (const auto& [name, count] : expected) {
        SuiteOptions opt;
        opt.enumeration = {name == "dual_numbers" ? std::size_t{2} : std::size_t{3}, 1e7};
        const auto r = verify_all(fixture(name), opt);
        for (const auto& c : r.checks) {
            INFO(name << " " << c.name << " " << c.witness);
            CHECK(c.pass);
        }
        CHECK(r.counts.two_term_silting == count);
        CHECK(r.counts.torsion_classes_brute == count);
        const auto doc = suite_to_json(r);
        CHECK(doc["pass"] == true);
        CHECK(doc.dump() == suite_to_json(verify_all(fixture(name), opt)).dump());
    }
}

TEST_CASE("torsion classes by subsets") {
    const auto u = make_universe(fixture("a2"), {3, 1e7});
    CHECK(brute_torsion_classes(u).size() == 5);
}
