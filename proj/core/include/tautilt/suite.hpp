#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/bbridge.hpp"

namespace tautilt {

struct SuiteOptions {
    EnumerationOptions enumeration;
    std::size_t sum_cap = 2;
    std::uint64_t seed = 7;
};

struct SuiteCounts {
    std::size_t indecomposables = 0;
    std::size_t support_tau_tilting = 0;
    std::size_t two_term_silting = 0;
    std::size_t complete_cotorsion_pairs = 0;
    std::size_t torsion_pairs = 0;          // distinct verified (Gen T, T-perp)
    std::size_t torsion_classes_brute = 0;  // subsets closed as torsion classes; 0 when skipped
};

struct SuiteReport {
    std::string algebra;
    SuiteCounts counts;
    std::vector<Check> checks;
    std::vector<std::string> skipped;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] const Check& check(const std::string& name) const;
};

/// Largest universe for which torsion classes are also found by trying every subset.
inline constexpr std::size_t kBruteTorsionLimit = 12;

/// Every exhaustive property check on one algebra.
[[nodiscard]] SuiteReport verify_all(const AlgebraPtr& a, const SuiteOptions& opt);
[[nodiscard]] nlohmann::json suite_to_json(const SuiteReport& r);

/// Torsion classes among subsets of the universe, checked with is_torsion_pair.
[[nodiscard]] std::vector<Subcat> brute_torsion_classes(const ModUniverse& u);

}  // namespace tautilt
