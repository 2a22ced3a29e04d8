#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/homology.hpp"

namespace tautilt {

/// The fixture's enumerated indecomposables; subcategories index into it.
struct ModUniverse {
    AlgebraPtr algebra;
    std::vector<ModuleRep> indecs;
    std::vector<std::string> names;
};
[[nodiscard]] ModUniverse make_universe(const AlgebraPtr& a, const EnumerationOptions& opt);
[[nodiscard]] ModUniverse make_universe(const AlgebraPtr& a, std::vector<ModuleRep> indecs);

enum class SubcatKind { GenOf, HomPerp, Ext1Perp, Explicit };

/// Extensional subcategory: sorted indices into a ModUniverse.
struct Subcat {
    SubcatKind kind = SubcatKind::Explicit;
    std::vector<std::size_t> members;

    [[nodiscard]] bool contains(std::size_t i) const;
    friend bool operator==(const Subcat& x, const Subcat& y) { return x.members == y.members; }
};
[[nodiscard]] Subcat explicit_subcat(std::vector<std::size_t> members);
[[nodiscard]] Subcat intersect(const Subcat& x, const Subcat& y);
[[nodiscard]] std::vector<ModuleRep> modules_of(const ModUniverse& u, const Subcat& s);
[[nodiscard]] std::string subcat_name(const ModUniverse& u, const Subcat& s);
/// Membership of an arbitrary module in add(s).
[[nodiscard]] bool in_add(const ModUniverse& u, const Subcat& s, const ModuleRep& m);
/// Universe index of each indecomposable summand of m (nullopt if one is missing).
[[nodiscard]] std::optional<std::vector<std::size_t>> locate_summands(const ModUniverse& u, const ModuleRep& m);

/// Sum of the images of all maps from the listed modules into m.
[[nodiscard]] Subobject trace(const std::vector<ModuleRep>& t, const ModuleRep& m);
[[nodiscard]] bool in_gen(const std::vector<ModuleRep>& t, const ModuleRep& m);

[[nodiscard]] Subcat gen_of(const ModUniverse& u, const std::vector<ModuleRep>& t);
[[nodiscard]] Subcat hom_perp(const ModUniverse& u, const std::vector<ModuleRep>& t);
/// {M : Ext^1(M, Y) = 0 for all listed Y}, decided by the AR formula.
[[nodiscard]] Subcat ext1_perp(const ModUniverse& u, const std::vector<ModuleRep>& list);
/// Same set computed from Ext^1 dimensions directly.
[[nodiscard]] Subcat ext1_perp_direct(const ModUniverse& u, const std::vector<ModuleRep>& list);
[[nodiscard]] Subcat subcat_of(const ModUniverse& u, SubcatKind kind, const std::vector<ModuleRep>& seed);

struct ModApprox {
    ModuleRep object;
    RepMap map;  // object -> M (right) or M -> object (left)
    std::vector<std::size_t> uses;
};
enum class Side { Left, Right };
[[nodiscard]] ModApprox approximate(const std::vector<ModuleRep>& x, const ModuleRep& m, Side side, bool minimal = true);
[[nodiscard]] bool is_approximation(const std::vector<ModuleRep>& x, const ModuleRep& m, Side side, const ModApprox& f);

struct LwEntry {
    std::string module;
    ModuleRep x_m, y_m;  // 0 -> Y_M -> X_M -> M -> 0
    ModuleRep y_up, x_up;  // M -> Y^M -> X^M -> 0
    bool right_surjective = false;
    bool kernel_in_t = false;
    bool cokernel_in_c = false;
    bool left_injective = false;
};
struct LwReport {
    Subcat c, t;
    bool ext_orthogonal = false;
    std::vector<LwEntry> per_module;
    bool verdict = false;
    /// Every left approximation g^M is injective.
    bool full_cotorsion = false;
};
/// Tested over every indecomposable and the sums of two of them.
[[nodiscard]] LwReport lw_verify(const ModUniverse& u, const Subcat& c, const Subcat& t);
[[nodiscard]] nlohmann::json lw_to_json(const ModUniverse& u, const LwReport& r);

/// Hom-orthogonal, and every module is an extension of an F-module by a T-module via its trace.
[[nodiscard]] bool is_torsion_pair(const ModUniverse& u, const Subcat& t, const Subcat& f);

struct SupportTauTilting {
    std::vector<std::size_t> modules;   // universe indices of the summands of M
    std::vector<std::size_t> vertices;  // P with Hom(P, M) = 0
    ModuleRep module;
    std::string name;
};
[[nodiscard]] bool is_tau_rigid(const ModuleRep& m);
[[nodiscard]] std::vector<SupportTauTilting> enumerate_support_tau_tilting(const ModUniverse& u);

struct Triple {
    Subcat c, t, f;
};
[[nodiscard]] Triple triple(const ModUniverse& u, const SupportTauTilting& s);
struct TripleInverse {
    Subcat c_cap_t;  // the inverse actually used
    Subcat t_cap_f;  // the alternative reading, kept for the report
    ModuleRep module;
    bool lw_ok = false;
    bool torsion_ok = false;
};
[[nodiscard]] TripleInverse triple_inverse(const ModUniverse& u, const Triple& tr);
[[nodiscard]] nlohmann::json triple_to_json(const ModUniverse& u, const Triple& tr, const TripleInverse& inv);

struct QuotientReport {
    std::vector<std::size_t> survivors;  // C minus C ∩ T
    bool cardinality = false;
    bool dimensions = false;  // some bijection survivors -> F matches all quotient Hom dims
    bool functor_lands_in_f = false;
    bool functor_matches = false;
    std::vector<std::string> functor_mismatches;
};
/// dim Hom(x, y) modulo maps factoring through add(list).
[[nodiscard]] std::size_t quotient_hom_dim(const ModuleRep& x, const ModuleRep& y, const std::vector<ModuleRep>& list);
/// Some bijection sigma with q[i][j] == f[sigma i][sigma j] for all i, j.
[[nodiscard]] bool matching_bijection(const std::vector<std::vector<std::size_t>>& q,
                                      const std::vector<std::vector<std::size_t>>& f);
[[nodiscard]] QuotientReport quotient_equivalence_check(const ModUniverse& u, const Triple& tr);

struct TiltingReport {
    bool faithful = false;
    bool injective_approximations = false;
    bool agree = false;
};
[[nodiscard]] bool is_faithful(const ModuleRep& t);
[[nodiscard]] TiltingReport tilting_specialization_check(const ModUniverse& u, const SupportTauTilting& s);

/// Hasse diagram of the torsion classes Gen T ordered by inclusion.
[[nodiscard]] std::string torsion_poset_dot(const ModUniverse& u, const std::vector<SupportTauTilting>& list);

}  // namespace tautilt
