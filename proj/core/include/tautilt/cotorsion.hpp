#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/silting.hpp"
#include "tautilt/torsion.hpp"

namespace tautilt {

/// Candidate universe of a two-term category: indecomposables plus sums of up to sum_cap of them.
struct KUniverse {
    std::vector<KObject> indecs;
    std::vector<KObject> objects;  // indecs followed by the sums
    std::size_t sum_cap = 2;
    std::uint64_t rng_seed = 7;  // for sampled map coefficients when a Hom space is large
};
[[nodiscard]] KUniverse k_universe(std::vector<KObject> indecs, std::size_t sum_cap = 2);
/// All P_M for listed M and all P_v[1].
[[nodiscard]] KUniverse two_term_universe(const AlgebraPtr& a, const std::vector<ModuleRep>& modules,
                                          std::size_t sum_cap = 2);

/// (U, V) with U ∩ V = add(seed); lists are extensional over a universe.
struct CotorsionPair {
    ProjComplex seed;
    std::vector<KObject> u, v;
    std::uint64_t rng_seed = 7;
};

struct UvMembership {
    bool in_u = false;
    bool in_v = false;
};
/// V: Hom(P, Z[1]) = 0; U: E(Z, V) = 0 for each listed V.
[[nodiscard]] UvMembership uv_membership(const ProjComplex& p, const std::vector<KObject>& v_list, const ProjComplex& z);
/// (U(P), V(P)) over the indecomposables of the universe.
[[nodiscard]] CotorsionPair pair_of(const ProjComplex& p, const KUniverse& universe);
/// U ∩ V as a basic object.
[[nodiscard]] ProjComplex silting_of(const CotorsionPair& pair);

/// One triangle with its outer terms, minimized.
struct TriangleFit {
    bool found = false;
    std::string method;  // "approximation", "truncation" or "search"
    ProjComplex v, u;
};
struct ConeCocone {
    TriangleFit cone;    // V -> U -> Z -> V[1]
    TriangleFit cocone;  // Z -> V' -> U' -> Z[1]
};
/// Triangles are built from approximations by add(seed), then from the
/// truncation by add(seed[1]) and add(seed[-1]), and finally by searching
/// maps between sums of listed objects.
[[nodiscard]] ConeCocone cone_cocone_decompose(const CotorsionPair& pair, const ProjComplex& z);

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};
struct CotorsionReport {
    std::size_t universe_size = 0;
    std::size_t sum_cap = 2;
    std::vector<Check> checks;
    std::map<std::string, std::size_t> methods;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] const Check& check(const std::string& name) const;
};
[[nodiscard]] CotorsionReport verify_complete_cotorsion(const CotorsionPair& pair, const KUniverse& universe);
[[nodiscard]] nlohmann::json report_to_json(const CotorsionReport& r, const nlohmann::json& pair);

/// Indecomposables of add P * add P[1], from cones of maps between sums of
/// at most two summands of P.
[[nodiscard]] std::vector<KObject> relative_indecomposables(const ProjComplex& p, const std::vector<KObject>& named,
                                                           std::uint64_t rng_seed = 7);
/// (V(P), U(P)[1]) inside add P * add P[1], with intersection add A[1].
[[nodiscard]] CotorsionReport hrs_check(const ProjComplex& p, const std::vector<KObject>& named, std::uint64_t rng_seed = 7);

struct InducedTorsion {
    Subcat t, f;
    bool gen_certificate = false;  // T = Gen H0(P)
    bool inverse_recovers_v = false;
    bool composite = false;        // H0(V) agrees with {X : Hom(P, X[1]) = 0}
};
[[nodiscard]] InducedTorsion induced_torsion_pair(const CotorsionPair& pair, const ModUniverse& mods, const KUniverse& universe);

/// dim Hom_K(X, Y) modulo maps factoring through add(list).
[[nodiscard]] std::size_t quotient_k_dim(const ProjComplex& x, const ProjComplex& y, const std::vector<ProjComplex>& list);
/// dim Hom(H0 X, H0 Y) against hom_k(X, Y) minus maps through add A[1].
[[nodiscard]] std::size_t hom_modulo_shifted_projectives(const ProjComplex& x, const ProjComplex& y);

}  // namespace tautilt
