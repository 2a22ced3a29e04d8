#pragma once

#include "tautilt/projective.hpp"

namespace tautilt {

struct ProjectiveCover {
    ProjSum proj;
    ModuleRep module;
    RepMap epi;
};

struct InjectiveEnvelope {
    ProjSum dual_proj;  // envelope = D(proj_module(A^op, dual_proj))
    ModuleRep module;
    RepMap mono;
};

/// Minimal projective presentation p1 -> p0 -> M -> 0.
struct Presentation {
    ProjSum p1, p0;
    ModuleRep m1, m0;
    RepMap d;      // m1 -> m0
    RepMap coker;  // m0 -> M
};

[[nodiscard]] ModuleRep radical(const ModuleRep& m);
[[nodiscard]] std::vector<std::size_t> top_multiplicities(const ModuleRep& m);

[[nodiscard]] ProjectiveCover projective_cover(const ModuleRep& m);
[[nodiscard]] InjectiveEnvelope injective_envelope(const ModuleRep& m);
[[nodiscard]] Presentation min_presentation(const ModuleRep& m);
/// Every generator image of the differential lies in the radical.
[[nodiscard]] bool is_radical_map(const BoundQuiverAlgebra& a, const ProjSum& from, const ProjSum& to, const RepMap& f);

[[nodiscard]] bool is_projective(const ModuleRep& m);
[[nodiscard]] bool is_injective(const ModuleRep& m);

/// Tr M over the opposite algebra.
[[nodiscard]] ModuleRep transpose(const ModuleRep& m);
[[nodiscard]] ModuleRep tau(const ModuleRep& m);
[[nodiscard]] ModuleRep tau_inverse(const ModuleRep& m);

[[nodiscard]] std::size_t ext1_dim(const ModuleRep& m, const ModuleRep& n);
/// dim Hom(n, m) modulo maps factoring through an injective.
[[nodiscard]] std::size_t stable_hom_mod_inj(const ModuleRep& n, const ModuleRep& m);
/// dim Hom(n, m) modulo maps factoring through a projective.
[[nodiscard]] std::size_t stable_hom_mod_proj(const ModuleRep& n, const ModuleRep& m);

/// Columns span {g o iota : g in Hom(y, z)} inside flattened Hom(x, z).
[[nodiscard]] FpMatrix maps_through_target(const ModuleRep& x, const ModuleRep& y, const ModuleRep& z, const RepMap& iota);
/// Columns span {pi o f : f in Hom(x, y)} inside flattened Hom(x, z).
[[nodiscard]] FpMatrix maps_through_source(const ModuleRep& x, const ModuleRep& y, const ModuleRep& z, const RepMap& pi);

}  // namespace tautilt
