#pragma once

#include <vector>

#include "tautilt/module.hpp"

namespace tautilt {

/// Projective module in canonical form: the sum of mult[v] copies of P_v,
/// with summands (slots) ordered by vertex.
struct ProjSum {
    std::vector<std::size_t> mult;

    [[nodiscard]] std::vector<std::size_t> slots() const;
    [[nodiscard]] std::size_t slot_count() const;
    [[nodiscard]] bool is_zero() const { return slot_count() == 0; }
    friend bool operator==(const ProjSum&, const ProjSum&) = default;
};

[[nodiscard]] ProjSum proj_zero(const BoundQuiverAlgebra& a);
[[nodiscard]] ProjSum proj_single(const BoundQuiverAlgebra& a, std::size_t v);
[[nodiscard]] ProjSum proj_add(const ProjSum& x, const ProjSum& y);
[[nodiscard]] std::string proj_name(const BoundQuiverAlgebra& a, const ProjSum& x);

[[nodiscard]] ModuleRep proj_module(const AlgebraPtr& a, const ProjSum& x);

/// Row of slot i's block inside the vertex-w space of the projective.
[[nodiscard]] std::size_t slot_offset(const BoundQuiverAlgebra& a, const ProjSum& x, std::size_t slot, std::size_t w);
/// Position of the generator e_v of slot i in the vertex-v space.
[[nodiscard]] std::size_t generator_row(const BoundQuiverAlgebra& a, const ProjSum& x, std::size_t slot);

/// f : x -> target is determined by where the generators go; images[j] is a
/// column vector in target's vertex-(slot j) space.
[[nodiscard]] std::vector<FpMatrix> generator_images(const BoundQuiverAlgebra& a, const ProjSum& x, const RepMap& f);
[[nodiscard]] RepMap map_from_generators(const ModuleRep& target, const ProjSum& x, const std::vector<FpMatrix>& images);

/// Coefficient of the trivial path of target slot i in the image of source
/// slot j (zero unless both slots sit at the same vertex).
[[nodiscard]] Residue unit_coefficient(const BoundQuiverAlgebra& a, const ProjSum& from, const ProjSum& to,
                                       const RepMap& f, std::size_t i, std::size_t j);

/// Hom(-, A) applied to f : from -> to, as a map between projectives over
/// the opposite algebra (slots of `to` -> slots of `from`).
[[nodiscard]] RepMap transpose_to_opposite(const AlgebraPtr& a, const ProjSum& from, const ProjSum& to, const RepMap& f);

/// Map sending the generator of source slot j to the generator of target
/// slot target_slot[j], or to zero when target_slot[j] < 0.
[[nodiscard]] RepMap slot_map(const AlgebraPtr& a, const ProjSum& from, const ProjSum& to,
                              const std::vector<long>& target_slot);

/// x + y in canonical slot order with its injections and projections.
struct ProjBiproduct {
    ProjSum sum;
    RepMap in1, in2, pr1, pr2;
};
[[nodiscard]] ProjBiproduct proj_biproduct(const AlgebraPtr& a, const ProjSum& x, const ProjSum& y);

}  // namespace tautilt
