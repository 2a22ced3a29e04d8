#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tautilt/fp_matrix.hpp"

namespace tautilt {

/// A linear map between two vertex spaces: mat is dims[target] x dims[source].
struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    FpMatrix mat;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Representation of a finite quiver without relations: the common substrate
/// for modules (edges = arrows) and complexes of projectives (edges = arrows
/// plus differentials).
struct Rep {
    std::uint32_t p = 2;
    std::vector<std::size_t> dims;
    std::vector<Edge> edges;

    [[nodiscard]] std::size_t total() const;
    /// Offset of vertex v in the flattened total space.
    [[nodiscard]] std::size_t offset(std::size_t v) const;
    friend bool operator==(const Rep&, const Rep&) = default;
};

/// Per-vertex matrices, f[v] : dims_M[v] -> dims_N[v].
using RepMap = std::vector<FpMatrix>;

[[nodiscard]] bool same_shape(const Rep& a, const Rep& b);
[[nodiscard]] RepMap identity_map(const Rep& m);
[[nodiscard]] RepMap zero_map(const Rep& from, const Rep& to);
/// g after f.
[[nodiscard]] RepMap compose(const RepMap& g, const RepMap& f);
[[nodiscard]] RepMap add_maps(const RepMap& a, const RepMap& b);
[[nodiscard]] RepMap scale_map(const RepMap& a, Residue s);
[[nodiscard]] bool is_zero_map(const RepMap& f);
[[nodiscard]] bool is_iso_map(const RepMap& f);
[[nodiscard]] std::optional<RepMap> inverse_map(const RepMap& f);
[[nodiscard]] bool is_morphism(const Rep& from, const Rep& to, const RepMap& f);
/// Flattened coordinates (vertex by vertex, row-major) as one column.
[[nodiscard]] FpMatrix flatten(const RepMap& f, std::uint32_t p);
[[nodiscard]] RepMap unflatten(const FpMatrix& column, std::size_t col, const Rep& from, const Rep& to);
/// Total block-diagonal matrix of f.
[[nodiscard]] FpMatrix total_matrix(const RepMap& f, const Rep& from, const Rep& to);

/// Columns span Hom(from, to) in flattened coordinates.
[[nodiscard]] FpMatrix hom_space(const Rep& from, const Rep& to);
[[nodiscard]] std::vector<RepMap> hom_basis(const Rep& from, const Rep& to);
[[nodiscard]] std::size_t hom_dim(const Rep& from, const Rep& to);

[[nodiscard]] Rep direct_sum(const Rep& a, const Rep& b);
[[nodiscard]] Rep direct_sum(const std::vector<Rep>& parts, const Rep& shape_of_zero);
/// Change of basis: returns the rep with edges g_t^{-1} M_e g_s.
[[nodiscard]] Rep conjugate(const Rep& m, const RepMap& g);

/// Subrepresentation on invariant subspaces (columns of basis[v]).
[[nodiscard]] Rep restrict_to(const Rep& m, const std::vector<FpMatrix>& basis);

struct Subobject {
    Rep object;
    RepMap map;  // inclusion into, or projection from, the ambient rep
};
[[nodiscard]] Subobject kernel_of(const Rep& from, const Rep& to, const RepMap& f);
[[nodiscard]] Subobject image_of(const Rep& from, const Rep& to, const RepMap& f);
/// object = to / im f; map = projection to -> object.
[[nodiscard]] Subobject cokernel_of(const Rep& from, const Rep& to, const RepMap& f);
/// Submodule generated by the columns of gens (vectors in the flattened total space).
[[nodiscard]] Subobject generated_by(const Rep& m, const FpMatrix& gens);

struct Summand {
    Rep object;
    RepMap inclusion;   // object -> ambient
    RepMap projection;  // ambient -> object
};

/// Krull-Schmidt splitting; projection_i * inclusion_j = delta_ij.
[[nodiscard]] std::vector<Summand> decompose(const Rep& m, std::uint64_t seed = 1);
[[nodiscard]] bool is_indecomposable(const Rep& m, std::uint64_t seed = 1);
/// Witness f : a -> b, invertible, when a and b are isomorphic.
[[nodiscard]] std::optional<RepMap> isomorphism(const Rep& a, const Rep& b, std::uint64_t seed = 1);

/// Lexicographic order on (total, dims, edge entries); deterministic listing.
[[nodiscard]] bool canonical_less(const Rep& a, const Rep& b);

}  // namespace tautilt
