#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/projective.hpp"

namespace tautilt {

/// Bounded complex of finitely generated projectives (cohomological
/// degrees low .. low + terms.size() - 1). Two-term complexes live in
/// degrees -1 and 0.
struct ProjComplex {
    AlgebraPtr algebra;
    int low = -1;
    std::vector<ProjSum> terms;
    std::vector<ModuleRep> modules;  // proj_module of each term
    std::vector<RepMap> diffs;       // diffs[k] : modules[k] -> modules[k + 1]

    [[nodiscard]] int high() const { return low + static_cast<int>(terms.size()) - 1; }
    [[nodiscard]] ProjSum term(int deg) const;
    [[nodiscard]] ModuleRep module(int deg) const;
    /// Differential out of degree deg (zero outside the stored range).
    [[nodiscard]] RepMap diff(int deg) const;
    [[nodiscard]] bool is_zero() const;
};

/// Chain map X -> Y[shift]; comps[k] is the component out of degree X.low + k.
struct ChainMap {
    int shift = 0;
    std::vector<RepMap> comps;
};

[[nodiscard]] ProjComplex make_complex(const AlgebraPtr& a, int low, std::vector<ProjSum> terms, std::vector<RepMap> diffs);
[[nodiscard]] ProjComplex zero_complex(const AlgebraPtr& a);
[[nodiscard]] ProjComplex stalk(const AlgebraPtr& a, const ProjSum& p, int degree = 0);
/// p1 -> p0 in degrees -1, 0.
[[nodiscard]] ProjComplex two_term(const AlgebraPtr& a, const ProjSum& p1, const ProjSum& p0, RepMap d);
/// Minimal projective presentation P_M.
[[nodiscard]] ProjComplex presentation_complex(const ModuleRep& m);
/// X[n]: degree k holds X^{k+n}, differential (-1)^n d.
[[nodiscard]] ProjComplex shift(const ProjComplex& x, int n);
/// Same complex with zero terms padded so that it spans [lo, hi].
[[nodiscard]] ProjComplex pad(const ProjComplex& x, int lo, int hi);
/// Drops zero terms at both ends; the zero complex becomes the empty two-term complex.
[[nodiscard]] ProjComplex trim(const ProjComplex& x);
[[nodiscard]] ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);
[[nodiscard]] ProjComplex direct_sum(const std::vector<ProjComplex>& parts, const AlgebraPtr& a);

struct ComplexSum;

[[nodiscard]] bool is_chain_map(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);
/// Component of f out of degree deg of X (zero outside the stored range).
[[nodiscard]] RepMap component(const ChainMap& f, const ProjComplex& x, const ProjComplex& y, int deg);

/// Chain maps X -> Y[shift] modulo null-homotopic maps.
struct KHom {
    std::size_t dim = 0;
    std::size_t chain_dim = 0;
    std::size_t homotopy_rank = 0;
    std::vector<ChainMap> basis;
};
[[nodiscard]] KHom hom_k(const ProjComplex& x, const ProjComplex& y, int shift);
[[nodiscard]] std::size_t hom_k_dim(const ProjComplex& x, const ProjComplex& y, int shift);
/// Whether f : X -> Y[shift] is null-homotopic.
[[nodiscard]] bool is_null_homotopic(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);
/// Dimension of the span of the given chain maps X -> Y[shift] in the homotopy category.
[[nodiscard]] std::size_t k_span_dim(const ProjComplex& x, const ProjComplex& y, int shift, const std::vector<ChainMap>& maps);
/// Coefficients of f in the given basis of Hom_K(X, Y[shift]); nullopt if f is outside its span.
[[nodiscard]] std::optional<FpMatrix> k_coordinates(const ProjComplex& x, const ProjComplex& y, int shift,
                                                   const std::vector<ChainMap>& basis, const ChainMap& f);

/// g o f for f : X -> Y[s] and g : Y -> Z[t].
[[nodiscard]] ChainMap compose(const ChainMap& g, const ChainMap& f, const ProjComplex& x, const ProjComplex& y,
                               const ProjComplex& z);
[[nodiscard]] ChainMap identity_chain(const ProjComplex& x);
[[nodiscard]] ChainMap zero_chain(const ProjComplex& x, const ProjComplex& y, int shift);
[[nodiscard]] ChainMap add_chains(const ChainMap& f, const ChainMap& g);
[[nodiscard]] ChainMap scale_chain(const ChainMap& f, Residue s);

struct ComplexSum {
    ProjComplex sum;
    std::vector<ChainMap> in;  // parts[i] -> sum
    std::vector<ChainMap> pr;  // sum -> parts[i]
};
[[nodiscard]] ComplexSum direct_sum_with_maps(const std::vector<ProjComplex>& parts, const AlgebraPtr& a);

/// H^deg as an A-module.
[[nodiscard]] ModuleRep homology(const ProjComplex& x, int deg);
[[nodiscard]] ModuleRep h0(const ProjComplex& x);
[[nodiscard]] ModuleRep h_minus1(const ProjComplex& x);

struct Minimized {
    ProjComplex complex;
    ChainMap iota;  // complex -> original
    ChainMap pi;    // original -> complex
};
/// Removes contractible summands until every differential is radical.
[[nodiscard]] Minimized minimize(const ProjComplex& x);
/// Minimal model in degrees -1, 0 when X is homotopy equivalent to a two-term complex.
[[nodiscard]] std::optional<ProjComplex> as_two_term(const ProjComplex& x);

/// Mapping cone of a degree-0 chain map f : X -> Y.
[[nodiscard]] ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);

/// Indecomposable summands in the homotopy category, each minimal.
[[nodiscard]] std::vector<ProjComplex> decompose_complex(const ProjComplex& x);
[[nodiscard]] bool is_isomorphic_k(const ProjComplex& x, const ProjComplex& y);

[[nodiscard]] nlohmann::json complex_to_json(const ProjComplex& x);
[[nodiscard]] ProjComplex complex_from_json(const AlgebraPtr& a, const nlohmann::json& doc);

}  // namespace tautilt
