#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/cotorsion.hpp"

namespace tautilt {

/// Algebra by structure constants: left[i] is left multiplication by basis element i.
struct SCAlgebra {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<FpMatrix> left;
    FpMatrix unit;

    [[nodiscard]] FpMatrix product(const FpMatrix& x, const FpMatrix& y) const;
    /// Coefficient of basis element k in e_i e_j.
    [[nodiscard]] Residue constant(std::size_t i, std::size_t j, std::size_t k) const { return left[i](k, j); }
};
[[nodiscard]] bool is_associative(const SCAlgebra& b);
[[nodiscard]] bool is_unital(const SCAlgebra& b);

/// product(i, j): coordinates of e_i e_j; unit: coordinates of 1. Throws if not associative and unital.
[[nodiscard]] SCAlgebra sc_algebra_from_endo(std::uint32_t p, std::size_t dim,
                                             const std::function<FpMatrix(std::size_t, std::size_t)>& product,
                                             const FpMatrix& unit);
/// Span of linear endomorphisms under composition (e_i e_j = maps[i] * maps[j]).
[[nodiscard]] SCAlgebra sc_algebra_from_endo(const std::vector<FpMatrix>& maps);

/// Left module: action[i] is the matrix of basis element i.
struct SCModule {
    std::shared_ptr<const SCAlgebra> algebra;
    std::size_t dim = 0;
    std::vector<FpMatrix> action;
};
[[nodiscard]] bool is_sc_module(const SCModule& m);
[[nodiscard]] std::size_t sc_hom_dim(const SCModule& m, const SCModule& n);
[[nodiscard]] FpMatrix sc_element_action(const SCModule& m, const FpMatrix& x);

/// B = End_K(P)^op, so that Hom(P, -) is a left B-module by precomposition.
struct EndAlgebra {
    ProjComplex p;                      // direct sum of the basic summands
    std::vector<ProjComplex> summands;  // vertex i of the presentation
    std::vector<ChainMap> basis;        // basis of End_K(P)
    std::shared_ptr<const SCAlgebra> sc;
    std::vector<FpMatrix> idempotents;  // B-coordinates of the summand projections
    std::vector<FpMatrix> arrows;       // B-coordinates of each quiver arrow
    AlgebraPtr quiver;                  // kQ/I isomorphic to B
    FpMatrix path_coords;               // column q: B-coordinates of quiver basis path q
};
/// Requires every End_K(P_i) to be split local.
[[nodiscard]] EndAlgebra end_algebra(const ProjComplex& p);

[[nodiscard]] ModuleRep to_quiver_module(const EndAlgebra& e, const SCModule& m);
[[nodiscard]] SCModule to_sc_module(const EndAlgebra& e, const ModuleRep& m);

/// H^degree of the Hom complex Hom_A(P, M), B acting by precomposition.
[[nodiscard]] SCModule bb_functor(const EndAlgebra& e, const ModuleRep& m, int degree);
/// Hom_K(P, X) with B acting by precomposition.
[[nodiscard]] SCModule hom_from_p(const EndAlgebra& e, const ProjComplex& x);

struct BBReport {
    EndAlgebra end;
    Subcat t, f;                // T(P), F(P) in mod A
    std::vector<SCModule> x, y;  // X(P) from F(P) in degree 1, Y(P) from T(P) in degree 0
    std::size_t b_indecs = 0;
    std::vector<Check> checks;
    std::vector<std::string> skipped;  // checks that do not apply to this P, with the reason

    [[nodiscard]] bool pass() const;
    [[nodiscard]] const Check& check(const std::string& name) const;
};
[[nodiscard]] BBReport bb_report(const ProjComplex& p, const ModUniverse& mods, const KUniverse& universe,
                                 const EnumerationOptions& opt);
[[nodiscard]] nlohmann::json bb_to_json(const BBReport& r);

}  // namespace tautilt
