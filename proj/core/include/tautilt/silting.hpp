#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/complex.hpp"

namespace tautilt {

/// Named indecomposable object of the homotopy category.
struct KObject {
    std::string name;
    ProjComplex complex;
};

/// An approximation map between Z and a sum of listed objects.
struct KApprox {
    ProjComplex object;             // the sum of listed objects
    ChainMap map;                   // Z -> object (left) or object -> Z (right)
    std::vector<std::size_t> uses;  // list index of each summand, with repetition
};

/// Left approximation of Z by add(list): every map Z -> L factors through it.
[[nodiscard]] KApprox left_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, bool minimal = true);
/// Right approximation of Z by add(list).
[[nodiscard]] KApprox right_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, bool minimal = true);
[[nodiscard]] bool is_left_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, const KApprox& a);
[[nodiscard]] bool is_right_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, const KApprox& a);

/// Index in list of the object isomorphic to x in the homotopy category.
[[nodiscard]] std::optional<std::size_t> find_isomorphic_k(const std::vector<ProjComplex>& list, const ProjComplex& x);
/// Multiplicity of each listed indecomposable in x; nullopt if x is not in add(list).
[[nodiscard]] std::optional<std::vector<std::size_t>> k_multiplicities(const std::vector<ProjComplex>& list, const ProjComplex& x);
[[nodiscard]] bool in_add(const std::vector<ProjComplex>& list, const ProjComplex& x);
/// Pairwise non-isomorphic indecomposable summands.
[[nodiscard]] std::vector<ProjComplex> basic_summands(const ProjComplex& x);

struct SiltingTest {
    bool presilting = false;
    bool silting = false;
    std::size_t summands = 0;
};
[[nodiscard]] SiltingTest silting_test(const ProjComplex& x);

/// Indecomposables of the two-term category: P_M for each listed module and P_v[1].
[[nodiscard]] std::vector<KObject> two_term_indecomposables(const AlgebraPtr& a, const std::vector<ModuleRep>& modules);
[[nodiscard]] ProjComplex shifted_projective(const AlgebraPtr& a, std::size_t v);

struct TwoTermSilting {
    std::vector<std::size_t> members;  // indices into the candidate list
    std::vector<KObject> summands;
    ProjComplex complex;
    std::string name;
};

/// Basic two-term silting complexes, by cliques of the E-compatibility graph
/// over the presilting indecomposables.
[[nodiscard]] std::vector<TwoTermSilting> enumerate_two_term_silting(const AlgebraPtr& a, const std::vector<ModuleRep>& modules);

struct BongartzTriangle {
    ProjComplex a_stalk, v, u;
    ChainMap approx;  // A -> V
    bool u_in_add = false;
    bool v_in_add = false;
};
/// A -> V -> U -> A[1] from the minimal left add(P)-approximation of A.
[[nodiscard]] BongartzTriangle bongartz_triangle(const ProjComplex& p);

[[nodiscard]] std::string complex_name(const AlgebraPtr& a, const ProjComplex& x, const std::vector<KObject>& named);

}  // namespace tautilt
