#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/algebra.hpp"
#include "tautilt/rep.hpp"

namespace tautilt {

/// Raised when a brute-force search would exceed its configured size limit.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Left A-module as a representation: edge i of `rep` is arrow i of A.
struct ModuleRep {
    AlgebraPtr algebra;
    Rep rep;

    [[nodiscard]] const std::vector<std::size_t>& dims() const { return rep.dims; }
    [[nodiscard]] std::size_t total() const { return rep.total(); }
    [[nodiscard]] const FpMatrix& mat(std::size_t arrow) const { return rep.edges.at(arrow).mat; }
    [[nodiscard]] bool is_zero() const { return total() == 0; }
};

struct ModuleSummand {
    ModuleRep object;
    RepMap inclusion;
    RepMap projection;
};

/// Validates shapes and relations.
[[nodiscard]] ModuleRep make_module(const AlgebraPtr& a, std::vector<std::size_t> dims, std::vector<FpMatrix> mats);
[[nodiscard]] bool satisfies_relations(const BoundQuiverAlgebra& a, const Rep& r);
[[nodiscard]] Rep empty_shape(const BoundQuiverAlgebra& a);

/// Matrix of a path (first-applied-first) from the source space to the target space.
[[nodiscard]] FpMatrix path_action(const ModuleRep& m, std::size_t source, const std::vector<std::size_t>& arrows);
/// Action of an algebra element on the flattened total space.
[[nodiscard]] FpMatrix element_action(const ModuleRep& m, const AlgElement& x);

[[nodiscard]] ModuleRep zero_module(const AlgebraPtr& a);
[[nodiscard]] ModuleRep simple_module(const AlgebraPtr& a, std::size_t v);
[[nodiscard]] ModuleRep projective_module(const AlgebraPtr& a, std::size_t v);
[[nodiscard]] ModuleRep injective_module(const AlgebraPtr& a, std::size_t v);
/// Regular module A = sum of all P_v.
[[nodiscard]] ModuleRep regular_module(const AlgebraPtr& a);
/// D = Hom_k(-, k): a module over the opposite algebra.
[[nodiscard]] ModuleRep dual_module(const ModuleRep& m);
/// D applied to a morphism f : m -> n gives D n -> D m.
[[nodiscard]] RepMap dual_map(const RepMap& f);

[[nodiscard]] ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
[[nodiscard]] ModuleRep direct_sum(const std::vector<ModuleRep>& parts, const AlgebraPtr& a);

[[nodiscard]] std::vector<RepMap> hom_basis(const ModuleRep& m, const ModuleRep& n);
[[nodiscard]] std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n);

[[nodiscard]] std::vector<ModuleSummand> decompose_with_maps(const ModuleRep& m, std::uint64_t seed = 1);
[[nodiscard]] std::vector<ModuleRep> decompose(const ModuleRep& m, std::uint64_t seed = 1);
[[nodiscard]] bool is_indecomposable(const ModuleRep& m);
[[nodiscard]] std::optional<RepMap> is_isomorphic(const ModuleRep& m, const ModuleRep& n);

/// Submodule / quotient helpers on top of the Rep layer.
[[nodiscard]] ModuleRep as_module(const AlgebraPtr& a, Rep r);

struct EnumerationOptions {
    std::size_t bound = 6;
    double guard = 1e7;
};

/// All indecomposables of total dimension <= bound up to isomorphism, in
/// canonical order (total dimension, dimension vector, matrix entries).
[[nodiscard]] std::vector<ModuleRep> enumerate_indecomposables(const AlgebraPtr& a, const EnumerationOptions& opt);
/// Number of matrix tuples the enumerator would visit.
[[nodiscard]] double enumeration_size(const BoundQuiverAlgebra& a, std::size_t bound);

[[nodiscard]] std::string dim_vector_string(const std::vector<std::size_t>& dims);
/// Dimension vector plus "#k", k counting earlier modules with the same vector.
[[nodiscard]] std::vector<std::string> module_names(const std::vector<ModuleRep>& modules);

[[nodiscard]] nlohmann::json module_to_json(const ModuleRep& m);
[[nodiscard]] ModuleRep module_from_json(const AlgebraPtr& a, const nlohmann::json& doc);

/// Index of the listed module isomorphic to m, if any.
[[nodiscard]] std::optional<std::size_t> find_isomorphic(const std::vector<ModuleRep>& list, const ModuleRep& m);

/// Multiplicities of each listed indecomposable in m; nullopt if some
/// summand of m is not in the list.
[[nodiscard]] std::optional<std::vector<std::size_t>> multiplicities(const std::vector<ModuleRep>& list, const ModuleRep& m);

}  // namespace tautilt
