#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tautilt/fp_matrix.hpp"

namespace tautilt {

/// Raised for malformed algebra descriptions: unknown names, bad relations,
/// or a path closure that does not terminate within the length cap.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

/// A path is a sequence of arrow indices, first-applied first. The trivial
/// path at a vertex is the empty sequence together with that vertex.
struct PathTerm {
    long long coeff = 1;
    std::vector<std::size_t> arrows;
};
using Relation = std::vector<PathTerm>;

/// Input description of kQ/I. Relation paths must be nonempty; the vertex of
/// every term is implied by its arrows.
struct QuiverSpec {
    std::uint32_t p = 2;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
};

[[nodiscard]] QuiverSpec parse_quiver_spec(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json to_json(const QuiverSpec& spec);

struct BasisPath {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;
};

/// Element of an algebra: coordinates over its basis (column vector).
using AlgElement = FpMatrix;

/// Bound quiver algebra A = kQ/I with a computed path basis. Left modules:
/// a path from i to j acts from the vertex-i space to the vertex-j space.
/// The product x*y means "apply y, then x" on left modules, so for paths
/// path(x)*path(y) = concatenation(path(y), path(x)).
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
    struct Token {};

public:
    static constexpr std::size_t kDefaultLengthCap = 32;

    BoundQuiverAlgebra(Token, QuiverSpec spec, std::size_t length_cap);

    static std::shared_ptr<const BoundQuiverAlgebra> create(QuiverSpec spec,
                                                            std::size_t length_cap = kDefaultLengthCap);

    [[nodiscard]] std::uint32_t p() const { return spec_.p; }
    [[nodiscard]] const QuiverSpec& spec() const { return spec_; }
    [[nodiscard]] std::size_t vertex_count() const { return spec_.vertices.size(); }
    [[nodiscard]] const std::string& vertex_name(std::size_t v) const { return spec_.vertices.at(v); }
    [[nodiscard]] std::size_t vertex_index(const std::string& name) const;
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return spec_.arrows; }
    [[nodiscard]] std::size_t arrow_index(const std::string& name) const;

    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<BasisPath>& basis() const { return basis_; }
    [[nodiscard]] std::size_t trivial_path(std::size_t v) const { return trivial_.at(v); }
    /// Indices of basis paths from `from` to `to`, in basis order.
    [[nodiscard]] const std::vector<std::size_t>& paths_between(std::size_t from, std::size_t to) const;
    /// Nilpotency index bound: every path of this length is zero.
    [[nodiscard]] std::size_t loewy_bound() const { return loewy_bound_; }

    /// Coordinates of a path (possibly outside the basis) starting at `source`.
    [[nodiscard]] AlgElement reduce_path(std::size_t source, const std::vector<std::size_t>& arrows) const;
    [[nodiscard]] AlgElement basis_element(std::size_t i) const;
    [[nodiscard]] AlgElement zero() const { return FpMatrix(dim(), 1, p()); }
    [[nodiscard]] AlgElement one() const;
    /// x*y: apply y first.
    [[nodiscard]] AlgElement multiply(const AlgElement& x, const AlgElement& y) const;
    /// Coordinates of basis(i) * basis(j).
    [[nodiscard]] const AlgElement& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }

    /// Opposite algebra (arrows and relations reversed). The opposite of the
    /// opposite is this object.
    [[nodiscard]] std::shared_ptr<const BoundQuiverAlgebra> opposite() const;

    [[nodiscard]] std::string path_name(const BasisPath& b) const;

private:
    void compute_basis(std::size_t length_cap);

    QuiverSpec spec_;
    std::vector<BasisPath> basis_;
    std::vector<std::size_t> trivial_;
    std::vector<std::vector<std::size_t>> between_;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, AlgElement> reductions_;
    std::vector<AlgElement> products_;
    std::size_t loewy_bound_ = 1;

    mutable std::mutex op_mutex_;
    mutable std::shared_ptr<const BoundQuiverAlgebra> op_strong_;
    mutable std::weak_ptr<const BoundQuiverAlgebra> op_weak_;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

[[nodiscard]] AlgebraPtr parse_algebra(const nlohmann::json& doc, std::size_t length_cap = BoundQuiverAlgebra::kDefaultLengthCap);
[[nodiscard]] AlgebraPtr load_algebra(const std::string& path, std::size_t length_cap = BoundQuiverAlgebra::kDefaultLengthCap);

/// Same quiver, relations and field.
[[nodiscard]] bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

}  // namespace tautilt
