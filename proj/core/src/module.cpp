#include "tautilt/module.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tautilt {

namespace {

void require_same(const ModuleRep& a, const ModuleRep& b) {
    if (!same_algebra(*a.algebra, *b.algebra)) throw UsageError("modules over different algebras");
}

// Dimension vectors with the given total in lexicographic order.
void dim_vectors(std::size_t n, std::size_t total, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t d = 0; d <= total; ++d) {
        cur.push_back(d);
        dim_vectors(n, total - d, cur, out);
        cur.pop_back();
    }
}

bool connected_support(const BoundQuiverAlgebra& a, const std::vector<std::size_t>& dims) {
    const std::size_t n = dims.size();
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    auto find = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& ar : a.arrows())
        if (dims[ar.source] && dims[ar.target]) comp[find(ar.source)] = find(ar.target);
    std::size_t root = n;
    for (std::size_t v = 0; v < n; ++v) {
        if (!dims[v]) continue;
        if (root == n) root = find(v);
        else if (find(v) != root) return false;
    }
    return true;
}

}  // namespace

Rep empty_shape(const BoundQuiverAlgebra& a) {
    Rep r{a.p(), std::vector<std::size_t>(a.vertex_count(), 0), {}};
    for (const auto& ar : a.arrows()) r.edges.push_back({ar.source, ar.target, FpMatrix(0, 0, a.p())});
    return r;
}

bool satisfies_relations(const BoundQuiverAlgebra& a, const Rep& r) {
    const PrimeField f(a.p());
    for (const auto& rel : a.spec().relations) {
        std::map<std::pair<std::size_t, std::size_t>, FpMatrix> parts;
        for (const auto& t : rel) {
            const std::size_t s = a.arrows()[t.arrows.front()].source;
            const std::size_t tg = a.arrows()[t.arrows.back()].target;
            FpMatrix m = FpMatrix::identity(r.dims[s], a.p());
            for (auto ar : t.arrows) m = r.edges[ar].mat * m;
            m = m.scaled(f.reduce(t.coeff));
            auto it = parts.find({s, tg});
            if (it == parts.end()) parts.emplace(std::make_pair(s, tg), m);
            else it->second += m;
        }
        for (const auto& [k, m] : parts)
            if (!m.is_zero()) return false;
    }
    return true;
}

ModuleRep make_module(const AlgebraPtr& a, std::vector<std::size_t> dims, std::vector<FpMatrix> mats) {
    if (dims.size() != a->vertex_count()) throw UsageError("dimension vector has the wrong length");
    if (mats.size() != a->arrows().size()) throw UsageError("one matrix per arrow is required");
    Rep r{a->p(), std::move(dims), {}};
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const auto& ar = a->arrows()[i];
        if (mats[i].p() != a->p()) throw UsageError("matrix over the wrong field");
        if (mats[i].rows() != r.dims[ar.target] || mats[i].cols() != r.dims[ar.source])
            throw UsageError("matrix shape does not match arrow '" + ar.name + "'");
        r.edges.push_back({ar.source, ar.target, std::move(mats[i])});
    }
    if (!satisfies_relations(*a, r)) throw UsageError("matrices violate a relation");
    return {a, std::move(r)};
}

ModuleRep as_module(const AlgebraPtr& a, Rep r) { return {a, std::move(r)}; }

FpMatrix path_action(const ModuleRep& m, std::size_t source, const std::vector<std::size_t>& arrows) {
    FpMatrix out = FpMatrix::identity(m.dims()[source], m.algebra->p());
    for (auto ar : arrows) out = m.mat(ar) * out;
    return out;
}

FpMatrix element_action(const ModuleRep& m, const AlgElement& x) {
    const auto& a = *m.algebra;
    FpMatrix out(m.total(), m.total(), a.p());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x(i, 0) == 0) continue;
        const auto& b = a.basis()[i];
        FpMatrix blk(m.total(), m.total(), a.p());
        blk.set_block(m.rep.offset(b.target), m.rep.offset(b.source), path_action(m, b.source, b.arrows));
        out += blk.scaled(x(i, 0));
    }
    return out;
}

ModuleRep zero_module(const AlgebraPtr& a) { return {a, empty_shape(*a)}; }

ModuleRep simple_module(const AlgebraPtr& a, std::size_t v) {
    std::vector<std::size_t> dims(a->vertex_count(), 0);
    dims.at(v) = 1;
    std::vector<FpMatrix> mats;
    for (const auto& ar : a->arrows()) mats.emplace_back(dims[ar.target], dims[ar.source], a->p());
    return make_module(a, dims, mats);
}

ModuleRep projective_module(const AlgebraPtr& a, std::size_t v) {
    const std::size_t n = a->vertex_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t w = 0; w < n; ++w) dims[w] = a->paths_between(v, w).size();
    std::vector<FpMatrix> mats;
    for (std::size_t ai = 0; ai < a->arrows().size(); ++ai) {
        const auto& ar = a->arrows()[ai];
        const auto& src = a->paths_between(v, ar.source);
        const auto& tgt = a->paths_between(v, ar.target);
        FpMatrix m(tgt.size(), src.size(), a->p());
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto path = a->basis()[src[j]].arrows;
            path.push_back(ai);
            const AlgElement x = a->reduce_path(v, path);
            for (std::size_t i = 0; i < tgt.size(); ++i) m(i, j) = x(tgt[i], 0);
        }
        mats.push_back(std::move(m));
    }
    return make_module(a, dims, mats);
}

ModuleRep dual_module(const ModuleRep& m) {
    auto op = m.algebra->opposite();
    std::vector<FpMatrix> mats;
    for (const auto& e : m.rep.edges) mats.push_back(e.mat.transpose());
    return make_module(op, m.dims(), mats);
}

RepMap dual_map(const RepMap& f) {
    RepMap out;
    for (const auto& x : f) out.push_back(x.transpose());
    return out;
}

ModuleRep injective_module(const AlgebraPtr& a, std::size_t v) {
    return dual_module(projective_module(a->opposite(), v));
}

ModuleRep regular_module(const AlgebraPtr& a) {
    std::vector<ModuleRep> parts;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) parts.push_back(projective_module(a, v));
    return direct_sum(parts, a);
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    require_same(a, b);
    return {a.algebra, direct_sum(a.rep, b.rep)};
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts, const AlgebraPtr& a) {
    std::vector<Rep> reps;
    for (const auto& m : parts) reps.push_back(m.rep);
    return {a, direct_sum(reps, empty_shape(*a))};
}

std::vector<RepMap> hom_basis(const ModuleRep& m, const ModuleRep& n) {
    require_same(m, n);
    return hom_basis(m.rep, n.rep);
}

std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n) {
    require_same(m, n);
    return hom_dim(m.rep, n.rep);
}

std::vector<ModuleSummand> decompose_with_maps(const ModuleRep& m, std::uint64_t seed) {
    std::vector<ModuleSummand> out;
    for (auto& s : decompose(m.rep, seed)) out.push_back({{m.algebra, std::move(s.object)}, std::move(s.inclusion), std::move(s.projection)});
    return out;
}

std::vector<ModuleRep> decompose(const ModuleRep& m, std::uint64_t seed) {
    std::vector<ModuleRep> out;
    for (auto& s : decompose(m.rep, seed)) out.push_back({m.algebra, std::move(s.object)});
    return out;
}

bool is_indecomposable(const ModuleRep& m) { return is_indecomposable(m.rep); }

std::optional<RepMap> is_isomorphic(const ModuleRep& m, const ModuleRep& n) {
    require_same(m, n);
    return isomorphism(m.rep, n.rep);
}

double enumeration_size(const BoundQuiverAlgebra& a, std::size_t bound) {
    double total = 0;
    for (std::size_t t = 1; t <= bound; ++t) {
        std::vector<std::vector<std::size_t>> dvs;
        std::vector<std::size_t> cur;
        dim_vectors(a.vertex_count(), t, cur, dvs);
        for (const auto& d : dvs) {
            if (!connected_support(a, d)) continue;
            double entries = 0;
            for (const auto& ar : a.arrows()) entries += static_cast<double>(d[ar.source] * d[ar.target]);
            total += std::pow(static_cast<double>(a.p()), entries);
        }
    }
    return total;
}

std::vector<ModuleRep> enumerate_indecomposables(const AlgebraPtr& a, const EnumerationOptions& opt) {
    if (opt.bound == 0) throw UsageError("dimension bound must be at least 1");
    const double size = enumeration_size(*a, opt.bound);
    if (size > opt.guard)
        throw GuardError("enumeration would visit " + std::to_string(static_cast<long long>(size)) +
                         " matrix tuples, above the guard of " + std::to_string(static_cast<long long>(opt.guard)));
    std::vector<ModuleRep> found;
    for (std::size_t t = 1; t <= opt.bound; ++t) {
        std::vector<std::vector<std::size_t>> dvs;
        std::vector<std::size_t> cur;
        dim_vectors(a->vertex_count(), t, cur, dvs);
        for (const auto& d : dvs) {
            if (!connected_support(*a, d)) continue;
            Rep r{a->p(), d, {}};
            std::vector<std::pair<std::size_t, std::size_t>> slots;  // (edge, flat index)
            for (std::size_t ai = 0; ai < a->arrows().size(); ++ai) {
                const auto& ar = a->arrows()[ai];
                r.edges.push_back({ar.source, ar.target, FpMatrix(d[ar.target], d[ar.source], a->p())});
                for (std::size_t k = 0; k < d[ar.source] * d[ar.target]; ++k) slots.emplace_back(ai, k);
            }
            const std::size_t first_of_dims = found.size();
            while (true) {
                if (satisfies_relations(*a, r) && is_indecomposable(r)) {
                    bool dup = false;
                    for (std::size_t i = first_of_dims; i < found.size() && !dup; ++i)
                        dup = isomorphism(found[i].rep, r).has_value();
                    if (!dup) found.push_back({a, r});
                }
                // odometer: last slot is the least significant digit
                std::size_t i = slots.size();
                while (i > 0) {
                    auto [e, k] = slots[i - 1];
                    auto& m = r.edges[e].mat;
                    Residue& x = m(k / m.cols(), k % m.cols());
                    if (x + 1 < a->p()) {
                        ++x;
                        break;
                    }
                    x = 0;
                    --i;
                }
                if (i == 0) break;
            }
        }
    }
    return found;
}

std::string dim_vector_string(const std::vector<std::size_t>& dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + "]";
}

std::vector<std::string> module_names(const std::vector<ModuleRep>& modules) {
    std::vector<std::string> out;
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (const auto& m : modules) out.push_back(dim_vector_string(m.dims()) + "#" + std::to_string(seen[m.dims()]++));
    return out;
}

nlohmann::json module_to_json(const ModuleRep& m) {
    nlohmann::json doc;
    doc["dims"] = m.dims();
    doc["mats"] = nlohmann::json::object();
    for (std::size_t i = 0; i < m.algebra->arrows().size(); ++i) {
        const auto& mat = m.mat(i);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            auto row = mat.row(r);
            rows.push_back(std::vector<Residue>(row.begin(), row.end()));
        }
        doc["mats"][m.algebra->arrows()[i].name] = rows;
    }
    return doc;
}

ModuleRep module_from_json(const AlgebraPtr& a, const nlohmann::json& doc) {
    try {
        auto dims = doc.at("dims").get<std::vector<std::size_t>>();
        if (dims.size() != a->vertex_count()) throw ParseError("dims has the wrong length");
        std::vector<FpMatrix> mats;
        for (const auto& ar : a->arrows()) {
            const std::size_t rows = dims[ar.target], cols = dims[ar.source];
            if (!doc.at("mats").contains(ar.name)) {
                if (rows * cols != 0) throw ParseError("missing matrix for arrow '" + ar.name + "'");
                mats.emplace_back(rows, cols, a->p());
                continue;
            }
            auto entries = doc.at("mats").at(ar.name).get<std::vector<std::vector<long long>>>();
            if (entries.size() != rows) throw ParseError("matrix for arrow '" + ar.name + "' has the wrong shape");
            for (const auto& row : entries)
                if (row.size() != cols) throw ParseError("matrix for arrow '" + ar.name + "' has the wrong shape");
            mats.push_back(FpMatrix::from_rows(entries, a->p(), cols));
        }
        return make_module(a, dims, mats);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed module file: ") + e.what());
    } catch (const UsageError& e) {
        throw ParseError(std::string("invalid module: ") + e.what());
    }
}

std::optional<std::size_t> find_isomorphic(const std::vector<ModuleRep>& list, const ModuleRep& m) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].dims() == m.dims() && is_isomorphic(list[i], m)) return i;
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> multiplicities(const std::vector<ModuleRep>& list, const ModuleRep& m) {
    std::vector<std::size_t> mult(list.size(), 0);
    for (const auto& s : decompose(m)) {
        auto i = find_isomorphic(list, s);
        if (!i) return std::nullopt;
        ++mult[*i];
    }
    return mult;
}

}  // namespace tautilt
