#include "tautilt/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tautilt {

namespace {

std::string name_of(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("expected a vertex or arrow name, got " + v.dump());
}

struct PathKey {
    std::size_t source;
    std::vector<std::size_t> arrows;
};

}  // namespace

QuiverSpec parse_quiver_spec(const nlohmann::json& doc) {
    QuiverSpec spec;
    try {
        spec.p = doc.at("field").at("p").get<std::uint32_t>();
        if (!is_prime(spec.p) || spec.p >= (1u << 15)) throw ParseError("field.p must be a prime below 32768");
        const auto& q = doc.at("quiver");
        for (const auto& v : q.at("vertices")) spec.vertices.push_back(name_of(v));
        auto vidx = [&](const nlohmann::json& n) {
            const std::string s = name_of(n);
            auto it = std::find(spec.vertices.begin(), spec.vertices.end(), s);
            if (it == spec.vertices.end()) throw ParseError("unknown vertex '" + s + "'");
            return static_cast<std::size_t>(it - spec.vertices.begin());
        };
        if (q.contains("arrows"))
            for (const auto& a : q.at("arrows"))
                spec.arrows.push_back({name_of(a.at("name")), vidx(a.at("source")), vidx(a.at("target"))});
        for (std::size_t i = 0; i < spec.arrows.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (spec.arrows[i].name == spec.arrows[j].name)
                    throw ParseError("duplicate arrow name '" + spec.arrows[i].name + "'");
        if (doc.contains("relations")) {
            for (const auto& rel : doc.at("relations")) {
                Relation r;
                for (const auto& term : rel) {
                    PathTerm t;
                    t.coeff = term.contains("coeff") ? term.at("coeff").get<long long>() : 1;
                    for (const auto& an : term.at("path")) {
                        const std::string s = name_of(an);
                        auto it = std::find_if(spec.arrows.begin(), spec.arrows.end(),
                                               [&](const Arrow& a) { return a.name == s; });
                        if (it == spec.arrows.end()) throw ParseError("unknown arrow '" + s + "' in relation");
                        t.arrows.push_back(static_cast<std::size_t>(it - spec.arrows.begin()));
                    }
                    r.push_back(std::move(t));
                }
                spec.relations.push_back(std::move(r));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed algebra spec: ") + e.what());
    }
    return spec;
}

nlohmann::json to_json(const QuiverSpec& spec) {
    nlohmann::json doc;
    doc["field"]["p"] = spec.p;
    doc["quiver"]["vertices"] = spec.vertices;
    doc["quiver"]["arrows"] = nlohmann::json::array();
    for (const auto& a : spec.arrows)
        doc["quiver"]["arrows"].push_back(
            {{"name", a.name}, {"source", spec.vertices[a.source]}, {"target", spec.vertices[a.target]}});
    doc["relations"] = nlohmann::json::array();
    const PrimeField f(spec.p);
    for (const auto& r : spec.relations) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& t : r) {
            nlohmann::json path = nlohmann::json::array();
            for (auto a : t.arrows) path.push_back(spec.arrows[a].name);
            jr.push_back({{"coeff", f.reduce(t.coeff)}, {"path", path}});
        }
        doc["relations"].push_back(jr);
    }
    return doc;
}

BoundQuiverAlgebra::BoundQuiverAlgebra(Token, QuiverSpec spec, std::size_t length_cap) : spec_(std::move(spec)) {
    compute_basis(length_cap);
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::create(QuiverSpec spec, std::size_t length_cap) {
    return std::make_shared<const BoundQuiverAlgebra>(Token{}, std::move(spec), length_cap);
}

std::size_t BoundQuiverAlgebra::vertex_index(const std::string& name) const {
    auto it = std::find(spec_.vertices.begin(), spec_.vertices.end(), name);
    if (it == spec_.vertices.end()) throw ParseError("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - spec_.vertices.begin());
}

std::size_t BoundQuiverAlgebra::arrow_index(const std::string& name) const {
    auto it = std::find_if(spec_.arrows.begin(), spec_.arrows.end(), [&](const Arrow& a) { return a.name == name; });
    if (it == spec_.arrows.end()) throw ParseError("unknown arrow '" + name + "'");
    return static_cast<std::size_t>(it - spec_.arrows.begin());
}

void BoundQuiverAlgebra::compute_basis(std::size_t length_cap) {
    const std::size_t nv = spec_.vertices.size();
    const PrimeField f(spec_.p);
    if (nv == 0) throw ParseError("quiver has no vertices");

    // Split relations into uniform pieces e_t r e_s; each piece lies in the ideal.
    struct Uniform {
        std::size_t source, target, min_len;
        std::vector<PathTerm> terms;
    };
    std::vector<Uniform> uniform;
    for (const auto& rel : spec_.relations) {
        std::map<std::pair<std::size_t, std::size_t>, std::vector<PathTerm>> parts;
        for (const auto& t : rel) {
            if (t.arrows.size() < 2) throw ParseError("relation term of length < 2: ideal is not admissible");
            for (std::size_t i = 1; i < t.arrows.size(); ++i)
                if (spec_.arrows[t.arrows[i - 1]].target != spec_.arrows[t.arrows[i]].source)
                    throw ParseError("relation term is not a composable path");
            if (f.reduce(t.coeff) == 0) continue;
            parts[{spec_.arrows[t.arrows.front()].source, spec_.arrows[t.arrows.back()].target}].push_back(t);
        }
        for (auto& [st, terms] : parts) {
            std::size_t ml = terms.front().arrows.size();
            for (const auto& t : terms) ml = std::min(ml, t.arrows.size());
            uniform.push_back({st.first, st.second, ml, terms});
        }
    }

    // paths_by_len[L]: all composable paths of length L
    std::vector<std::vector<PathKey>> paths_by_len(1);
    for (std::size_t v = 0; v < nv; ++v) paths_by_len[0].push_back({v, {}});
    auto target_of = [&](const PathKey& k) { return k.arrows.empty() ? k.source : spec_.arrows[k.arrows.back()].target; };
    auto extend = [&]() {
        std::vector<PathKey> next;
        for (const auto& k : paths_by_len.back())
            for (std::size_t a = 0; a < spec_.arrows.size(); ++a)
                if (spec_.arrows[a].source == target_of(k)) {
                    PathKey n = k;
                    n.arrows.push_back(a);
                    next.push_back(std::move(n));
                }
        paths_by_len.push_back(std::move(next));
    };
    extend();

    for (std::size_t n = 2; n <= length_cap; ++n) {
        extend();
        // columns: longest paths first
        std::vector<PathKey> cols;
        for (std::size_t len = n + 1; len-- > 0;)
            for (const auto& k : paths_by_len[len]) cols.push_back(k);
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> col_of;
        for (std::size_t i = 0; i < cols.size(); ++i) col_of[{cols[i].source, cols[i].arrows}] = i;

        std::vector<std::vector<Residue>> gens;
        for (const auto& u : uniform) {
            for (std::size_t lw = 0; lw + u.min_len <= n; ++lw) {
                for (const auto& w : paths_by_len[lw]) {
                    if (target_of(w) != u.source) continue;
                    for (std::size_t lu = 0; lw + lu + u.min_len <= n; ++lu) {
                        for (const auto& s : paths_by_len[lu]) {
                            if (s.source != u.target) continue;
                            std::vector<Residue> row(cols.size(), 0);
                            bool any = false;
                            for (const auto& t : u.terms) {
                                std::vector<std::size_t> full = w.arrows;
                                full.insert(full.end(), t.arrows.begin(), t.arrows.end());
                                full.insert(full.end(), s.arrows.begin(), s.arrows.end());
                                if (full.size() > n) continue;
                                const std::size_t src = spec_.arrows[full.front()].source;
                                auto c = col_of.at({src, full});
                                row[c] = f.add(row[c], f.reduce(t.coeff));
                                any = true;
                            }
                            if (any) gens.push_back(std::move(row));
                        }
                    }
                }
            }
        }
        FpMatrix w(gens.size(), cols.size(), spec_.p);
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) w(r, c) = gens[r][c];
        EchelonReport e(w);
        const std::size_t top_count = paths_by_len[n].size();
        std::size_t top_pivots = 0;
        for (auto c : e.pivot_columns())
            if (c < top_count) ++top_pivots;
        if (top_pivots != top_count) continue;

        // Stable: A = span(paths of length <= n) / W.
        loewy_bound_ = n;
        std::vector<bool> is_pivot(cols.size(), false);
        std::vector<std::size_t> pivot_row(cols.size(), 0);
        for (std::size_t i = 0; i < e.pivot_columns().size(); ++i) {
            is_pivot[e.pivot_columns()[i]] = true;
            pivot_row[e.pivot_columns()[i]] = i;
        }
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        std::sort(free_cols.begin(), free_cols.end(), [&](std::size_t a, std::size_t b) {
            const auto& x = cols[a];
            const auto& y = cols[b];
            if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
            if (x.source != y.source) return x.source < y.source;
            return x.arrows < y.arrows;
        });
        std::vector<std::size_t> basis_index_of_col(cols.size(), 0);
        for (std::size_t i = 0; i < free_cols.size(); ++i) {
            const auto& k = cols[free_cols[i]];
            basis_.push_back({k.source, target_of(k), k.arrows});
            basis_index_of_col[free_cols[i]] = i;
        }
        const std::size_t d = basis_.size();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            AlgElement v(d, 1, spec_.p);
            if (!is_pivot[c]) {
                v(basis_index_of_col[c], 0) = 1;
            } else {
                const auto row = e.rref().row(pivot_row[c]);
                for (auto fc : free_cols)
                    if (row[fc] != 0) v(basis_index_of_col[fc], 0) = f.neg(row[fc]);
            }
            reductions_.emplace(std::make_pair(cols[c].source, cols[c].arrows), std::move(v));
        }
        trivial_.assign(nv, 0);
        between_.assign(nv * nv, {});
        for (std::size_t i = 0; i < d; ++i) {
            if (basis_[i].arrows.empty()) trivial_[basis_[i].source] = i;
            between_[basis_[i].source * nv + basis_[i].target].push_back(i);
        }
        products_.reserve(d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const auto& x = basis_[i];
                const auto& y = basis_[j];
                if (y.target != x.source) {
                    products_.push_back(zero());
                    continue;
                }
                std::vector<std::size_t> full = y.arrows;
                full.insert(full.end(), x.arrows.begin(), x.arrows.end());
                products_.push_back(reduce_path(y.source, full));
            }
        return;
    }
    throw ParseError("path closure did not terminate within length " + std::to_string(length_cap) +
                     ": the ideal is not admissible");
}

const std::vector<std::size_t>& BoundQuiverAlgebra::paths_between(std::size_t from, std::size_t to) const {
    return between_.at(from * vertex_count() + to);
}

AlgElement BoundQuiverAlgebra::reduce_path(std::size_t source, const std::vector<std::size_t>& arrows) const {
    if (arrows.size() >= loewy_bound_ + 1) return zero();
    auto it = reductions_.find({source, arrows});
    if (it == reductions_.end()) {
        if (arrows.size() > loewy_bound_) return zero();
        throw UsageError("reduce_path: not a composable path");
    }
    return it->second;
}

AlgElement BoundQuiverAlgebra::basis_element(std::size_t i) const {
    AlgElement v = zero();
    v(i, 0) = 1;
    return v;
}

AlgElement BoundQuiverAlgebra::one() const {
    AlgElement v = zero();
    for (auto t : trivial_) v(t, 0) = 1;
    return v;
}

AlgElement BoundQuiverAlgebra::multiply(const AlgElement& x, const AlgElement& y) const {
    const PrimeField f(p());
    AlgElement out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x(i, 0) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y(j, 0) == 0) continue;
            out += basis_product(i, j).scaled(f.mul(x(i, 0), y(j, 0)));
        }
    }
    return out;
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::opposite() const {
    std::lock_guard lock(op_mutex_);
    if (op_strong_) return op_strong_;
    if (auto back = op_weak_.lock()) return back;
    QuiverSpec op = spec_;
    for (auto& a : op.arrows) std::swap(a.source, a.target);
    for (auto& r : op.relations)
        for (auto& t : r) std::reverse(t.arrows.begin(), t.arrows.end());
    auto created = std::make_shared<BoundQuiverAlgebra>(Token{}, std::move(op), std::max<std::size_t>(loewy_bound_ + 1, 2));
    created->op_weak_ = shared_from_this();
    op_strong_ = created;
    return op_strong_;
}

std::string BoundQuiverAlgebra::path_name(const BasisPath& b) const {
    if (b.arrows.empty()) return "e" + spec_.vertices[b.source];
    std::string s;
    for (std::size_t i = 0; i < b.arrows.size(); ++i) s += (i ? "." : "") + spec_.arrows[b.arrows[i]].name;
    return s;
}

AlgebraPtr parse_algebra(const nlohmann::json& doc, std::size_t length_cap) {
    return BoundQuiverAlgebra::create(parse_quiver_spec(doc), length_cap);
}

AlgebraPtr load_algebra(const std::string& path, std::size_t length_cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra spec '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_algebra(doc, length_cap);
}

bool same_algebra(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b) {
    if (&a == &b) return true;
    if (a.p() != b.p() || a.spec().vertices != b.spec().vertices) return false;
    const auto& x = a.spec().arrows;
    const auto& y = b.spec().arrows;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].name != y[i].name || x[i].source != y[i].source || x[i].target != y[i].target) return false;
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
    return true;
}

}  // namespace tautilt
