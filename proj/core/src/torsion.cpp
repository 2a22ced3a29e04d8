#include "tautilt/torsion.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tautilt {

ModUniverse make_universe(const AlgebraPtr& a, const EnumerationOptions& opt) {
    return make_universe(a, enumerate_indecomposables(a, opt));
}

ModUniverse make_universe(const AlgebraPtr& a, std::vector<ModuleRep> indecs) {
    ModUniverse u{a, std::move(indecs), {}};
    u.names = module_names(u.indecs);
    return u;
}

bool Subcat::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

Subcat explicit_subcat(std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {SubcatKind::Explicit, std::move(members)};
}

Subcat intersect(const Subcat& x, const Subcat& y) {
    Subcat s;
    std::set_intersection(x.members.begin(), x.members.end(), y.members.begin(), y.members.end(),
                          std::back_inserter(s.members));
    return s;
}

std::vector<ModuleRep> modules_of(const ModUniverse& u, const Subcat& s) {
    std::vector<ModuleRep> out;
    for (auto i : s.members) out.push_back(u.indecs.at(i));
    return out;
}

std::string subcat_name(const ModUniverse& u, const Subcat& s) {
    std::string out = "add{";
    for (std::size_t k = 0; k < s.members.size(); ++k) out += (k ? "," : "") + u.names[s.members[k]];
    return out + "}";
}

std::optional<std::vector<std::size_t>> locate_summands(const ModUniverse& u, const ModuleRep& m) {
    std::vector<std::size_t> out;
    for (const auto& s : decompose(m)) {
        auto i = find_isomorphic(u.indecs, s);
        if (!i) return std::nullopt;
        out.push_back(*i);
    }
    return out;
}

bool in_add(const ModUniverse& u, const Subcat& s, const ModuleRep& m) {
    auto idx = locate_summands(u, m);
    if (!idx) return false;
    return std::all_of(idx->begin(), idx->end(), [&](std::size_t i) { return s.contains(i); });
}

Subobject trace(const std::vector<ModuleRep>& t, const ModuleRep& m) {
    FpMatrix gens(m.total(), 0, m.algebra->p());
    for (const auto& x : t)
        for (const auto& f : hom_basis(x, m)) gens = hstack(gens, total_matrix(f, x.rep, m.rep));
    return generated_by(m.rep, gens);
}

bool in_gen(const std::vector<ModuleRep>& t, const ModuleRep& m) { return trace(t, m).object.total() == m.total(); }

namespace {

template <class Pred>
Subcat select(const ModUniverse& u, SubcatKind kind, Pred pred) {
    Subcat s{kind, {}};
    for (std::size_t i = 0; i < u.indecs.size(); ++i)
        if (pred(u.indecs[i])) s.members.push_back(i);
    return s;
}

}  // namespace

Subcat gen_of(const ModUniverse& u, const std::vector<ModuleRep>& t) {
    return select(u, SubcatKind::GenOf, [&](const ModuleRep& m) { return in_gen(t, m); });
}

Subcat hom_perp(const ModUniverse& u, const std::vector<ModuleRep>& t) {
    return select(u, SubcatKind::HomPerp, [&](const ModuleRep& m) {
        return std::all_of(t.begin(), t.end(), [&](const ModuleRep& x) { return hom_dim(x, m) == 0; });
    });
}

Subcat ext1_perp(const ModUniverse& u, const std::vector<ModuleRep>& list) {
    return select(u, SubcatKind::Ext1Perp, [&](const ModuleRep& m) {
        const ModuleRep tm = tau(m);
        return std::all_of(list.begin(), list.end(), [&](const ModuleRep& y) { return stable_hom_mod_inj(y, tm) == 0; });
    });
}

Subcat ext1_perp_direct(const ModUniverse& u, const std::vector<ModuleRep>& list) {
    return select(u, SubcatKind::Ext1Perp, [&](const ModuleRep& m) {
        return std::all_of(list.begin(), list.end(), [&](const ModuleRep& y) { return ext1_dim(m, y) == 0; });
    });
}

Subcat subcat_of(const ModUniverse& u, SubcatKind kind, const std::vector<ModuleRep>& seed) {
    switch (kind) {
        case SubcatKind::GenOf: return gen_of(u, seed);
        case SubcatKind::HomPerp: return hom_perp(u, seed);
        case SubcatKind::Ext1Perp: return ext1_perp(u, seed);
        case SubcatKind::Explicit: break;
    }
    std::vector<std::size_t> idx;
    for (const auto& m : seed) {
        auto found = locate_summands(u, m);
        if (!found) throw UsageError("subcat_of: module outside the universe");
        idx.insert(idx.end(), found->begin(), found->end());
    }
    return explicit_subcat(std::move(idx));
}

namespace {

struct MapEntry {
    std::size_t index;
    RepMap map;
};

ModApprox build(const std::vector<ModuleRep>& x, const ModuleRep& m, Side side, const std::vector<MapEntry>& entries) {
    const auto& a = m.algebra;
    std::vector<ModuleRep> parts;
    for (const auto& e : entries) parts.push_back(x[e.index]);
    ModApprox out{direct_sum(parts, a), {}, {}};
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        FpMatrix block = side == Side::Right ? FpMatrix(m.dims()[v], 0, a->p()) : FpMatrix(0, m.dims()[v], a->p());
        for (const auto& e : entries) block = side == Side::Right ? hstack(block, e.map[v]) : vstack(block, e.map[v]);
        out.map.push_back(std::move(block));
    }
    for (const auto& e : entries) out.uses.push_back(e.index);
    return out;
}

}  // namespace

bool is_approximation(const std::vector<ModuleRep>& x, const ModuleRep& m, Side side, const ModApprox& f) {
    for (const auto& xi : x) {
        const std::size_t need = side == Side::Right ? hom_dim(xi, m) : hom_dim(m, xi);
        if (need == 0) continue;
        const FpMatrix span = side == Side::Right ? maps_through_source(xi, f.object, m, f.map)
                                                  : maps_through_target(m, f.object, xi, f.map);
        if (rank(span) != need) return false;
    }
    return true;
}

ModApprox approximate(const std::vector<ModuleRep>& x, const ModuleRep& m, Side side, bool minimal) {
    std::vector<MapEntry> entries;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (auto& f : side == Side::Right ? hom_basis(x[i], m) : hom_basis(m, x[i])) entries.push_back({i, std::move(f)});
    ModApprox best = build(x, m, side, entries);
    if (!minimal) return best;
    for (std::size_t t = entries.size(); t-- > 0;) {
        auto fewer = entries;
        fewer.erase(fewer.begin() + static_cast<long>(t));
        ModApprox trial = build(x, m, side, fewer);
        if (is_approximation(x, m, side, trial)) {
            entries = std::move(fewer);
            best = std::move(trial);
        }
    }
    return best;
}

namespace {

std::vector<std::pair<std::string, ModuleRep>> test_modules(const ModUniverse& u) {
    std::vector<std::pair<std::string, ModuleRep>> out;
    for (std::size_t i = 0; i < u.indecs.size(); ++i) out.emplace_back(u.names[i], u.indecs[i]);
    for (std::size_t i = 0; i < u.indecs.size(); ++i)
        for (std::size_t j = i; j < u.indecs.size(); ++j)
            out.emplace_back(u.names[i] + "+" + u.names[j], direct_sum(u.indecs[i], u.indecs[j]));
    return out;
}

}  // namespace

LwReport lw_verify(const ModUniverse& u, const Subcat& c, const Subcat& t) {
    LwReport r{c, t, true, {}, true, true};
    const auto cm = modules_of(u, c);
    const auto tm = modules_of(u, t);
    for (const auto& x : cm)
        for (const auto& y : tm)
            if (ext1_dim(x, y) != 0) r.ext_orthogonal = false;
    for (auto& [name, m] : test_modules(u)) {
        LwEntry e;
        e.module = name;
        const ModApprox f = approximate(cm, m, Side::Right);
        e.x_m = f.object;
        e.y_m = as_module(u.algebra, kernel_of(f.object.rep, m.rep, f.map).object);
        e.right_surjective = image_of(f.object.rep, m.rep, f.map).object.total() == m.total();
        e.kernel_in_t = in_add(u, t, e.y_m);
        const ModApprox g = approximate(tm, m, Side::Left);
        e.y_up = g.object;
        e.x_up = as_module(u.algebra, cokernel_of(m.rep, g.object.rep, g.map).object);
        e.cokernel_in_c = in_add(u, c, e.x_up);
        e.left_injective = kernel_of(m.rep, g.object.rep, g.map).object.total() == 0;
        r.verdict = r.verdict && e.right_surjective && e.kernel_in_t && e.cokernel_in_c;
        r.full_cotorsion = r.full_cotorsion && e.left_injective;
        r.per_module.push_back(std::move(e));
    }
    r.verdict = r.verdict && r.ext_orthogonal;
    return r;
}

nlohmann::json lw_to_json(const ModUniverse& u, const LwReport& r) {
    nlohmann::json doc;
    doc["pair"] = {{"C", subcat_name(u, r.c)}, {"T", subcat_name(u, r.t)}};
    doc["extOrthogonal"] = r.ext_orthogonal;
    doc["verdict"] = r.verdict;
    doc["fullCotorsion"] = r.full_cotorsion;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : r.per_module)
        rows.push_back({{"module", e.module},
                        {"X_M", dim_vector_string(e.x_m.dims())},
                        {"Y_M", dim_vector_string(e.y_m.dims())},
                        {"Y^M", dim_vector_string(e.y_up.dims())},
                        {"X^M", dim_vector_string(e.x_up.dims())},
                        {"rightSurjective", e.right_surjective},
                        {"kernelInT", e.kernel_in_t},
                        {"cokernelInC", e.cokernel_in_c},
                        {"leftInjective", e.left_injective}});
    doc["perModule"] = rows;
    return doc;
}

bool is_torsion_pair(const ModUniverse& u, const Subcat& t, const Subcat& f) {
    const auto tm = modules_of(u, t);
    for (const auto& x : tm)
        for (const auto& y : modules_of(u, f))
            if (hom_dim(x, y) != 0) return false;
    for (const auto& m : u.indecs) {
        const Subobject tr = trace(tm, m);
        if (!in_add(u, t, as_module(u.algebra, tr.object))) return false;
        if (!in_add(u, f, as_module(u.algebra, cokernel_of(tr.object, m.rep, tr.map).object))) return false;
    }
    return true;
}

bool is_tau_rigid(const ModuleRep& m) { return hom_dim(m, tau(m)) == 0; }

std::vector<SupportTauTilting> enumerate_support_tau_tilting(const ModUniverse& u) {
    const auto& a = u.algebra;
    const std::size_t n = a->vertex_count();
    // candidates: rigid indecomposables, then one entry per vertex
    std::vector<std::size_t> rigid;
    std::vector<ModuleRep> taus;
    for (std::size_t i = 0; i < u.indecs.size(); ++i)
        if (is_tau_rigid(u.indecs[i])) rigid.push_back(i);
    for (auto i : rigid) taus.push_back(tau(u.indecs[i]));
    const std::size_t r = rigid.size(), m = r + n;
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            ok[i][j] = ok[j][i] = hom_dim(u.indecs[rigid[i]], taus[j]) == 0 && hom_dim(u.indecs[rigid[j]], taus[i]) == 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t v = 0; v < n; ++v) ok[i][r + v] = ok[r + v][i] = u.indecs[rigid[i]].dims()[v] == 0;
    std::vector<SupportTauTilting> out;
    std::vector<std::size_t> clique;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        if (clique.size() == n) {
            SupportTauTilting s;
            std::vector<ModuleRep> parts;
            for (auto c : clique) {
                if (c < r) {
                    s.modules.push_back(rigid[c]);
                    parts.push_back(u.indecs[rigid[c]]);
                } else {
                    s.vertices.push_back(c - r);
                }
            }
            s.module = direct_sum(parts, a);
            for (auto i : s.modules) s.name += (s.name.empty() ? "" : "+") + u.names[i];
            if (s.name.empty()) s.name = "0";
            for (std::size_t k = 0; k < s.vertices.size(); ++k)
                s.name += (k ? " P" : " | P") + a->vertex_name(s.vertices[k]);
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t c = start; c < m; ++c) {
            if (!std::all_of(clique.begin(), clique.end(), [&](std::size_t d) { return ok[d][c]; })) continue;
            clique.push_back(c);
            grow(c + 1);
            clique.pop_back();
        }
    };
    grow(0);
    return out;
}

Triple triple(const ModUniverse& u, const SupportTauTilting& s) {
    const auto t = modules_of(u, explicit_subcat(s.modules));
    Triple tr;
    tr.t = gen_of(u, t);
    tr.c = ext1_perp(u, modules_of(u, tr.t));
    tr.f = hom_perp(u, t);
    return tr;
}

TripleInverse triple_inverse(const ModUniverse& u, const Triple& tr) {
    TripleInverse inv;
    inv.c_cap_t = intersect(tr.c, tr.t);
    inv.t_cap_f = intersect(tr.t, tr.f);
    inv.module = direct_sum(modules_of(u, inv.c_cap_t), u.algebra);
    inv.lw_ok = lw_verify(u, tr.c, tr.t).verdict;
    inv.torsion_ok = is_torsion_pair(u, tr.t, tr.f);
    return inv;
}

nlohmann::json triple_to_json(const ModUniverse& u, const Triple& tr, const TripleInverse& inv) {
    return {{"C", subcat_name(u, tr.c)},
            {"T", subcat_name(u, tr.t)},
            {"F", subcat_name(u, tr.f)},
            {"inverse", {{"CcapT", subcat_name(u, inv.c_cap_t)}, {"TcapF", subcat_name(u, inv.t_cap_f)}}},
            {"lwPair", inv.lw_ok},
            {"torsionPair", inv.torsion_ok}};
}

std::size_t quotient_hom_dim(const ModuleRep& x, const ModuleRep& y, const std::vector<ModuleRep>& list) {
    std::size_t rows = 0;
    for (std::size_t v = 0; v < x.dims().size(); ++v) rows += x.dims()[v] * y.dims()[v];
    FpMatrix span(rows, 0, x.algebra->p());
    for (const auto& k : list)
        for (const auto& a : hom_basis(x, k)) span = hstack(span, maps_through_target(x, k, y, a));
    return hom_dim(x, y) - rank(span);
}

bool matching_bijection(const std::vector<std::vector<std::size_t>>& q, const std::vector<std::vector<std::size_t>>& f) {
    const std::size_t n = q.size();
    std::vector<std::size_t> sigma;
    std::vector<bool> used(n, false);
    std::function<bool()> place = [&]() {
        const std::size_t i = sigma.size();
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool fits = q[i][i] == f[c][c];
            for (std::size_t j = 0; j < i && fits; ++j) fits = q[i][j] == f[c][sigma[j]] && q[j][i] == f[sigma[j]][c];
            if (!fits) continue;
            used[c] = true;
            sigma.push_back(c);
            if (place()) return true;
            sigma.pop_back();
            used[c] = false;
        }
        return false;
    };
    return place();
}

QuotientReport quotient_equivalence_check(const ModUniverse& u, const Triple& tr) {
    QuotientReport r;
    const Subcat core = intersect(tr.c, tr.t);
    const auto core_m = modules_of(u, core);
    for (auto i : tr.c.members)
        if (!core.contains(i)) r.survivors.push_back(i);
    const auto fm = modules_of(u, tr.f);
    r.cardinality = r.survivors.size() == fm.size();
    const std::size_t n = r.survivors.size();
    std::vector<std::vector<std::size_t>> q(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q[i][j] = quotient_hom_dim(u.indecs[r.survivors[i]], u.indecs[r.survivors[j]], core_m);
    if (r.cardinality) {
        std::vector<std::vector<std::size_t>> f(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f[i][j] = hom_dim(fm[i], fm[j]);
        r.dimensions = matching_bijection(q, f);
    }
    // candidate functor X -> X / trace(C ∩ T, X)
    std::vector<ModuleRep> image;
    r.functor_lands_in_f = true;
    for (auto i : r.survivors) {
        const auto& x = u.indecs[i];
        const Subobject tr_x = trace(core_m, x);
        ModuleRep fx = as_module(u.algebra, cokernel_of(tr_x.object, x.rep, tr_x.map).object);
        if (!in_add(u, tr.f, fx)) {
            r.functor_lands_in_f = false;
            r.functor_mismatches.push_back(u.names[i] + " not sent into F");
        }
        image.push_back(std::move(fx));
    }
    bool matches = r.functor_lands_in_f && r.cardinality;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_indecomposable(image[i])) {
            matches = false;
            r.functor_mismatches.push_back(u.names[r.survivors[i]] + " image decomposes");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (image[i].dims() == image[j].dims() && is_isomorphic(image[i], image[j])) {
                matches = false;
                r.functor_mismatches.push_back(u.names[r.survivors[i]] + " image repeats");
            }
        for (std::size_t j = 0; j < n; ++j)
            if (hom_dim(image[i], image[j]) != q[i][j]) {
                matches = false;
                r.functor_mismatches.push_back("Hom(" + u.names[r.survivors[i]] + "," + u.names[r.survivors[j]] + ")");
            }
    }
    r.functor_matches = matches;
    return r;
}

bool is_faithful(const ModuleRep& t) {
    const ModuleRep a = regular_module(t.algebra);
    const ModApprox g = approximate({t}, a, Side::Left, false);
    return kernel_of(a.rep, g.object.rep, g.map).object.total() == 0;
}

TiltingReport tilting_specialization_check(const ModUniverse& u, const SupportTauTilting& s) {
    TiltingReport r;
    r.faithful = is_faithful(s.module);
    const Triple tr = triple(u, s);
    r.injective_approximations = lw_verify(u, tr.c, tr.t).full_cotorsion;
    r.agree = r.faithful == r.injective_approximations;
    return r;
}

std::string torsion_poset_dot(const ModUniverse& u, const std::vector<SupportTauTilting>& list) {
    std::vector<Subcat> classes;
    for (const auto& s : list) classes.push_back(gen_of(u, modules_of(u, explicit_subcat(s.modules))));
    auto below = [&](std::size_t i, std::size_t j) {  // classes[i] strictly inside classes[j]
        return classes[i].members.size() < classes[j].members.size() &&
               std::includes(classes[j].members.begin(), classes[j].members.end(), classes[i].members.begin(),
                             classes[i].members.end());
    };
    std::ostringstream out;
    out << "digraph torsion {\n";
    for (std::size_t i = 0; i < list.size(); ++i)
        out << "  n" << i << " [label=\"" << list[i].name << "\"];\n";
    for (std::size_t j = 0; j < list.size(); ++j)
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (!below(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < list.size() && cover; ++k) cover = !(below(i, k) && below(k, j));
            if (cover) out << "  n" << j << " -> n" << i << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace tautilt
