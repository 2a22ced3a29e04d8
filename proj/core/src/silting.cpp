#include "tautilt/silting.hpp"

#include <functional>

#include "tautilt/homology.hpp"

namespace tautilt {

namespace {

struct Entry {
    std::size_t index;
    ChainMap map;
};

KApprox build_left(const ProjComplex& z, const std::vector<ProjComplex>& list, const std::vector<Entry>& entries) {
    std::vector<ProjComplex> parts;
    for (const auto& e : entries) parts.push_back(list[e.index]);
    const ComplexSum s = direct_sum_with_maps(parts, z.algebra);
    KApprox out{s.sum, zero_chain(z, s.sum, 0), {}};
    for (std::size_t k = 0; k < entries.size(); ++k) {
        out.map = add_chains(out.map, compose(s.in[k], entries[k].map, z, parts[k], s.sum));
        out.uses.push_back(entries[k].index);
    }
    return out;
}

KApprox build_right(const ProjComplex& z, const std::vector<ProjComplex>& list, const std::vector<Entry>& entries) {
    std::vector<ProjComplex> parts;
    for (const auto& e : entries) parts.push_back(list[e.index]);
    const ComplexSum s = direct_sum_with_maps(parts, z.algebra);
    KApprox out{s.sum, zero_chain(s.sum, z, 0), {}};
    for (std::size_t k = 0; k < entries.size(); ++k) {
        out.map = add_chains(out.map, compose(entries[k].map, s.pr[k], s.sum, parts[k], z));
        out.uses.push_back(entries[k].index);
    }
    return out;
}

template <class Build, class Check>
KApprox approximate(const ProjComplex& z, const std::vector<ProjComplex>& list, bool minimal, bool left, Build build,
                    Check check) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const KHom h = left ? hom_k(z, list[i], 0) : hom_k(list[i], z, 0);
        for (const auto& f : h.basis) entries.push_back({i, f});
    }
    KApprox best = build(z, list, entries);
    if (!minimal) return best;
    for (std::size_t t = entries.size(); t-- > 0;) {
        std::vector<Entry> fewer = entries;
        fewer.erase(fewer.begin() + static_cast<long>(t));
        KApprox trial = build(z, list, fewer);
        if (check(z, list, trial)) {
            entries = std::move(fewer);
            best = std::move(trial);
        }
    }
    return best;
}

}  // namespace

bool is_left_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, const KApprox& a) {
    for (const auto& l : list) {
        const std::size_t need = hom_k_dim(z, l, 0);
        if (need == 0) continue;
        std::vector<ChainMap> maps;
        for (const auto& h : hom_k(a.object, l, 0).basis) maps.push_back(compose(h, a.map, z, a.object, l));
        if (k_span_dim(z, l, 0, maps) != need) return false;
    }
    return true;
}

bool is_right_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, const KApprox& a) {
    for (const auto& l : list) {
        const std::size_t need = hom_k_dim(l, z, 0);
        if (need == 0) continue;
        std::vector<ChainMap> maps;
        for (const auto& h : hom_k(l, a.object, 0).basis) maps.push_back(compose(a.map, h, l, a.object, z));
        if (k_span_dim(l, z, 0, maps) != need) return false;
    }
    return true;
}

KApprox left_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, bool minimal) {
    return approximate(z, list, minimal, true, build_left, is_left_approximation);
}

KApprox right_approximation(const ProjComplex& z, const std::vector<ProjComplex>& list, bool minimal) {
    return approximate(z, list, minimal, false, build_right, is_right_approximation);
}

std::optional<std::size_t> find_isomorphic_k(const std::vector<ProjComplex>& list, const ProjComplex& x) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (is_isomorphic_k(list[i], x)) return i;
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> k_multiplicities(const std::vector<ProjComplex>& list, const ProjComplex& x) {
    std::vector<std::size_t> mult(list.size(), 0);
    for (const auto& s : decompose_complex(x)) {
        auto i = find_isomorphic_k(list, s);
        if (!i) return std::nullopt;
        ++mult[*i];
    }
    return mult;
}

bool in_add(const std::vector<ProjComplex>& list, const ProjComplex& x) { return k_multiplicities(list, x).has_value(); }

std::vector<ProjComplex> basic_summands(const ProjComplex& x) {
    std::vector<ProjComplex> out;
    for (auto& s : decompose_complex(x))
        if (!find_isomorphic_k(out, s)) out.push_back(std::move(s));
    return out;
}

SiltingTest silting_test(const ProjComplex& x) {
    SiltingTest t;
    t.presilting = hom_k_dim(x, x, 1) == 0;
    t.summands = basic_summands(x).size();
    t.silting = t.presilting && t.summands == x.algebra->vertex_count();
    return t;
}

ProjComplex shifted_projective(const AlgebraPtr& a, std::size_t v) {
    return two_term(a, proj_single(*a, v), proj_zero(*a), zero_map(projective_module(a, v).rep, zero_module(a).rep));
}

std::vector<KObject> two_term_indecomposables(const AlgebraPtr& a, const std::vector<ModuleRep>& modules) {
    std::vector<KObject> out;
    const auto names = module_names(modules);
    for (std::size_t i = 0; i < modules.size(); ++i) out.push_back({"P(" + names[i] + ")", presentation_complex(modules[i])});
    for (std::size_t v = 0; v < a->vertex_count(); ++v) out.push_back({"P" + a->vertex_name(v) + "[1]", shifted_projective(a, v)});
    return out;
}

std::vector<TwoTermSilting> enumerate_two_term_silting(const AlgebraPtr& a, const std::vector<ModuleRep>& modules) {
    const auto all = two_term_indecomposables(a, modules);
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (hom_k_dim(all[i].complex, all[i].complex, 1) == 0) cand.push_back(i);
    const std::size_t m = cand.size();
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            ok[i][j] = ok[j][i] = hom_k_dim(all[cand[i]].complex, all[cand[j]].complex, 1) == 0 &&
                                  hom_k_dim(all[cand[j]].complex, all[cand[i]].complex, 1) == 0;
    const std::size_t n = a->vertex_count();
    std::vector<TwoTermSilting> out;
    std::vector<std::size_t> clique;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        if (clique.size() == n) {
            TwoTermSilting s;
            std::vector<ProjComplex> parts;
            for (auto c : clique) {
                s.members.push_back(cand[c]);
                s.summands.push_back(all[cand[c]]);
                parts.push_back(all[cand[c]].complex);
                s.name += (s.name.empty() ? "" : "+") + all[cand[c]].name;
            }
            s.complex = direct_sum(parts, a);
            if (silting_test(s.complex).silting) out.push_back(std::move(s));
            return;
        }
        for (std::size_t c = start; c < m; ++c) {
            bool fits = true;
            for (auto d : clique) fits = fits && ok[d][c];
            if (!fits) continue;
            clique.push_back(c);
            grow(c + 1);
            clique.pop_back();
        }
    };
    grow(0);
    return out;
}

BongartzTriangle bongartz_triangle(const ProjComplex& p) {
    const auto& a = p.algebra;
    const auto summands = basic_summands(p);
    BongartzTriangle t;
    t.a_stalk = stalk(a, ProjSum{std::vector<std::size_t>(a->vertex_count(), 1)});
    const KApprox ap = left_approximation(t.a_stalk, summands);
    t.v = ap.object;
    t.approx = ap.map;
    const auto u = as_two_term(cone(t.a_stalk, ap.object, ap.map));
    if (u) t.u = *u;
    t.v_in_add = in_add(summands, t.v);
    t.u_in_add = u.has_value() && in_add(summands, t.u);
    return t;
}

std::string complex_name(const AlgebraPtr& a, const ProjComplex& x, const std::vector<KObject>& named) {
    std::vector<ProjComplex> list;
    for (const auto& o : named) list.push_back(o.complex);
    std::string s;
    for (const auto& part : decompose_complex(x)) {
        auto i = find_isomorphic_k(list, part);
        s += (s.empty() ? "" : "+") + (i ? named[*i].name : std::string("?"));
    }
    (void)a;
    return s.empty() ? "0" : s;
}

}  // namespace tautilt
