#include "tautilt/cotorsion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace tautilt {

KUniverse k_universe(std::vector<KObject> indecs, std::size_t sum_cap) {
    if (sum_cap < 1) throw UsageError("k_universe: sum cap must be positive");
    KUniverse u;
    u.indecs = std::move(indecs);
    u.objects = u.indecs;
    u.sum_cap = sum_cap;
    // multisets of size 2..sum_cap, indices non-decreasing
    std::vector<KObject> layer = u.indecs;
    std::vector<std::size_t> last(u.indecs.size());
    for (std::size_t i = 0; i < last.size(); ++i) last[i] = i;
    for (std::size_t size = 2; size <= sum_cap; ++size) {
        std::vector<KObject> next;
        std::vector<std::size_t> next_last;
        for (std::size_t k = 0; k < layer.size(); ++k)
            for (std::size_t j = last[k]; j < u.indecs.size(); ++j) {
                next.push_back({layer[k].name + "+" + u.indecs[j].name, direct_sum(layer[k].complex, u.indecs[j].complex)});
                next_last.push_back(j);
            }
        u.objects.insert(u.objects.end(), next.begin(), next.end());
        layer = std::move(next);
        last = std::move(next_last);
    }
    return u;
}

KUniverse two_term_universe(const AlgebraPtr& a, const std::vector<ModuleRep>& modules, std::size_t sum_cap) {
    return k_universe(two_term_indecomposables(a, modules), sum_cap);
}

namespace {

std::vector<ProjComplex> complexes(const std::vector<KObject>& list) {
    std::vector<ProjComplex> out;
    for (const auto& o : list) out.push_back(o.complex);
    return out;
}

std::vector<ProjComplex> shifted(const std::vector<ProjComplex>& list, int n) {
    std::vector<ProjComplex> out;
    for (const auto& x : list) out.push_back(shift(x, n));
    return out;
}

bool e_vanishes(const ProjComplex& x, const std::vector<ProjComplex>& ys) {
    return std::all_of(ys.begin(), ys.end(), [&](const ProjComplex& y) { return hom_k_dim(x, y, 1) == 0; });
}

bool e_vanishes_into(const std::vector<ProjComplex>& xs, const ProjComplex& y) {
    return std::all_of(xs.begin(), xs.end(), [&](const ProjComplex& x) { return hom_k_dim(x, y, 1) == 0; });
}

std::vector<long> k0_class(const ProjComplex& x) {
    std::vector<long> c(x.algebra->vertex_count(), 0);
    for (int k = x.low; k <= x.high(); ++k) {
        const long sign = k % 2 == 0 ? 1 : -1;
        const auto t = x.term(k);
        for (std::size_t v = 0; v < c.size(); ++v) c[v] += sign * static_cast<long>(t.mult[v]);
    }
    return c;
}

std::vector<long> k0_diff(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

// Linear combinations of a basis: all of them when few, else seeded random ones.
std::vector<ChainMap> combinations(const std::vector<ChainMap>& basis, const ProjComplex& x, const ProjComplex& y,
                                   std::uint32_t p, std::uint64_t rng_seed) {
    constexpr double cap = 4096;
    std::vector<ChainMap> out;
    const double total = std::pow(static_cast<double>(p), static_cast<double>(basis.size()));
    auto from_coeffs = [&](const std::vector<Residue>& c) {
        ChainMap f = zero_chain(x, y, 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (c[i] != 0) f = add_chains(f, scale_chain(basis[i], c[i]));
        return f;
    };
    std::vector<Residue> c(basis.size(), 0);
    if (total <= cap) {
        for (std::size_t n = 0; n < static_cast<std::size_t>(total); ++n) {
            std::size_t r = n;
            for (auto& ci : c) {
                ci = static_cast<Residue>(r % p);
                r /= p;
            }
            out.push_back(from_coeffs(c));
        }
        return out;
    }
    std::mt19937_64 rng(rng_seed);
    for (int n = 0; n < 512; ++n) {
        for (auto& ci : c) ci = static_cast<Residue>(rng() % p);
        out.push_back(from_coeffs(c));
    }
    return out;
}

struct SumEntry {
    ProjComplex complex;
    std::vector<long> k0;
};

// Sums of at most `cap` listed objects, the zero object included.
std::vector<SumEntry> small_sums(const std::vector<ProjComplex>& list, const AlgebraPtr& a, std::size_t cap) {
    std::vector<SumEntry> out;
    std::vector<std::size_t> pick;
    auto emit = [&]() {
        std::vector<ProjComplex> parts;
        for (auto i : pick) parts.push_back(list[i]);
        ProjComplex s = direct_sum(parts, a);
        out.push_back({s, k0_class(s)});
    };
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
        emit();
        if (pick.size() == cap) return;
        for (std::size_t i = start; i < list.size(); ++i) {
            pick.push_back(i);
            grow(i);
            pick.pop_back();
        }
    };
    grow(0);
    return out;
}

ProjComplex reduced(const ProjComplex& x) { return trim(minimize(x).complex); }

struct Lists {
    std::vector<ProjComplex> u, v, seed;
    std::uint64_t rng_seed = 7;
};

bool fits(const Lists& l, TriangleFit& t, const ProjComplex& v, const ProjComplex& u, const char* method) {
    ProjComplex rv = reduced(v), ru = reduced(u);
    if (!in_add(l.v, rv) || !in_add(l.u, ru)) return false;
    t = {true, method, std::move(rv), std::move(ru)};
    return true;
}

// f : X -> Y between sums of listed objects with cone(f) ≅ target.
bool search(const Lists& l, const ProjComplex& target, const AlgebraPtr& a, TriangleFit& t) {
    constexpr std::size_t cap = 3;
    const auto xs = small_sums(l.v, a, cap);
    const auto ys = small_sums(l.u, a, cap);
    const auto want = k0_class(target);
    const ProjComplex goal = reduced(target);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            if (k0_diff(y.k0, x.k0) != want) continue;
            const KHom h = hom_k(x.complex, y.complex, 0);
            for (const auto& f : combinations(h.basis, x.complex, y.complex, a->p(), l.rng_seed))
                if (is_isomorphic_k(cone(x.complex, y.complex, f), goal)) {
                    t = {true, "search", reduced(x.complex), reduced(y.complex)};
                    return true;
                }
        }
    return false;
}

}  // namespace

UvMembership uv_membership(const ProjComplex& p, const std::vector<KObject>& v_list, const ProjComplex& z) {
    return {e_vanishes(z, complexes(v_list)), hom_k_dim(p, z, 1) == 0};
}

CotorsionPair pair_of(const ProjComplex& p, const KUniverse& universe) {
    CotorsionPair pair{p, {}, {}, universe.rng_seed};
    for (const auto& o : universe.indecs)
        if (hom_k_dim(p, o.complex, 1) == 0) pair.v.push_back(o);
    const auto vs = complexes(pair.v);
    for (const auto& o : universe.indecs)
        if (e_vanishes(o.complex, vs)) pair.u.push_back(o);
    return pair;
}

ProjComplex silting_of(const CotorsionPair& pair) {
    const auto vs = complexes(pair.v);
    std::vector<ProjComplex> parts;
    for (const auto& o : pair.u)
        if (find_isomorphic_k(vs, o.complex)) parts.push_back(o.complex);
    return direct_sum(parts, pair.seed.algebra);
}

ConeCocone cone_cocone_decompose(const CotorsionPair& pair, const ProjComplex& z) {
    const auto& a = z.algebra;
    const Lists l{complexes(pair.u), complexes(pair.v), basic_summands(pair.seed), pair.rng_seed};
    ConeCocone out;

    TriangleFit& c = out.cone;
    {
        const KApprox f = right_approximation(z, l.seed);
        fits(l, c, shift(cone(f.object, z, f.map), -1), f.object, "approximation");
    }
    if (!c.found) {
        const KApprox g = left_approximation(z, shifted(l.seed, 1));
        fits(l, c, shift(g.object, -1), shift(cone(z, g.object, g.map), -1), "truncation");
    }
    if (!c.found) search(l, z, a, c);

    TriangleFit& d = out.cocone;
    {
        const KApprox h = left_approximation(z, l.seed);
        fits(l, d, h.object, cone(z, h.object, h.map), "approximation");
    }
    if (!d.found) {
        const KApprox k = right_approximation(z, shifted(l.seed, -1));
        fits(l, d, cone(k.object, z, k.map), shift(k.object, 1), "truncation");
    }
    if (!d.found) search(l, shift(z, 1), a, d);
    return out;
}

bool CotorsionReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check& CotorsionReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw UsageError("no check named " + name);
}

CotorsionReport verify_complete_cotorsion(const CotorsionPair& pair, const KUniverse& universe) {
    CotorsionReport r;
    r.universe_size = universe.objects.size();
    r.sum_cap = universe.sum_cap;
    const auto us = complexes(pair.u), vs = complexes(pair.v);

    Check orth{"E-orthogonal", true, ""};
    for (const auto& u : pair.u)
        for (const auto& v : pair.v)
            if (orth.pass && hom_k_dim(u.complex, v.complex, 1) != 0) orth = {orth.name, false, u.name + " / " + v.name};
    r.checks.push_back(orth);

    Check closed{"summand-closure", true, ""};
    for (const auto& o : pair.u)
        if (closed.pass && decompose_complex(o.complex).size() != 1) closed = {closed.name, false, o.name};
    for (const auto& o : pair.v)
        if (closed.pass && decompose_complex(o.complex).size() != 1) closed = {closed.name, false, o.name};
    for (const auto& o : universe.objects) {
        if (!closed.pass) break;
        if (e_vanishes(o.complex, vs) != in_add(us, o.complex)) closed = {closed.name, false, "U: " + o.name};
        else if (e_vanishes_into(us, o.complex) != in_add(vs, o.complex)) closed = {closed.name, false, "V: " + o.name};
    }
    r.checks.push_back(closed);

    Check cover{"cone-coverage", true, ""};
    for (const auto& o : universe.objects) {
        const ConeCocone t = cone_cocone_decompose(pair, o.complex);
        if (t.cone.found) ++r.methods[t.cone.method];
        if (t.cocone.found) ++r.methods[t.cocone.method];
        if (cover.pass && !(t.cone.found && t.cocone.found)) cover = {cover.name, false, o.name};
    }
    r.checks.push_back(cover);

    Check meet{"intersection", true, ""};
    const auto core = basic_summands(pair.seed);
    std::size_t both = 0;
    for (const auto& o : pair.u) {
        if (!find_isomorphic_k(vs, o.complex)) continue;
        ++both;
        if (meet.pass && !find_isomorphic_k(core, o.complex)) meet = {meet.name, false, o.name};
    }
    if (meet.pass && both != core.size()) meet = {meet.name, false, std::to_string(both) + " common objects"};
    r.checks.push_back(meet);
    return r;
}

nlohmann::json report_to_json(const CotorsionReport& r, const nlohmann::json& pair) {
    nlohmann::json doc;
    doc["pair"] = pair;
    doc["universeSize"] = r.universe_size;
    doc["sumCap"] = r.sum_cap;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json row{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) row["witness"] = c.witness;
        doc["checks"].push_back(row);
    }
    doc["methods"] = r.methods;
    return doc;
}

std::vector<KObject> relative_indecomposables(const ProjComplex& p, const std::vector<KObject>& named,
                                              std::uint64_t rng_seed) {
    const auto& a = p.algebra;
    const auto sums = small_sums(basic_summands(p), a, 2);
    const auto known = complexes(named);
    std::vector<KObject> out;
    std::vector<ProjComplex> found;
    for (const auto& x : sums)
        for (const auto& y : sums) {
            const KHom h = hom_k(x.complex, y.complex, 0);
            for (const auto& f : combinations(h.basis, x.complex, y.complex, a->p(), rng_seed))
                for (auto& part : decompose_complex(cone(x.complex, y.complex, f))) {
                    if (find_isomorphic_k(found, part)) continue;
                    auto i = find_isomorphic_k(known, part);
                    out.push_back({i ? named[*i].name : "R" + std::to_string(out.size()), part});
                    found.push_back(std::move(part));
                }
        }
    return out;
}

CotorsionReport hrs_check(const ProjComplex& p, const std::vector<KObject>& named, std::uint64_t rng_seed) {
    const auto& a = p.algebra;
    const auto rel = relative_indecomposables(p, named, rng_seed);
    const auto v_list = complexes(pair_of(p, k_universe(named)).v);
    const ProjComplex a1 = shift(stalk(a, ProjSum{std::vector<std::size_t>(a->vertex_count(), 1)}), 1);
    CotorsionPair pair{a1, {}, {}, rng_seed};
    for (const auto& o : rel) {
        if (as_two_term(o.complex) && hom_k_dim(p, o.complex, 1) == 0) pair.u.push_back(o);
        const ProjComplex down = shift(o.complex, -1);
        if (as_two_term(down) && e_vanishes(down, v_list)) pair.v.push_back(o);
    }
    KUniverse u = k_universe(rel);
    return verify_complete_cotorsion(pair, u);
}

InducedTorsion induced_torsion_pair(const CotorsionPair& pair, const ModUniverse& mods, const KUniverse& universe) {
    InducedTorsion out;
    std::vector<std::size_t> idx;
    for (const auto& o : pair.v) {
        auto found = locate_summands(mods, h0(o.complex));
        if (!found) throw UsageError("induced_torsion_pair: H0 outside the module universe");
        idx.insert(idx.end(), found->begin(), found->end());
    }
    out.t = explicit_subcat(idx);
    const auto tm = modules_of(mods, out.t);
    out.f = hom_perp(mods, tm);
    out.gen_certificate = gen_of(mods, decompose(h0(pair.seed))).members == out.t.members;

    const auto vs = complexes(pair.v);
    out.inverse_recovers_v = true;
    for (const auto& o : universe.indecs)
        if (in_add(mods, out.t, h0(o.complex)) != find_isomorphic_k(vs, o.complex).has_value())
            out.inverse_recovers_v = false;

    // Hom(P, X[1]) for a module X is the cokernel of precomposition with the differential
    const ProjComplex& p = pair.seed;
    const ModuleRep p1 = p.module(-1), p0 = p.module(0);
    const RepMap d = p.diff(-1);
    out.composite = true;
    for (std::size_t i = 0; i < mods.indecs.size(); ++i) {
        const auto& x = mods.indecs[i];
        const std::size_t h1 = hom_dim(p1, x) - rank(maps_through_target(p1, p0, x, d));
        if ((h1 == 0) != out.t.contains(i)) out.composite = false;
    }
    return out;
}

std::size_t quotient_k_dim(const ProjComplex& x, const ProjComplex& y, const std::vector<ProjComplex>& list) {
    std::vector<ChainMap> through;
    for (const auto& q : list) {
        const KHom to = hom_k(x, q, 0), from = hom_k(q, y, 0);
        for (const auto& f : to.basis)
            for (const auto& g : from.basis) through.push_back(compose(g, f, x, q, y));
    }
    return hom_k_dim(x, y, 0) - k_span_dim(x, y, 0, through);
}

std::size_t hom_modulo_shifted_projectives(const ProjComplex& x, const ProjComplex& y) {
    const auto& a = x.algebra;
    std::vector<ProjComplex> list;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) list.push_back(shifted_projective(a, v));
    return quotient_k_dim(x, y, list);
}

}  // namespace tautilt
