#include "tautilt/complex.hpp"
#include "tautilt/homology.hpp"

#include <algorithm>
#include <array>

namespace tautilt {

namespace {

Residue sign(int s, std::uint32_t p) { return (s % 2 == 0) ? 1 : p - 1; }

std::size_t coord_dim(const ProjSum& x, const ModuleRep& m) {
    std::size_t n = 0;
    for (auto v : x.slots()) n += m.dims()[v];
    return n;
}

FpMatrix to_coords(const BoundQuiverAlgebra& a, const ProjSum& x, const RepMap& f, std::size_t rows) {
    FpMatrix out(rows, 1, a.p());
    std::size_t r = 0;
    for (const auto& img : generator_images(a, x, f)) {
        out.set_block(r, 0, img);
        r += img.rows();
    }
    return out;
}

RepMap from_coords(const ModuleRep& target, const ProjSum& x, const FpMatrix& col, std::size_t offset) {
    std::vector<FpMatrix> images;
    for (auto v : x.slots()) {
        images.push_back(col.block(offset, 0, target.dims()[v], 1));
        offset += target.dims()[v];
    }
    return map_from_generators(target, x, images);
}

// Block layout for Hom(X^k, Y^{k+s}) over the degrees of X.
struct Blocks {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
};

Blocks layout(const ProjComplex& x, const ProjComplex& y, int s) {
    Blocks b;
    for (int k = x.low; k <= x.high(); ++k) {
        b.offset.push_back(b.total);
        b.total += coord_dim(x.term(k), y.module(k + s));
    }
    return b;
}

// Null-homotopies h -> (-1)^s d_Y h + h d_X, as a matrix from H into C coordinates.
FpMatrix homotopy_matrix(const ProjComplex& x, const ProjComplex& y, int s) {
    const auto& a = *x.algebra;
    const Blocks c = layout(x, y, s);
    const Blocks h = layout(x, y, s - 1);
    FpMatrix out(c.total, h.total, a.p());
    const Residue sg = sign(s, a.p());
    for (int k = x.low; k <= x.high(); ++k) {
        const std::size_t bi = static_cast<std::size_t>(k - x.low);
        const std::size_t n = (bi + 1 < h.offset.size() ? h.offset[bi + 1] : h.total) - h.offset[bi];
        for (std::size_t e = 0; e < n; ++e) {
            FpMatrix unit(h.total, 1, a.p());
            unit(h.offset[bi] + e, 0) = 1;
            const RepMap hk = from_coords(y.module(k + s - 1), x.term(k), unit, h.offset[bi]);
            FpMatrix col(c.total, 1, a.p());
            const RepMap a1 = scale_map(compose(y.diff(k + s - 1), hk), sg);
            col.set_block(c.offset[bi], 0, to_coords(a, x.term(k), a1, coord_dim(x.term(k), y.module(k + s))));
            if (k - 1 >= x.low) {
                const RepMap a2 = compose(hk, x.diff(k - 1));
                col.set_block(c.offset[bi - 1], 0,
                              to_coords(a, x.term(k - 1), a2, coord_dim(x.term(k - 1), y.module(k - 1 + s))));
            }
            out.set_block(0, h.offset[bi] + e, col);
        }
    }
    return out;
}

// Chain condition f -> (-1)^s d_Y f^k - f^{k+1} d_X, from C into T coordinates.
FpMatrix chain_matrix(const ProjComplex& x, const ProjComplex& y, int s) {
    const auto& a = *x.algebra;
    const Blocks c = layout(x, y, s);
    const Blocks t = layout(x, y, s + 1);
    FpMatrix out(t.total, c.total, a.p());
    const Residue sg = sign(s, a.p());
    for (int k = x.low; k <= x.high(); ++k) {
        const std::size_t bi = static_cast<std::size_t>(k - x.low);
        const std::size_t n = (bi + 1 < c.offset.size() ? c.offset[bi + 1] : c.total) - c.offset[bi];
        for (std::size_t e = 0; e < n; ++e) {
            FpMatrix unit(c.total, 1, a.p());
            unit(c.offset[bi] + e, 0) = 1;
            const RepMap fk = from_coords(y.module(k + s), x.term(k), unit, c.offset[bi]);
            FpMatrix col(t.total, 1, a.p());
            const RepMap a1 = scale_map(compose(y.diff(k + s), fk), sg);
            col.set_block(t.offset[bi], 0, to_coords(a, x.term(k), a1, coord_dim(x.term(k), y.module(k + s + 1))));
            if (k - 1 >= x.low) {
                const RepMap a2 = scale_map(compose(fk, x.diff(k - 1)), a.p() - 1);
                col.set_block(t.offset[bi - 1], 0,
                              to_coords(a, x.term(k - 1), a2, coord_dim(x.term(k - 1), y.module(k + s))));
            }
            out.set_block(0, c.offset[bi] + e, col);
        }
    }
    return out;
}

FpMatrix chain_coords(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
    const Blocks c = layout(x, y, f.shift);
    FpMatrix out(c.total, 1, x.algebra->p());
    for (int k = x.low; k <= x.high(); ++k) {
        const std::size_t bi = static_cast<std::size_t>(k - x.low);
        out.set_block(c.offset[bi], 0,
                      to_coords(*x.algebra, x.term(k), f.comps[bi], coord_dim(x.term(k), y.module(k + f.shift))));
    }
    return out;
}

ChainMap chain_from_coords(const ProjComplex& x, const ProjComplex& y, int s, const FpMatrix& col) {
    const Blocks c = layout(x, y, s);
    ChainMap f{s, {}};
    for (int k = x.low; k <= x.high(); ++k)
        f.comps.push_back(from_coords(y.module(k + s), x.term(k), col, c.offset[static_cast<std::size_t>(k - x.low)]));
    return f;
}

// Rep over the quiver with one copy of Q per degree plus differential edges.
Rep complex_rep(const ProjComplex& x) {
    const auto& a = *x.algebra;
    const std::size_t n = a.vertex_count();
    Rep r{a.p(), {}, {}};
    for (const auto& m : x.modules)
        for (auto d : m.dims()) r.dims.push_back(d);
    for (std::size_t k = 0; k < x.modules.size(); ++k)
        for (const auto& e : x.modules[k].rep.edges) r.edges.push_back({k * n + e.source, k * n + e.target, e.mat});
    for (std::size_t k = 0; k + 1 < x.modules.size(); ++k)
        for (std::size_t v = 0; v < n; ++v) r.edges.push_back({k * n + v, (k + 1) * n + v, x.diffs[k][v]});
    return r;
}

}  // namespace

ProjSum ProjComplex::term(int deg) const {
    if (deg < low || deg > high()) return proj_zero(*algebra);
    return terms[static_cast<std::size_t>(deg - low)];
}

ModuleRep ProjComplex::module(int deg) const {
    if (deg < low || deg > high()) return zero_module(algebra);
    return modules[static_cast<std::size_t>(deg - low)];
}

RepMap ProjComplex::diff(int deg) const {
    if (deg < low || deg >= high()) return zero_map(module(deg).rep, module(deg + 1).rep);
    return diffs[static_cast<std::size_t>(deg - low)];
}

bool ProjComplex::is_zero() const {
    return std::all_of(terms.begin(), terms.end(), [](const ProjSum& t) { return t.is_zero(); });
}

ProjComplex make_complex(const AlgebraPtr& a, int low, std::vector<ProjSum> terms, std::vector<RepMap> diffs) {
    if (terms.empty()) throw UsageError("a complex needs at least one term");
    if (diffs.size() + 1 != terms.size()) throw UsageError("need one differential between consecutive terms");
    ProjComplex x{a, low, std::move(terms), {}, std::move(diffs)};
    for (const auto& t : x.terms) {
        if (t.mult.size() != a->vertex_count()) throw UsageError("term has the wrong number of vertices");
        x.modules.push_back(proj_module(a, t));
    }
    for (std::size_t k = 0; k < x.diffs.size(); ++k) {
        if (!is_morphism(x.modules[k].rep, x.modules[k + 1].rep, x.diffs[k]))
            throw UsageError("differential is not a module map");
        if (k > 0 && !is_zero_map(compose(x.diffs[k], x.diffs[k - 1]))) throw UsageError("d o d is not zero");
    }
    return x;
}

ProjComplex zero_complex(const AlgebraPtr& a) {
    const ProjSum z = proj_zero(*a);
    const ModuleRep m = zero_module(a);
    return make_complex(a, -1, {z, z}, {zero_map(m.rep, m.rep)});
}

ProjComplex stalk(const AlgebraPtr& a, const ProjSum& p, int degree) { return make_complex(a, degree, {p}, {}); }

ProjComplex two_term(const AlgebraPtr& a, const ProjSum& p1, const ProjSum& p0, RepMap d) {
    return make_complex(a, -1, {p1, p0}, {std::move(d)});
}

ProjComplex presentation_complex(const ModuleRep& m) {
    const auto pres = min_presentation(m);
    return two_term(m.algebra, pres.p1, pres.p0, pres.d);
}

ProjComplex shift(const ProjComplex& x, int n) {
    ProjComplex y = x;
    y.low = x.low - n;
    if (n % 2 != 0)
        for (auto& d : y.diffs) d = scale_map(d, x.algebra->p() - 1);
    return y;
}

ProjComplex pad(const ProjComplex& x, int lo, int hi) {
    if (lo > x.low || hi < x.high()) throw UsageError("pad: range must contain the complex");
    std::vector<ProjSum> terms;
    std::vector<RepMap> diffs;
    for (int k = lo; k <= hi; ++k) terms.push_back(x.term(k));
    for (int k = lo; k < hi; ++k) diffs.push_back(x.diff(k));
    return make_complex(x.algebra, lo, std::move(terms), std::move(diffs));
}

ProjComplex trim(const ProjComplex& x) {
    int lo = x.low, hi = x.high();
    while (lo <= hi && x.term(lo).is_zero()) ++lo;
    while (hi >= lo && x.term(hi).is_zero()) --hi;
    if (lo > hi) return zero_complex(x.algebra);
    std::vector<ProjSum> terms;
    std::vector<RepMap> diffs;
    for (int k = lo; k <= hi; ++k) terms.push_back(x.term(k));
    for (int k = lo; k < hi; ++k) diffs.push_back(x.diff(k));
    return make_complex(x.algebra, lo, std::move(terms), std::move(diffs));
}

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
    const auto& a = x.algebra;
    const int lo = std::min(x.low, y.low), hi = std::max(x.high(), y.high());
    std::vector<ProjBiproduct> bp;
    for (int k = lo; k <= hi; ++k) bp.push_back(proj_biproduct(a, x.term(k), y.term(k)));
    std::vector<ProjSum> terms;
    std::vector<RepMap> diffs;
    for (const auto& b : bp) terms.push_back(b.sum);
    for (int k = lo; k < hi; ++k) {
        const auto& s = bp[static_cast<std::size_t>(k - lo)];
        const auto& t = bp[static_cast<std::size_t>(k - lo + 1)];
        diffs.push_back(add_maps(compose(t.in1, compose(x.diff(k), s.pr1)), compose(t.in2, compose(y.diff(k), s.pr2))));
    }
    return make_complex(a, lo, std::move(terms), std::move(diffs));
}

ProjComplex direct_sum(const std::vector<ProjComplex>& parts, const AlgebraPtr& a) {
    ProjComplex out = zero_complex(a);
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

RepMap component(const ChainMap& f, const ProjComplex& x, const ProjComplex& y, int deg) {
    if (deg < x.low || deg > x.high()) return zero_map(x.module(deg).rep, y.module(deg + f.shift).rep);
    return f.comps[static_cast<std::size_t>(deg - x.low)];
}

bool is_chain_map(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
    if (f.comps.size() != x.terms.size()) return false;
    const Residue sg = sign(f.shift, x.algebra->p());
    for (int k = x.low; k <= x.high(); ++k) {
        const RepMap fk = component(f, x, y, k);
        if (!is_morphism(x.module(k).rep, y.module(k + f.shift).rep, fk)) return false;
        const RepMap lhs = scale_map(compose(y.diff(k + f.shift), fk), sg);
        const RepMap rhs = compose(component(f, x, y, k + 1), x.diff(k));
        if (lhs != rhs) return false;
    }
    return true;
}

KHom hom_k(const ProjComplex& x, const ProjComplex& y, int s) {
    KHom out;
    const FpMatrix chains = kernel(chain_matrix(x, y, s));
    const FpMatrix homotopies = column_space(homotopy_matrix(x, y, s));
    out.chain_dim = chains.cols();
    out.homotopy_rank = homotopies.cols();
    out.dim = out.chain_dim - out.homotopy_rank;
    FpMatrix span = homotopies;
    for (std::size_t c = 0; c < chains.cols() && out.basis.size() < out.dim; ++c) {
        const FpMatrix v = chains.column(c);
        if (span.cols() > 0 && contained_in(v, span)) continue;
        span = hstack(span, v);
        out.basis.push_back(chain_from_coords(x, y, s, v));
    }
    return out;
}

std::size_t hom_k_dim(const ProjComplex& x, const ProjComplex& y, int s) {
    return rank(kernel(chain_matrix(x, y, s))) - rank(homotopy_matrix(x, y, s));
}

bool is_null_homotopic(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
    const FpMatrix v = chain_coords(x, y, f);
    if (v.is_zero()) return true;
    const FpMatrix h = homotopy_matrix(x, y, f.shift);
    return h.cols() > 0 && contained_in(v, h);
}

std::size_t k_span_dim(const ProjComplex& x, const ProjComplex& y, int s, const std::vector<ChainMap>& maps) {
    FpMatrix h = homotopy_matrix(x, y, s);
    const std::size_t base = rank(h);
    for (const auto& f : maps) h = hstack(h, chain_coords(x, y, f));
    return rank(h) - base;
}

std::optional<FpMatrix> k_coordinates(const ProjComplex& x, const ProjComplex& y, int s, const std::vector<ChainMap>& basis,
                                      const ChainMap& f) {
    FpMatrix m(chain_coords(x, y, f).rows(), 0, x.algebra->p());
    for (const auto& b : basis) m = hstack(m, chain_coords(x, y, b));
    m = hstack(m, homotopy_matrix(x, y, s));
    auto sol = solve(m, chain_coords(x, y, f));
    if (!sol) return std::nullopt;
    return sol->block(0, 0, basis.size(), 1);
}

ComplexSum direct_sum_with_maps(const std::vector<ProjComplex>& parts, const AlgebraPtr& a) {
    int lo = -1, hi = 0;
    for (const auto& p : parts) {
        lo = std::min(lo, p.low);
        hi = std::max(hi, p.high());
    }
    const std::size_t n = parts.size(), len = static_cast<std::size_t>(hi - lo + 1);
    // per degree: running sum term and the slot injections of each part
    std::vector<ProjSum> terms(len, proj_zero(*a));
    std::vector<std::vector<RepMap>> in(n, std::vector<RepMap>(len)), pr(n, std::vector<RepMap>(len));
    for (std::size_t d = 0; d < len; ++d) {
        const int deg = lo + static_cast<int>(d);
        for (std::size_t i = 0; i < n; ++i) {
            const auto bp = proj_biproduct(a, terms[d], parts[i].term(deg));
            for (std::size_t j = 0; j < i; ++j) {
                in[j][d] = compose(bp.in1, in[j][d]);
                pr[j][d] = compose(pr[j][d], bp.pr1);
            }
            in[i][d] = bp.in2;
            pr[i][d] = bp.pr2;
            terms[d] = bp.sum;
        }
    }
    std::vector<RepMap> diffs;
    for (std::size_t d = 0; d + 1 < len; ++d) {
        const int deg = lo + static_cast<int>(d);
        RepMap dd = zero_map(proj_module(a, terms[d]).rep, proj_module(a, terms[d + 1]).rep);
        for (std::size_t i = 0; i < n; ++i)
            dd = add_maps(dd, compose(in[i][d + 1], compose(parts[i].diff(deg), pr[i][d])));
        diffs.push_back(std::move(dd));
    }
    ComplexSum out{make_complex(a, lo, terms, std::move(diffs)), {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        ChainMap fi{0, {}}, gi{0, {}};
        for (int deg = parts[i].low; deg <= parts[i].high(); ++deg) fi.comps.push_back(in[i][static_cast<std::size_t>(deg - lo)]);
        for (std::size_t d = 0; d < len; ++d) gi.comps.push_back(pr[i][d]);
        out.in.push_back(std::move(fi));
        out.pr.push_back(std::move(gi));
    }
    return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f, const ProjComplex& x, const ProjComplex& y, const ProjComplex& z) {
    ChainMap out{f.shift + g.shift, {}};
    for (int k = x.low; k <= x.high(); ++k) {
        const RepMap fk = component(f, x, y, k);
        const int m = k + f.shift;
        if (m < y.low || m > y.high()) {
            out.comps.push_back(zero_map(x.module(k).rep, z.module(k + out.shift).rep));
            continue;
        }
        out.comps.push_back(compose(component(g, y, z, m), fk));
    }
    return out;
}

ChainMap identity_chain(const ProjComplex& x) {
    ChainMap f{0, {}};
    for (const auto& m : x.modules) f.comps.push_back(identity_map(m.rep));
    return f;
}

ChainMap zero_chain(const ProjComplex& x, const ProjComplex& y, int s) {
    ChainMap f{s, {}};
    for (int k = x.low; k <= x.high(); ++k) f.comps.push_back(zero_map(x.module(k).rep, y.module(k + s).rep));
    return f;
}

ChainMap add_chains(const ChainMap& f, const ChainMap& g) {
    if (f.shift != g.shift || f.comps.size() != g.comps.size()) throw UsageError("add_chains: shape mismatch");
    ChainMap h{f.shift, {}};
    for (std::size_t k = 0; k < f.comps.size(); ++k) h.comps.push_back(add_maps(f.comps[k], g.comps[k]));
    return h;
}

ChainMap scale_chain(const ChainMap& f, Residue s) {
    ChainMap h{f.shift, {}};
    for (const auto& c : f.comps) h.comps.push_back(scale_map(c, s));
    return h;
}

ModuleRep homology(const ProjComplex& x, int deg) {
    const ModuleRep m = x.module(deg);
    const auto k = kernel_of(m.rep, x.module(deg + 1).rep, x.diff(deg));
    const RepMap in = x.diff(deg - 1);
    RepMap into_k;
    for (std::size_t v = 0; v < in.size(); ++v) {
        auto sol = solve(k.map[v], in[v]);
        if (!sol) throw UsageError("homology: image not inside the kernel");
        into_k.push_back(*sol);
    }
    return {x.algebra, cokernel_of(x.module(deg - 1).rep, k.object, into_k).object};
}

ModuleRep h0(const ProjComplex& x) { return homology(x, 0); }
ModuleRep h_minus1(const ProjComplex& x) { return homology(x, -1); }

Minimized minimize(const ProjComplex& x) {
    const auto& a = x.algebra;
    Minimized out{x, identity_chain(x), identity_chain(x)};
    while (true) {
        ProjComplex& c = out.complex;
        bool found = false;
        int k = 0;
        std::size_t ui = 0, uj = 0;
        for (int deg = c.low; deg < c.high() && !found; ++deg) {
            const ProjSum src = c.term(deg), dst = c.term(deg + 1);
            for (std::size_t j = 0; j < src.slot_count() && !found; ++j)
                for (std::size_t i = 0; i < dst.slot_count() && !found; ++i)
                    if (unit_coefficient(*a, src, dst, c.diff(deg), i, j) != 0) {
                        found = true;
                        k = deg;
                        ui = i;
                        uj = j;
                    }
        }
        if (!found) break;

        const ProjSum p = c.term(k), q = c.term(k + 1);
        const std::size_t u = p.slots()[uj];
        const ProjSum pu = proj_single(*a, u);
        ProjSum b = p, bq = q;
        --b.mult[u];
        --bq.mult[u];
        auto split = [&](const ProjSum& whole, std::size_t slot, const ProjSum& rest) {
            std::vector<long> to_whole_single{static_cast<long>(slot)}, to_whole_rest, from_whole_single, from_whole_rest;
            for (std::size_t s = 0, r = 0; s < whole.slot_count(); ++s) {
                if (s == slot) {
                    from_whole_single.push_back(0);
                    from_whole_rest.push_back(-1);
                } else {
                    to_whole_rest.push_back(static_cast<long>(s));
                    from_whole_single.push_back(-1);
                    from_whole_rest.push_back(static_cast<long>(r++));
                }
            }
            return std::array<RepMap, 4>{slot_map(a, pu, whole, to_whole_single), slot_map(a, rest, whole, to_whole_rest),
                                         slot_map(a, whole, pu, from_whole_single), slot_map(a, whole, rest, from_whole_rest)};
        };
        const auto [e_j, e_b, r_j, r_b] = split(p, uj, b);
        const auto [e_i, e_bq, r_i, r_bq] = split(q, ui, bq);
        const RepMap d = c.diff(k);
        const RepMap phi = compose(r_i, compose(d, e_j));
        const RepMap delta = compose(r_i, compose(d, e_b));
        const RepMap gamma = compose(r_bq, compose(d, e_j));
        const RepMap eps = compose(r_bq, compose(d, e_b));
        const auto phi_inv = inverse_map(phi);
        if (!phi_inv) throw UsageError("minimize: unit block is not invertible");
        const RepMap neg_phi_inv = scale_map(*phi_inv, a->p() - 1);

        std::vector<ProjSum> terms = c.terms;
        std::vector<RepMap> diffs = c.diffs;
        const auto kk = static_cast<std::size_t>(k - c.low);
        terms[kk] = b;
        terms[kk + 1] = bq;
        diffs[kk] = add_maps(eps, compose(gamma, compose(neg_phi_inv, delta)));
        if (kk > 0) diffs[kk - 1] = compose(r_b, c.diffs[kk - 1]);
        if (kk + 1 < diffs.size()) diffs[kk + 1] = compose(c.diffs[kk + 1], e_bq);
        ProjComplex next = make_complex(a, c.low, std::move(terms), std::move(diffs));

        ChainMap iota = identity_chain(next), pi = identity_chain(c);
        iota.comps[kk] = add_maps(e_b, compose(e_j, compose(neg_phi_inv, delta)));
        iota.comps[kk + 1] = e_bq;
        pi.comps[kk] = r_b;
        pi.comps[kk + 1] = add_maps(r_bq, compose(gamma, compose(neg_phi_inv, r_i)));
        out.iota = compose(out.iota, iota, next, c, x);
        out.pi = compose(pi, out.pi, x, c, next);
        out.complex = std::move(next);
    }
    return out;
}

std::optional<ProjComplex> as_two_term(const ProjComplex& x) {
    const ProjComplex m = minimize(x).complex;
    for (int k = m.low; k <= m.high(); ++k)
        if ((k < -1 || k > 0) && !m.term(k).is_zero()) return std::nullopt;
    return two_term(x.algebra, m.term(-1), m.term(0), m.diff(-1));
}

ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
    if (f.shift != 0) throw UsageError("cone: chain map must have degree 0");
    const auto& a = x.algebra;
    const int lo = std::min(x.low - 1, y.low), hi = std::max(x.high() - 1, y.high());
    std::vector<ProjBiproduct> bp;
    for (int k = lo; k <= hi; ++k) bp.push_back(proj_biproduct(a, x.term(k + 1), y.term(k)));
    std::vector<ProjSum> terms;
    std::vector<RepMap> diffs;
    for (const auto& b : bp) terms.push_back(b.sum);
    for (int k = lo; k < hi; ++k) {
        const auto& s = bp[static_cast<std::size_t>(k - lo)];
        const auto& t = bp[static_cast<std::size_t>(k - lo + 1)];
        const RepMap dx = scale_map(x.diff(k + 1), a->p() - 1);
        RepMap d = compose(t.in1, compose(dx, s.pr1));
        d = add_maps(d, compose(t.in2, compose(component(f, x, y, k + 1), s.pr1)));
        d = add_maps(d, compose(t.in2, compose(y.diff(k), s.pr2)));
        diffs.push_back(std::move(d));
    }
    return make_complex(a, lo, std::move(terms), std::move(diffs));
}

std::vector<ProjComplex> decompose_complex(const ProjComplex& x) {
    const ProjComplex m = trim(minimize(x).complex);
    if (m.is_zero()) return {};
    const auto& a = m.algebra;
    const std::size_t n = a->vertex_count();
    std::vector<ProjComplex> out;
    for (const auto& s : decompose(complex_rep(m))) {
        std::vector<ProjSum> terms;
        std::vector<RepMap> epis, inv;
        for (std::size_t k = 0; k < m.terms.size(); ++k) {
            Rep part{a->p(), {}, {}};
            for (std::size_t v = 0; v < n; ++v) part.dims.push_back(s.object.dims[k * n + v]);
            for (std::size_t e = 0; e < a->arrows().size(); ++e) {
                const auto& edge = s.object.edges[k * a->arrows().size() + e];
                part.edges.push_back({edge.source - k * n, edge.target - k * n, edge.mat});
            }
            const auto cov = projective_cover({a, part});
            terms.push_back(cov.proj);
            epis.push_back(cov.epi);
            inv.push_back(*inverse_map(cov.epi));
        }
        std::vector<RepMap> diffs;
        const std::size_t base = m.terms.size() * a->arrows().size();
        for (std::size_t k = 0; k + 1 < m.terms.size(); ++k) {
            RepMap d;
            for (std::size_t v = 0; v < n; ++v) d.push_back(s.object.edges[base + k * n + v].mat);
            diffs.push_back(compose(inv[k + 1], compose(d, epis[k])));
        }
        ProjComplex part = trim(make_complex(a, m.low, std::move(terms), std::move(diffs)));
        if (part.low >= -1 && part.high() <= 0) part = pad(part, -1, 0);
        out.push_back(std::move(part));
    }
    return out;
}

bool is_isomorphic_k(const ProjComplex& x, const ProjComplex& y) {
    ProjComplex mx = trim(minimize(x).complex), my = trim(minimize(y).complex);
    if (mx.is_zero() || my.is_zero()) return mx.is_zero() && my.is_zero();
    if (mx.low != my.low || mx.terms != my.terms) return false;
    return isomorphism(complex_rep(mx), complex_rep(my)).has_value();
}

nlohmann::json complex_to_json(const ProjComplex& x) {
    const auto& a = *x.algebra;
    nlohmann::json doc;
    doc["low"] = x.low;
    doc["terms"] = nlohmann::json::array();
    for (const auto& t : x.terms) {
        nlohmann::json term = nlohmann::json::object();
        for (std::size_t v = 0; v < t.mult.size(); ++v) term[a.vertex_name(v)] = t.mult[v];
        doc["terms"].push_back(term);
    }
    doc["differentials"] = nlohmann::json::array();
    for (std::size_t k = 0; k + 1 < x.terms.size(); ++k) {
        nlohmann::json entries = nlohmann::json::array();
        const auto& src = x.terms[k];
        const auto& dst = x.terms[k + 1];
        const auto imgs = generator_images(a, src, x.diffs[k]);
        const auto ss = src.slots(), ds = dst.slots();
        for (std::size_t j = 0; j < ss.size(); ++j)
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const auto& paths = a.paths_between(ds[i], ss[j]);
                const std::size_t base = slot_offset(a, dst, i, ss[j]);
                for (std::size_t r = 0; r < paths.size(); ++r) {
                    const Residue c = imgs[j](base + r, 0);
                    if (c != 0)
                        entries.push_back({{"from", j}, {"to", i}, {"path", a.path_name(a.basis()[paths[r]])}, {"coeff", c}});
                }
            }
        doc["differentials"].push_back(entries);
    }
    return doc;
}

ProjComplex complex_from_json(const AlgebraPtr& a, const nlohmann::json& doc) {
    try {
        const int low = doc.at("low").get<int>();
        std::vector<ProjSum> terms;
        for (const auto& t : doc.at("terms")) {
            ProjSum p = proj_zero(*a);
            for (auto it = t.begin(); it != t.end(); ++it) p.mult[a->vertex_index(it.key())] = it.value().get<std::size_t>();
            terms.push_back(p);
        }
        std::vector<RepMap> diffs;
        const auto& ds = doc.at("differentials");
        if (ds.size() + 1 != terms.size()) throw ParseError("need one differential between consecutive terms");
        for (std::size_t k = 0; k < ds.size(); ++k) {
            const ProjSum& src = terms[k];
            const ProjSum& dst = terms[k + 1];
            const ModuleRep target = proj_module(a, dst);
            const auto ss = src.slots();
            std::vector<FpMatrix> imgs;
            for (auto v : ss) imgs.emplace_back(target.dims()[v], 1, a->p());
            for (const auto& e : ds[k]) {
                const auto j = e.at("from").get<std::size_t>(), i = e.at("to").get<std::size_t>();
                if (j >= ss.size() || i >= dst.slot_count()) throw ParseError("slot index out of range");
                const std::string name = e.at("path").get<std::string>();
                const auto& paths = a->paths_between(dst.slots()[i], ss[j]);
                bool hit = false;
                for (std::size_t r = 0; r < paths.size(); ++r)
                    if (a->path_name(a->basis()[paths[r]]) == name) {
                        auto& x = imgs[j](slot_offset(*a, dst, i, ss[j]) + r, 0);
                        x = PrimeField(a->p()).add(x, PrimeField(a->p()).reduce(e.at("coeff").get<long long>()));
                        hit = true;
                    }
                if (!hit) throw ParseError("unknown basis path '" + name + "' in differential");
            }
            diffs.push_back(map_from_generators(target, src, imgs));
        }
        return make_complex(a, low, std::move(terms), std::move(diffs));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed complex: ") + e.what());
    } catch (const UsageError& e) {
        throw ParseError(std::string("invalid complex: ") + e.what());
    }
}

}  // namespace tautilt
