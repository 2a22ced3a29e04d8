#include "tautilt/rep.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace tautilt {

namespace {

FpMatrix solve_columns(const FpMatrix& a, const FpMatrix& b) {
    EchelonReport e(a);
    FpMatrix x(a.cols(), b.cols(), a.p());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        auto s = e.solve(b.column(c));
        if (!s) throw UsageError("solve_columns: right-hand side outside the column space");
        x.set_block(0, c, *s);
    }
    return x;
}

void check_edges_match(const Rep& a, const Rep& b) {
    if (a.p != b.p || a.dims.size() != b.dims.size() || a.edges.size() != b.edges.size())
        throw UsageError("representations over different quivers");
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (a.edges[i].source != b.edges[i].source || a.edges[i].target != b.edges[i].target)
            throw UsageError("representations over different quivers");
}

std::size_t power_bound(const Rep& m) {
    std::size_t n = 1;
    for (auto d : m.dims) n = std::max(n, d);
    return n;
}

// f^(2^k) with 2^k >= bound, per vertex.
RepMap stable_power(RepMap f, std::size_t bound) {
    for (std::size_t e = 1; e < bound; e *= 2)
        for (auto& m : f) m = m * m;
    return f;
}

bool splits(const RepMap& f, std::size_t bound) {
    const RepMap g = stable_power(f, bound);
    bool all_zero = true, all_inv = true;
    for (const auto& m : g) {
        if (m.rows() == 0) continue;
        const std::size_t r = rank(m);
        if (r != 0) all_zero = false;
        if (r != m.rows()) all_inv = false;
    }
    return !all_zero && !all_inv;
}

RepMap combine(const std::vector<RepMap>& basis, const std::vector<Residue>& coeffs) {
    RepMap out = basis.front();
    for (auto& m : out) m = m.scaled(0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] != 0) out = add_maps(out, scale_map(basis[i], coeffs[i]));
    return out;
}

// Some endomorphism that is neither nilpotent nor invertible, if End(m) is not local.
std::optional<RepMap> find_splitter(const Rep& m, std::uint64_t seed) {
    const auto basis = hom_basis(m, m);
    const std::size_t d = basis.size();
    if (d <= 1) return std::nullopt;
    const std::size_t bound = power_bound(m);
    for (const auto& b : basis)
        if (splits(b, bound)) return b;
    double space = 1;
    for (std::size_t i = 0; i < d; ++i) space *= m.p;
    std::vector<Residue> c(d, 0);
    if (space <= 65536.0) {
        // odometer over all coefficient vectors
        while (true) {
            std::size_t i = 0;
            while (i < d && c[i] == m.p - 1) c[i++] = 0;
            if (i == d) break;
            ++c[i];
            RepMap f = combine(basis, c);
            if (splits(f, bound)) return f;
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> dist(0, m.p - 1);
    for (int attempt = 0; attempt < 512; ++attempt) {
        for (auto& x : c) x = dist(rng);
        RepMap f = combine(basis, c);
        if (splits(f, bound)) return f;
    }
    return std::nullopt;
}

std::optional<RepMap> indecomposable_iso(const Rep& a, const Rep& b) {
    const auto fs = hom_basis(a, b);
    if (fs.empty()) return std::nullopt;
    const auto gs = hom_basis(b, a);
    for (const auto& f : fs)
        for (const auto& g : gs)
            if (is_iso_map(compose(g, f))) return f;
    return std::nullopt;
}

}  // namespace

std::size_t Rep::total() const {
    std::size_t n = 0;
    for (auto d : dims) n += d;
    return n;
}

std::size_t Rep::offset(std::size_t v) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < v; ++i) n += dims[i];
    return n;
}

bool same_shape(const Rep& a, const Rep& b) {
    if (a.p != b.p || a.dims != b.dims || a.edges.size() != b.edges.size()) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (a.edges[i].source != b.edges[i].source || a.edges[i].target != b.edges[i].target) return false;
    return true;
}

RepMap identity_map(const Rep& m) {
    RepMap f;
    for (auto d : m.dims) f.push_back(FpMatrix::identity(d, m.p));
    return f;
}

RepMap zero_map(const Rep& from, const Rep& to) {
    check_edges_match(from, to);
    RepMap f;
    for (std::size_t v = 0; v < from.dims.size(); ++v) f.emplace_back(to.dims[v], from.dims[v], from.p);
    return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    if (g.size() != f.size()) throw UsageError("compose: vertex count mismatch");
    RepMap h;
    for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
    return h;
}

RepMap add_maps(const RepMap& a, const RepMap& b) {
    if (a.size() != b.size()) throw UsageError("add_maps: vertex count mismatch");
    RepMap h;
    for (std::size_t v = 0; v < a.size(); ++v) h.push_back(a[v] + b[v]);
    return h;
}

RepMap scale_map(const RepMap& a, Residue s) {
    RepMap h;
    for (const auto& m : a) h.push_back(m.scaled(s));
    return h;
}

bool is_zero_map(const RepMap& f) {
    return std::all_of(f.begin(), f.end(), [](const FpMatrix& m) { return m.is_zero(); });
}

bool is_iso_map(const RepMap& f) {
    for (const auto& m : f)
        if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    return true;
}

std::optional<RepMap> inverse_map(const RepMap& f) {
    RepMap h;
    for (const auto& m : f) {
        if (m.rows() != m.cols()) return std::nullopt;
        auto i = inverse(m);
        if (!i) return std::nullopt;
        h.push_back(*i);
    }
    return h;
}

bool is_morphism(const Rep& from, const Rep& to, const RepMap& f) {
    check_edges_match(from, to);
    if (f.size() != from.dims.size()) return false;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v].rows() != to.dims[v] || f[v].cols() != from.dims[v]) return false;
    for (std::size_t e = 0; e < from.edges.size(); ++e) {
        const auto& a = from.edges[e];
        if (to.edges[e].mat * f[a.source] != f[a.target] * a.mat) return false;
    }
    return true;
}

FpMatrix flatten(const RepMap& f, std::uint32_t p) {
    std::size_t n = 0;
    for (const auto& m : f) n += m.rows() * m.cols();
    FpMatrix out(n, 1, p);
    std::size_t k = 0;
    for (const auto& m : f)
        for (auto x : m.entries()) out(k++, 0) = x;
    return out;
}

RepMap unflatten(const FpMatrix& column, std::size_t col, const Rep& from, const Rep& to) {
    RepMap f;
    std::size_t k = 0;
    for (std::size_t v = 0; v < from.dims.size(); ++v) {
        FpMatrix m(to.dims[v], from.dims[v], from.p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = column(k++, col);
        f.push_back(std::move(m));
    }
    return f;
}

FpMatrix total_matrix(const RepMap& f, const Rep& from, const Rep& to) {
    FpMatrix out(to.total(), from.total(), from.p);
    for (std::size_t v = 0; v < f.size(); ++v) out.set_block(to.offset(v), from.offset(v), f[v]);
    return out;
}

FpMatrix hom_space(const Rep& from, const Rep& to) {
    check_edges_match(from, to);
    const PrimeField fld(from.p);
    const std::size_t nv = from.dims.size();
    std::vector<std::size_t> var_off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + to.dims[v] * from.dims[v];
    const std::size_t nvars = var_off[nv];
    std::size_t neq = 0;
    for (const auto& e : from.edges) neq += to.dims[e.target] * from.dims[e.source];
    FpMatrix sys(neq, nvars, from.p);
    std::size_t row = 0;
    for (std::size_t ei = 0; ei < from.edges.size(); ++ei) {
        const auto& em = from.edges[ei];
        const auto& en = to.edges[ei];
        const std::size_t s = em.source, t = em.target;
        // N_e f_s - f_t M_e = 0, entry (i, j)
        for (std::size_t i = 0; i < to.dims[t]; ++i)
            for (std::size_t j = 0; j < from.dims[s]; ++j, ++row) {
                for (std::size_t k = 0; k < to.dims[s]; ++k) {
                    const Residue c = en.mat(i, k);
                    if (c == 0) continue;
                    Residue& x = sys(row, var_off[s] + k * from.dims[s] + j);
                    x = fld.add(x, c);
                }
                for (std::size_t k = 0; k < from.dims[t]; ++k) {
                    const Residue c = em.mat(k, j);
                    if (c == 0) continue;
                    Residue& x = sys(row, var_off[t] + i * from.dims[t] + k);
                    x = fld.sub(x, c);
                }
            }
    }
    return kernel(sys);
}

std::vector<RepMap> hom_basis(const Rep& from, const Rep& to) {
    const FpMatrix k = hom_space(from, to);
    std::vector<RepMap> out;
    for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unflatten(k, c, from, to));
    return out;
}

std::size_t hom_dim(const Rep& from, const Rep& to) { return hom_space(from, to).cols(); }

Rep direct_sum(const Rep& a, const Rep& b) {
    check_edges_match(a, b);
    Rep out{a.p, {}, {}};
    for (std::size_t v = 0; v < a.dims.size(); ++v) out.dims.push_back(a.dims[v] + b.dims[v]);
    for (std::size_t e = 0; e < a.edges.size(); ++e)
        out.edges.push_back({a.edges[e].source, a.edges[e].target, tautilt::direct_sum(a.edges[e].mat, b.edges[e].mat)});
    return out;
}

Rep direct_sum(const std::vector<Rep>& parts, const Rep& shape_of_zero) {
    Rep out{shape_of_zero.p, std::vector<std::size_t>(shape_of_zero.dims.size(), 0), {}};
    for (const auto& e : shape_of_zero.edges) out.edges.push_back({e.source, e.target, FpMatrix(0, 0, out.p)});
    for (const auto& r : parts) out = direct_sum(out, r);
    return out;
}

Rep conjugate(const Rep& m, const RepMap& g) {
    Rep out = m;
    for (auto& e : out.edges) {
        auto inv = inverse(g[e.target]);
        if (!inv) throw UsageError("conjugate: change of basis is not invertible");
        e.mat = *inv * e.mat * g[e.source];
    }
    return out;
}

Rep restrict_to(const Rep& m, const std::vector<FpMatrix>& basis) {
    Rep out{m.p, {}, {}};
    for (const auto& b : basis) out.dims.push_back(b.cols());
    for (const auto& e : m.edges)
        out.edges.push_back({e.source, e.target, solve_columns(basis[e.target], e.mat * basis[e.source])});
    return out;
}

Subobject kernel_of(const Rep& from, const Rep& /*to*/, const RepMap& f) {
    std::vector<FpMatrix> k;
    for (const auto& m : f) k.push_back(kernel(m));
    return {restrict_to(from, k), k};
}

Subobject image_of(const Rep& /*from*/, const Rep& to, const RepMap& f) {
    std::vector<FpMatrix> im;
    for (const auto& m : f) im.push_back(column_space(m));
    return {restrict_to(to, im), im};
}

Subobject cokernel_of(const Rep& /*from*/, const Rep& to, const RepMap& f) {
    RepMap q;
    std::vector<FpMatrix> right_inv;
    for (std::size_t v = 0; v < f.size(); ++v) {
        FpMatrix lk = left_kernel(f[v]);
        if (lk.cols() != to.dims[v]) lk = FpMatrix(0, to.dims[v], to.p);
        right_inv.push_back(solve_columns(lk, FpMatrix::identity(lk.rows(), to.p)));
        q.push_back(std::move(lk));
    }
    Rep out{to.p, {}, {}};
    for (const auto& m : q) out.dims.push_back(m.rows());
    for (const auto& e : to.edges) out.edges.push_back({e.source, e.target, q[e.target] * e.mat * right_inv[e.source]});
    return {out, q};
}

Subobject generated_by(const Rep& m, const FpMatrix& gens) {
    const std::size_t nv = m.dims.size();
    std::vector<FpMatrix> span(nv);
    for (std::size_t v = 0; v < nv; ++v) span[v] = FpMatrix(m.dims[v], 0, m.p);
    std::deque<std::pair<std::size_t, FpMatrix>> queue;
    auto push = [&](std::size_t v, const FpMatrix& x) {
        if (x.is_zero()) return;
        if (span[v].cols() > 0 && contained_in(x, span[v])) return;
        span[v] = hstack(span[v], x);
        queue.emplace_back(v, x);
    };
    for (std::size_t c = 0; c < gens.cols(); ++c)
        for (std::size_t v = 0; v < nv; ++v) push(v, gens.block(m.offset(v), c, m.dims[v], 1));
    while (!queue.empty()) {
        auto [v, x] = queue.front();
        queue.pop_front();
        for (const auto& e : m.edges)
            if (e.source == v) push(e.target, e.mat * x);
    }
    return {restrict_to(m, span), span};
}

std::vector<Summand> decompose(const Rep& m, std::uint64_t seed) {
    if (m.total() == 0) return {};
    auto f = find_splitter(m, seed);
    if (!f) return {{m, identity_map(m), identity_map(m)}};
    const RepMap g = stable_power(*f, power_bound(m));
    std::vector<FpMatrix> ker, im;
    RepMap proj_ker, proj_im;
    for (std::size_t v = 0; v < g.size(); ++v) {
        ker.push_back(kernel(g[v]));
        im.push_back(column_space(g[v]));
        const FpMatrix frame = hstack(ker.back(), im.back());
        const FpMatrix inv = *inverse(frame);
        proj_ker.push_back(inv.block(0, 0, ker.back().cols(), inv.cols()));
        proj_im.push_back(inv.block(ker.back().cols(), 0, im.back().cols(), inv.cols()));
    }
    std::vector<Summand> out;
    auto recurse = [&](const std::vector<FpMatrix>& basis, const RepMap& proj) {
        const Rep part = restrict_to(m, basis);
        for (auto& s : decompose(part, seed + 1))
            out.push_back({std::move(s.object), compose(basis, s.inclusion), compose(s.projection, proj)});
    };
    recurse(ker, proj_ker);
    recurse(im, proj_im);
    return out;
}

bool is_indecomposable(const Rep& m, std::uint64_t seed) { return m.total() > 0 && !find_splitter(m, seed); }

std::optional<RepMap> isomorphism(const Rep& a, const Rep& b, std::uint64_t seed) {
    check_edges_match(a, b);
    if (a.dims != b.dims) return std::nullopt;
    if (a.total() == 0) return identity_map(a);
    const auto da = decompose(a, seed);
    const auto db = decompose(b, seed);
    if (da.size() != db.size()) return std::nullopt;
    std::vector<bool> used(db.size(), false);
    RepMap witness = zero_map(a, b);
    for (const auto& sa : da) {
        bool matched = false;
        for (std::size_t j = 0; j < db.size() && !matched; ++j) {
            if (used[j] || sa.object.dims != db[j].object.dims) continue;
            if (auto phi = indecomposable_iso(sa.object, db[j].object)) {
                used[j] = true;
                matched = true;
                witness = add_maps(witness, compose(db[j].inclusion, compose(*phi, sa.projection)));
            }
        }
        if (!matched) return std::nullopt;
    }
    return witness;
}

bool canonical_less(const Rep& a, const Rep& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.dims != b.dims) return a.dims < b.dims;
    for (std::size_t e = 0; e < std::min(a.edges.size(), b.edges.size()); ++e) {
        const auto x = a.edges[e].mat.entries();
        const auto y = b.edges[e].mat.entries();
        if (!std::equal(x.begin(), x.end(), y.begin(), y.end()))
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
    return false;
}

}  // namespace tautilt
