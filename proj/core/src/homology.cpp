#include "tautilt/homology.hpp"

namespace tautilt {

namespace {

std::vector<FpMatrix> radical_spaces(const ModuleRep& m) {
    std::vector<FpMatrix> r;
    for (auto d : m.dims()) r.emplace_back(d, 0, m.algebra->p());
    for (const auto& e : m.rep.edges) r[e.target] = hstack(r[e.target], e.mat);
    for (auto& x : r) x = column_space(x);
    return r;
}

FpMatrix span_of(const std::vector<RepMap>& maps, std::size_t rows, std::uint32_t p) {
    FpMatrix out(rows, 0, p);
    for (const auto& f : maps) out = hstack(out, flatten(f, p));
    return column_space(out);
}

std::size_t flat_size(const ModuleRep& x, const ModuleRep& z) {
    std::size_t n = 0;
    for (std::size_t v = 0; v < x.dims().size(); ++v) n += x.dims()[v] * z.dims()[v];
    return n;
}

}  // namespace

ModuleRep radical(const ModuleRep& m) { return {m.algebra, restrict_to(m.rep, radical_spaces(m))}; }

std::vector<std::size_t> top_multiplicities(const ModuleRep& m) {
    const auto r = radical_spaces(m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < r.size(); ++v) out.push_back(m.dims()[v] - r[v].cols());
    return out;
}

ProjectiveCover projective_cover(const ModuleRep& m) {
    const auto& a = m.algebra;
    const auto r = radical_spaces(m);
    ProjSum proj = proj_zero(*a);
    std::vector<FpMatrix> images;
    for (std::size_t v = 0; v < r.size(); ++v) {
        FpMatrix span = r[v];
        for (std::size_t k = 0; k < m.dims()[v]; ++k) {
            FpMatrix e(m.dims()[v], 1, a->p());
            e(k, 0) = 1;
            if (span.cols() > 0 && contained_in(e, span)) continue;
            span = hstack(span, e);
            images.push_back(e);
            ++proj.mult[v];
        }
    }
    ModuleRep pm = proj_module(a, proj);
    RepMap epi = map_from_generators(m, proj, images);
    return {proj, std::move(pm), std::move(epi)};
}

InjectiveEnvelope injective_envelope(const ModuleRep& m) {
    const auto cover = projective_cover(dual_module(m));
    return {cover.proj, dual_module(cover.module), dual_map(cover.epi)};
}

Presentation min_presentation(const ModuleRep& m) {
    auto c0 = projective_cover(m);
    const auto k = kernel_of(c0.module.rep, m.rep, c0.epi);
    auto c1 = projective_cover({m.algebra, k.object});
    RepMap d = compose(k.map, c1.epi);
    return {c1.proj, c0.proj, std::move(c1.module), std::move(c0.module), std::move(d), std::move(c0.epi)};
}

bool is_radical_map(const BoundQuiverAlgebra& a, const ProjSum& from, const ProjSum& to, const RepMap& f) {
    for (std::size_t i = 0; i < to.slot_count(); ++i)
        for (std::size_t j = 0; j < from.slot_count(); ++j)
            if (unit_coefficient(a, from, to, f, i, j) != 0) return false;
    return true;
}

bool is_projective(const ModuleRep& m) { return projective_cover(m).module.total() == m.total(); }

bool is_injective(const ModuleRep& m) { return is_projective(dual_module(m)); }

ModuleRep transpose(const ModuleRep& m) {
    const auto pres = min_presentation(m);
    auto op = m.algebra->opposite();
    const RepMap dt = transpose_to_opposite(m.algebra, pres.p1, pres.p0, pres.d);
    const ModuleRep from = proj_module(op, pres.p0);
    const ModuleRep to = proj_module(op, pres.p1);
    return {op, cokernel_of(from.rep, to.rep, dt).object};
}

ModuleRep tau(const ModuleRep& m) { return dual_module(transpose(m)); }

ModuleRep tau_inverse(const ModuleRep& m) { return transpose(dual_module(m)); }

std::size_t ext1_dim(const ModuleRep& m, const ModuleRep& n) {
    const auto c0 = projective_cover(m);
    const auto k = kernel_of(c0.module.rep, m.rep, c0.epi);
    const ModuleRep km{m.algebra, k.object};
    const std::size_t total = hom_dim(km, n);
    return total - maps_through_target(km, c0.module, n, k.map).cols();
}

FpMatrix maps_through_target(const ModuleRep& x, const ModuleRep& y, const ModuleRep& z, const RepMap& iota) {
    std::vector<RepMap> maps;
    for (const auto& g : hom_basis(y, z)) maps.push_back(compose(g, iota));
    return span_of(maps, flat_size(x, z), x.algebra->p());
}

FpMatrix maps_through_source(const ModuleRep& x, const ModuleRep& y, const ModuleRep& z, const RepMap& pi) {
    std::vector<RepMap> maps;
    for (const auto& f : hom_basis(x, y)) maps.push_back(compose(pi, f));
    return span_of(maps, flat_size(x, z), x.algebra->p());
}

std::size_t stable_hom_mod_inj(const ModuleRep& n, const ModuleRep& m) {
    const auto env = injective_envelope(n);
    return hom_dim(n, m) - maps_through_target(n, env.module, m, env.mono).cols();
}

std::size_t stable_hom_mod_proj(const ModuleRep& n, const ModuleRep& m) {
    const auto cov = projective_cover(m);
    return hom_dim(n, m) - maps_through_source(n, cov.module, m, cov.epi).cols();
}

}  // namespace tautilt
