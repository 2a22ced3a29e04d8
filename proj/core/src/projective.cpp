#include "tautilt/projective.hpp"

#include <algorithm>

namespace tautilt {

std::vector<std::size_t> ProjSum::slots() const {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < mult.size(); ++v)
        for (std::size_t k = 0; k < mult[v]; ++k) s.push_back(v);
    return s;
}

std::size_t ProjSum::slot_count() const {
    std::size_t n = 0;
    for (auto m : mult) n += m;
    return n;
}

ProjSum proj_zero(const BoundQuiverAlgebra& a) { return {std::vector<std::size_t>(a.vertex_count(), 0)}; }

ProjSum proj_single(const BoundQuiverAlgebra& a, std::size_t v) {
    ProjSum x = proj_zero(a);
    x.mult.at(v) = 1;
    return x;
}

ProjSum proj_add(const ProjSum& x, const ProjSum& y) {
    ProjSum z = x;
    for (std::size_t v = 0; v < z.mult.size(); ++v) z.mult[v] += y.mult.at(v);
    return z;
}

std::string proj_name(const BoundQuiverAlgebra& a, const ProjSum& x) {
    std::string s;
    for (std::size_t v = 0; v < x.mult.size(); ++v) {
        if (!x.mult[v]) continue;
        if (!s.empty()) s += "+";
        s += "P" + a.vertex_name(v);
        if (x.mult[v] > 1) s += "^" + std::to_string(x.mult[v]);
    }
    return s.empty() ? "0" : s;
}

ModuleRep proj_module(const AlgebraPtr& a, const ProjSum& x) {
    std::vector<ModuleRep> parts;
    for (auto v : x.slots()) parts.push_back(projective_module(a, v));
    return direct_sum(parts, a);
}

std::size_t slot_offset(const BoundQuiverAlgebra& a, const ProjSum& x, std::size_t slot, std::size_t w) {
    const auto s = x.slots();
    std::size_t off = 0;
    for (std::size_t k = 0; k < slot; ++k) off += a.paths_between(s[k], w).size();
    return off;
}

std::size_t generator_row(const BoundQuiverAlgebra& a, const ProjSum& x, std::size_t slot) {
    const std::size_t v = x.slots().at(slot);
    const auto& loops = a.paths_between(v, v);
    const auto it = std::find(loops.begin(), loops.end(), a.trivial_path(v));
    return slot_offset(a, x, slot, v) + static_cast<std::size_t>(it - loops.begin());
}

std::vector<FpMatrix> generator_images(const BoundQuiverAlgebra& a, const ProjSum& x, const RepMap& f) {
    std::vector<FpMatrix> out;
    const auto s = x.slots();
    for (std::size_t j = 0; j < s.size(); ++j) out.push_back(f[s[j]].column(generator_row(a, x, j)));
    return out;
}

RepMap map_from_generators(const ModuleRep& target, const ProjSum& x, const std::vector<FpMatrix>& images) {
    const auto& a = *target.algebra;
    const auto s = x.slots();
    RepMap f;
    for (std::size_t w = 0; w < a.vertex_count(); ++w) {
        std::size_t cols = 0;
        for (auto u : s) cols += a.paths_between(u, w).size();
        FpMatrix m(target.dims()[w], cols, a.p());
        std::size_t c = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
            for (auto q : a.paths_between(s[j], w))
                m.set_block(0, c++, path_action(target, s[j], a.basis()[q].arrows) * images[j]);
        f.push_back(std::move(m));
    }
    return f;
}

Residue unit_coefficient(const BoundQuiverAlgebra& a, const ProjSum& from, const ProjSum& to, const RepMap& f,
                         std::size_t i, std::size_t j) {
    const std::size_t u = from.slots().at(j);
    if (to.slots().at(i) != u) return 0;
    return f[u](generator_row(a, to, i), generator_row(a, from, j));
}

RepMap transpose_to_opposite(const AlgebraPtr& a, const ProjSum& from, const ProjSum& to, const RepMap& f) {
    auto op = a->opposite();
    const PrimeField fld(a->p());
    const auto us = from.slots();
    const auto vs = to.slots();
    const auto imgs = generator_images(*a, from, f);
    const ModuleRep target = proj_module(op, from);
    std::vector<FpMatrix> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::size_t v = vs[i];
        FpMatrix img(target.dims()[v], 1, a->p());
        std::size_t row = 0;
        for (std::size_t j = 0; j < us.size(); ++j) {
            const std::size_t u = us[j];
            const auto& op_paths = op->paths_between(u, v);
            const auto& paths = a->paths_between(v, u);
            const std::size_t base = slot_offset(*a, to, i, u);
            for (std::size_t r = 0; r < paths.size(); ++r) {
                const Residue c = imgs[j](base + r, 0);
                if (c == 0) continue;
                auto rev = a->basis()[paths[r]].arrows;
                std::reverse(rev.begin(), rev.end());
                const AlgElement x = op->reduce_path(u, rev);
                for (std::size_t k = 0; k < op_paths.size(); ++k)
                    img(row + k, 0) = fld.add(img(row + k, 0), fld.mul(c, x(op_paths[k], 0)));
            }
            row += op_paths.size();
        }
        out.push_back(std::move(img));
    }
    return map_from_generators(target, to, out);
}

RepMap slot_map(const AlgebraPtr& a, const ProjSum& from, const ProjSum& to, const std::vector<long>& target_slot) {
    const ModuleRep target = proj_module(a, to);
    const auto fs = from.slots();
    std::vector<FpMatrix> images;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        FpMatrix img(target.dims()[fs[j]], 1, a->p());
        if (target_slot[j] >= 0) {
            const auto t = static_cast<std::size_t>(target_slot[j]);
            if (to.slots().at(t) != fs[j]) throw UsageError("slot_map: slots at different vertices");
            img(generator_row(*a, to, t), 0) = 1;
        }
        images.push_back(std::move(img));
    }
    return map_from_generators(target, from, images);
}

ProjBiproduct proj_biproduct(const AlgebraPtr& a, const ProjSum& x, const ProjSum& y) {
    ProjBiproduct out;
    out.sum = proj_add(x, y);
    std::vector<std::size_t> start(x.mult.size(), 0);
    for (std::size_t v = 1; v < start.size(); ++v) start[v] = start[v - 1] + out.sum.mult[v - 1];
    std::vector<long> to_sum_x, to_sum_y, from_sum_x(out.sum.slot_count(), -1), from_sum_y(out.sum.slot_count(), -1);
    std::size_t jx = 0, jy = 0;
    for (std::size_t v = 0; v < x.mult.size(); ++v) {
        for (std::size_t k = 0; k < x.mult[v]; ++k) {
            const std::size_t s = start[v] + k;
            to_sum_x.push_back(static_cast<long>(s));
            from_sum_x[s] = static_cast<long>(jx++);
        }
        for (std::size_t k = 0; k < y.mult[v]; ++k) {
            const std::size_t s = start[v] + x.mult[v] + k;
            to_sum_y.push_back(static_cast<long>(s));
            from_sum_y[s] = static_cast<long>(jy++);
        }
    }
    out.in1 = slot_map(a, x, out.sum, to_sum_x);
    out.in2 = slot_map(a, y, out.sum, to_sum_y);
    out.pr1 = slot_map(a, out.sum, x, from_sum_x);
    out.pr2 = slot_map(a, out.sum, y, from_sum_y);
    return out;
}

}  // namespace tautilt
