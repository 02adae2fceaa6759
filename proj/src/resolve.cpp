#include "ghal/resolve.hpp"

namespace ghal {

namespace {

/// Columns rho(e_j) v_s for every generator column v_s of `gens`.
Matrix orbit_span(const Module& m, const std::vector<std::size_t>& gens) {
    const std::size_t n = m.algebra()->dim();
    Matrix out(m.field(), m.dim(), gens.size() * n);
    for (std::size_t s = 0; s < gens.size(); ++s)
        for (std::size_t j = 0; j < n; ++j) out.set_block(0, s * n + j, m.action(j).column(gens[s]));
    return out;
}

}  // namespace

std::vector<std::size_t> cover_generators(const Module& m) {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < m.dim(); ++i) gens.push_back(i);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::vector<std::size_t> trial;
        for (auto g : gens)
            if (g != i) trial.push_back(g);
        if (rank(orbit_span(m, trial)) == m.dim()) gens = std::move(trial);
    }
    return gens;
}

ModuleHom hom_from_free(const Module& free, std::size_t rank, const Module& target, const Matrix& images) {
    const std::size_t n = target.algebra()->dim();
    if (free.dim() != rank * n || images.rows() != target.dim() || images.cols() != rank) {
        throw InvalidArgument("hom_from_free: shape mismatch");
    }
    Matrix mat(target.field(), target.dim(), rank * n);
    for (std::size_t s = 0; s < rank; ++s) {
        Matrix y = images.column(s);
        for (std::size_t j = 0; j < n; ++j) mat.set_block(0, s * n + j, target.action(j) * y);
    }
    return {free, target, mat};
}

FreeCover free_cover(const Module& m) {
    auto gens = cover_generators(m);
    Module cover = free_module(m.algebra(), gens.size());
    Matrix images = Matrix::identity(m.field(), m.dim()).select_columns(gens);
    ModuleHom projection = hom_from_free(cover, gens.size(), m, images);
    Submodule ker = kernel(projection);
    return FreeCover{m, std::move(gens), cover, projection, ker.module, ker.inclusion};
}

Module syzygy(const Module& m, std::size_t j) {
    Module cur = m;
    for (std::size_t i = 0; i < j; ++i) cur = free_cover(cur).syzygy;
    return cur;
}

ModuleHom Resolution::differential(std::size_t i) const {
    if (i == 0 || i >= steps.size()) throw InvalidArgument("resolution differential index out of range");
    return compose(steps[i - 1].inclusion, steps[i].projection);
}

Resolution resolution(const Module& m, std::size_t n) {
    Resolution r{m, {}};
    Module cur = m;
    for (std::size_t i = 0; i <= n; ++i) {
        r.steps.push_back(free_cover(cur));
        cur = r.steps.back().syzygy;
    }
    return r;
}

bool is_exact(const Resolution& r) {
    const auto& aug = r.augmentation();
    if (rank(aug.matrix) != r.module.dim()) return false;
    for (std::size_t i = 0; i <= r.length(); ++i) {
        // ker(d_i) (or of the augmentation when i = 0) must equal im(d_{i+1})
        const Matrix& out = i == 0 ? aug.matrix : r.differential(i).matrix;
        std::size_t ker_dim = out.cols() - rank(out);
        std::size_t im_dim = i + 1 <= r.length() ? rank(r.differential(i + 1).matrix)
                                                  : rank(r.steps[i].inclusion.matrix);
        if (ker_dim != im_dim) return false;
        if (i + 1 <= r.length() && !(out * r.differential(i + 1).matrix).is_zero()) return false;
    }
    return true;
}

ProjectivityCertificate is_projective(const Module& m) {
    ProjectivityCertificate cert{false, free_cover(m), std::nullopt};
    cert.section = module_section(cert.cover.projection);
    cert.projective = cert.section.has_value();
    return cert;
}

std::optional<std::size_t> proj_dim_upto(const Module& m, std::size_t bound) {
    Module cur = m;
    for (std::size_t j = 0; j <= bound; ++j) {
        auto cert = is_projective(cur);
        if (cert.projective) return j;
        cur = cert.cover.syzygy;
    }
    return std::nullopt;
}

Matrix ext_coboundary(const Resolution& r, const Module& n, std::size_t j) {
    const AlgebraPtr& a = r.module.algebra();
    const std::size_t nd = n.dim();
    const std::size_t g_src = r.rank(j);
    const std::size_t g_dst = r.rank(j + 1);
    const std::size_t ad = a->dim();
    Matrix delta(n.field(), g_dst * nd, g_src * nd);
    Matrix d = r.differential(j + 1).matrix;
    for (std::size_t t = 0; t < g_dst; ++t) {
        Matrix unit_t(n.field(), g_dst * ad, 1);
        unit_t.set_block(t * ad, 0, a->unit());
        Matrix v = d * unit_t;  // d(1_t) in F_j
        for (std::size_t s = 0; s < g_src; ++s) {
            delta.set_block(t * nd, s * nd, n.act(v.block(s * ad, 0, ad, 1)));
        }
    }
    return delta;
}

ExtSpace ext_space(const Module& m, const Module& n, std::size_t i) {
    require_same_algebra(m, n, "ext_space");
    Resolution r = resolution(m, i + 1);
    const Field field = m.field();
    const std::size_t nd = n.dim();
    Matrix cocycles = kernel_basis(ext_coboundary(r, n, i));
    Matrix boundaries = i == 0 ? Matrix(field, r.rank(i) * nd, 0) : image_basis(ext_coboundary(r, n, i - 1));

    ExtSpace out;
    out.degree = i;
    Echelon e = rref(hstack(boundaries, cocycles));
    for (auto c : e.pivots) {
        if (c < boundaries.cols()) continue;
        Matrix y = cocycles.column(c - boundaries.cols());
        Matrix images(field, nd, r.rank(i));
        for (std::size_t s = 0; s < r.rank(i); ++s) images.set_block(0, s, y.block(s * nd, 0, nd, 1));
        out.representatives.push_back(hom_from_free(r.free(i), r.rank(i), n, images));
    }
    out.dim = out.representatives.size();
    return out;
}

std::vector<std::size_t> ext_dimensions(const Module& m, const Module& n, std::size_t up_to) {
    require_same_algebra(m, n, "ext_dimensions");
    Resolution r = resolution(m, up_to + 1);
    std::vector<std::size_t> out;
    std::size_t previous_rank = 0;
    for (std::size_t i = 0; i <= up_to; ++i) {
        Matrix delta = ext_coboundary(r, n, i);
        std::size_t rk = rank(delta);
        out.push_back(delta.cols() - rk - previous_rank);
        previous_rank = rk;
    }
    return out;
}

}  // namespace ghal
