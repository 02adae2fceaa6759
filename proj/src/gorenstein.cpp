#include "ghal/gorenstein.hpp"

#include <map>
#include <string>

namespace ghal {

namespace {

void require_context_algebra(const GorensteinContext& ctx, const Module& m, const char* where) {
    if (!(m.algebra() == ctx.algebra || *m.algebra() == *ctx.algebra)) {
        throw InvalidArgument(std::string(where) + ": module is not over the context algebra");
    }
}

std::string declared_d(const GorensteinContext& ctx) { return "declared Gorenstein dimension d = " + std::to_string(ctx.d); }

Cosyzygy trivial_cosyzygy(const Module& g) {
    Module zero = zero_module(g.algebra());
    return {g, zero, zero_hom(g, zero), zero, zero_hom(zero, zero)};
}

/// The cosyzygy step without the GP precondition check.
Cosyzygy cosyzygy_step(const Module& g) {
    if (g.is_zero()) return trivial_cosyzygy(g);
    auto proj = is_projective(g);
    if (proj.projective) {
        ModuleHom emb = *proj.section;
        QuotientModule q = cokernel(emb);
        return {g, emb.target, emb, q.module, q.projection};
    }
    DualModule dual = dual_module(g);
    auto gens = cover_generators(dual.module);
    Module free = free_module(g.algebra(), gens.size());
    Matrix iota(g.field(), free.dim(), g.dim());
    const std::size_t n = g.algebra()->dim();
    for (std::size_t s = 0; s < gens.size(); ++s) iota.set_block(s * n, 0, dual.basis[gens[s]].matrix);
    if (rank(iota) != g.dim()) {
        throw InconsistencyError("double-dual map is not injective; the module is not Gorenstein projective");
    }
    ModuleHom emb{g, free, iota};
    QuotientModule q = cokernel(emb);
    return {g, free, emb, q.module, q.projection};
}

CompleteResolutionWindow zero_window(const Module& m, int lo, int hi, int splice) {
    CompleteResolutionWindow t{m};
    t.lo = lo;
    t.hi = hi;
    t.splice_degree = splice;
    Module zero = zero_module(m.algebra());
    for (int k = lo; k <= hi; ++k) {
        t.components.push_back(zero);
        t.inclusions.push_back(zero_hom(zero, zero));
        t.projections.push_back(zero_hom(zero, zero));
    }
    for (int k = lo; k <= hi + 1; ++k) t.cycles.push_back(zero);
    return t;
}

bool is_free(const Module& m) {
    const std::size_t n = m.algebra()->dim();
    if (n == 0) return m.is_zero();
    if (m.dim() % n != 0) return false;
    return m.actions() == free_module(m.algebra(), m.dim() / n).actions();
}

}  // namespace

GPCertificate is_gorenstein_projective(const GorensteinContext& ctx, const Module& m) {
    require_context_algebra(ctx, m, "is_gorenstein_projective");
    GPCertificate cert;
    cert.gorenstein_projective = true;
    if (ctx.d == 0) return cert;
    auto dims = ext_dimensions(m, ctx.regular(), ctx.d);
    for (std::size_t i = 1; i <= ctx.d; ++i) {
        cert.ext_dims.push_back(dims[i]);
        if (dims[i] != 0) cert.gorenstein_projective = false;
    }
    return cert;
}

std::optional<std::size_t> check_declared_dimension(const GorensteinContext& ctx, const std::vector<Module>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!is_gorenstein_projective(ctx, syzygy(samples[i], ctx.d)).gorenstein_projective) return i;
    }
    return std::nullopt;
}

Pushout pushout(const ModuleHom& f, const ModuleHom& g) {
    if (f.source.dim() != g.source.dim()) throw InvalidArgument("pushout: maps have different sources");
    Module sum = direct_sum(f.target, g.target);
    Matrix relations = vstack(f.matrix, -g.matrix);
    QuotientModule q = quotient_module(sum, relations);
    const Field field = sum.field();
    const std::size_t b = f.target.dim(), c = g.target.dim();
    Matrix into_b = vstack(Matrix::identity(field, b), Matrix(field, c, b));
    Matrix into_c = vstack(Matrix(field, b, c), Matrix::identity(field, c));
    return {q.module,
            ModuleHom{f.target, q.module, q.projection.matrix * into_b},
            ModuleHom{g.target, q.module, q.projection.matrix * into_c},
            q.projection,
            q.section};
}

Cosyzygy cosyzygy(const GorensteinContext& ctx, const Module& g) {
    require_context_algebra(ctx, g, "cosyzygy");
    if (!is_gorenstein_projective(ctx, g).gorenstein_projective) {
        throw PreconditionError("cosyzygy requires a Gorenstein projective module");
    }
    return cosyzygy_step(g);
}

Module cosyzygy_power(const GorensteinContext& ctx, const Module& g, std::size_t j) {
    if (j == 0) return g;
    Module cur = cosyzygy(ctx, g).cokernel;
    for (std::size_t i = 1; i < j; ++i) cur = cosyzygy_step(cur).cokernel;
    return cur;
}

ModuleHom CompleteResolutionWindow::differential(int n) const {
    if (n < lo || n >= hi) throw InvalidArgument("window differential out of range");
    const std::size_t i = std::size_t(n - lo);
    return compose(inclusions[i + 1], projections[i]);
}

bool CompleteResolutionWindow::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

CompleteResolutionWindow complete_resolution(const GorensteinContext& ctx, const Module& m, std::size_t w,
                                             std::size_t splice_offset) {
    require_context_algebra(ctx, m, "complete_resolution");
    if (w < ctx.d) throw PreconditionError("window radius must be at least the Gorenstein dimension d");
    const int lo = -int(w), hi = int(w);
    const int s = -int(ctx.d + splice_offset);

    Module g = syzygy(m, ctx.d + splice_offset);
    if (!is_gorenstein_projective(ctx, g).gorenstein_projective) {
        throw CertificateError("syzygy at the splice point is not Gorenstein projective; " + declared_d(ctx) +
                               " is too small");
    }
    if (is_projective(g).projective) return zero_window(m, lo, hi, s);

    struct Piece {
        Module z, t;
        ModuleHom iota, pi;
        Module next;
    };
    std::map<int, Piece> pieces;
    Module cur = g;
    for (int n = s - 1; n >= lo; --n) {
        FreeCover fc = free_cover(cur);
        pieces.emplace(n, Piece{fc.syzygy, fc.cover, fc.inclusion, fc.projection, cur});
        cur = fc.syzygy;
    }
    cur = g;
    for (int n = s; n <= hi; ++n) {
        Cosyzygy cs = cosyzygy_step(cur);
        if (n >= lo) pieces.emplace(n, Piece{cur, cs.free, cs.embedding, cs.projection, cs.cokernel});
        cur = cs.cokernel;
    }

    CompleteResolutionWindow t{m};
    t.lo = lo;
    t.hi = hi;
    t.splice_degree = s;
    for (int n = lo; n <= hi; ++n) {
        const Piece& p = pieces.at(n);
        t.components.push_back(p.t);
        t.cycles.push_back(p.z);
        t.inclusions.push_back(p.iota);
        t.projections.push_back(p.pi);
    }
    t.cycles.push_back(pieces.at(hi).next);
    return t;
}

std::optional<std::string> validate_window(const GorensteinContext& ctx, const CompleteResolutionWindow& t) {
    for (int n = t.lo; n <= t.hi; ++n) {
        const std::size_t i = std::size_t(n - t.lo);
        const std::string at = " at degree " + std::to_string(n);
        const ModuleHom& iota = t.inclusions[i];
        const ModuleHom& pi = t.projections[i];
        if (!iota.is_valid() || !pi.is_valid()) return "invalid homomorphism" + at;
        if (rank(iota.matrix) != t.cycles[i].dim()) return "cycle inclusion not injective" + at;
        if (rank(pi.matrix) != t.cycles[i + 1].dim()) return "projection not surjective" + at;
        if (!(pi.matrix * iota.matrix).is_zero()) return "piece not a complex" + at;
        if (t.cycles[i].dim() + t.cycles[i + 1].dim() != t.components[i].dim()) return "piece not exact" + at;
        if (!is_free(t.components[i])) return "component not free" + at;
        if (!is_gorenstein_projective(ctx, t.cycles[i]).gorenstein_projective) return "cycle not GP" + at;
    }
    return std::nullopt;
}

GPApproximation gp_approximation(const GorensteinContext& ctx, const Module& m) {
    require_context_algebra(ctx, m, "gp_approximation");
    if (is_gorenstein_projective(ctx, m).gorenstein_projective) {
        Module zero = zero_module(m.algebra());
        return {m, m, identity_hom(m), zero, zero_hom(zero, m), 0};
    }
    Resolution r = resolution(m, ctx.d - 1);
    Module g = r.steps[ctx.d - 1].syzygy;
    if (!is_gorenstein_projective(ctx, g).gorenstein_projective) {
        throw CertificateError("d-th syzygy is not Gorenstein projective; " + declared_d(ctx) + " is too small");
    }
    // p: G_j -> Omega^j M, lifted one step up the resolution at a time
    ModuleHom p = identity_hom(g);
    for (std::size_t j = ctx.d; j-- > 0;) {
        const FreeCover& fc = r.steps[j];
        Cosyzygy cs = cosyzygy_step(p.source);
        Pushout po = pushout(compose(fc.inclusion, p), cs.embedding);
        Matrix onto = hstack(fc.projection.matrix, Matrix(m.field(), fc.module.dim(), cs.free.dim()));
        p = ModuleHom{po.module, fc.module, onto * po.section};
    }
    Submodule k = kernel(p);
    GPApproximation out{m, p.source, p, k.module, k.inclusion, 0};
    if (rank(p.matrix) != m.dim()) throw InconsistencyError("approximation map is not surjective");
    if (!is_gorenstein_projective(ctx, out.gp).gorenstein_projective) {
        throw CertificateError("approximating module failed the GP test; " + declared_d(ctx));
    }
    auto pd = proj_dim_upto(out.kernel, ctx.d);
    if (!pd) throw CertificateError("kernel of the approximation has pd exceeding the " + declared_d(ctx));
    out.kernel_pd = *pd;
    return out;
}

FpdHull fpd_hull(const GorensteinContext& ctx, const Module& m) {
    require_context_algebra(ctx, m, "fpd_hull");
    if (auto pd = proj_dim_upto(m, ctx.d)) {
        Module zero = zero_module(m.algebra());
        return {m, m, identity_hom(m), zero, zero_hom(m, zero), *pd};
    }
    GPApproximation approx = gp_approximation(ctx, m);
    Cosyzygy cs = cosyzygy_step(approx.gp);
    Pushout po = pushout(approx.projection, cs.embedding);
    QuotientModule q = cokernel(po.from_first);
    FpdHull out{m, po.module, po.from_first, q.module, q.projection, 0};
    if (rank(out.inclusion.matrix) != m.dim()) throw InconsistencyError("hull map is not injective");
    auto pd = proj_dim_upto(out.hull, ctx.d);
    if (!pd) throw CertificateError("hull has pd exceeding the " + declared_d(ctx));
    out.hull_pd = *pd;
    if (!is_gorenstein_projective(ctx, out.cokernel).gorenstein_projective) {
        throw CertificateError("hull cokernel failed the GP test; " + declared_d(ctx));
    }
    return out;
}

ModuleHom StableHomSpace::representative(std::size_t i) const {
    return {source, target, Matrix::unvec(representatives.column(i), target.dim(), source.dim())};
}

Matrix StableHomSpace::stable_coordinates(const Matrix& hom_matrix) const {
    auto res = solve_right(hstack(factoring, representatives), hom_matrix.vec());
    if (!res.solvable) throw InvalidArgument("matrix is not a homomorphism between these modules");
    return res.solution.block(factoring.cols(), 0, representatives.cols(), 1);
}

bool StableHomSpace::factors_through_projective(const Matrix& hom_matrix) const {
    return stable_coordinates(hom_matrix).is_zero();
}

StableHomSpace stable_hom(const Module& m, const Module& n) {
    require_same_algebra(m, n, "stable_hom");
    const Field field = m.field();
    const std::size_t len = m.dim() * n.dim();
    Matrix full = hom_space(m, n);
    FreeCover cover = free_cover(n);
    Matrix through(field, len, 0);
    for (const auto& alpha : hom_basis(m, cover.cover)) {
        through = hstack(through, (cover.projection.matrix * alpha.matrix).vec());
    }
    Matrix factoring = through.cols() == 0 ? through : image_basis(through);
    Echelon e = rref(hstack(factoring, full));
    std::vector<std::size_t> picked;
    for (auto c : e.pivots)
        if (c >= factoring.cols()) picked.push_back(c - factoring.cols());
    return {m, n, full, factoring, full.select_columns(picked)};
}

const char* to_string(StableIsoVerdict v) {
    switch (v) {
        case StableIsoVerdict::Isomorphic: return "isomorphic";
        case StableIsoVerdict::NotIsomorphic: return "not_isomorphic";
        case StableIsoVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

StableIsoResult stable_iso_check(const GorensteinContext& ctx, const Module& m, const Module& n, std::size_t cap) {
    require_context_algebra(ctx, m, "stable_iso_check");
    require_context_algebra(ctx, n, "stable_iso_check");
    if (!is_gorenstein_projective(ctx, m).gorenstein_projective ||
        !is_gorenstein_projective(ctx, n).gorenstein_projective) {
        throw PreconditionError("stable_iso_check requires Gorenstein projective modules");
    }
    StableIsoResult out;
    StableHomSpace smn = stable_hom(m, n), snm = stable_hom(n, m), smm = stable_hom(m, m), snn = stable_hom(n, n);
    const std::size_t e = smm.dim();
    if (snn.dim() != e || smn.dim() != e || snm.dim() != e) {
        out.verdict = StableIsoVerdict::NotIsomorphic;
        out.reason = "stable hom dimensions differ: End(M) " + std::to_string(e) + ", End(N) " +
                     std::to_string(snn.dim()) + ", Hom(M,N) " + std::to_string(smn.dim()) + ", Hom(N,M) " +
                     std::to_string(snm.dim());
        return out;
    }
    if (e == 0) {
        out.verdict = StableIsoVerdict::Isomorphic;
        out.forward = zero_hom(m, n);
        out.backward = zero_hom(n, m);
        out.reason = "both modules are stably zero";
        return out;
    }

    const Field field = m.field();
    Matrix target = vstack(smm.stable_coordinates(Matrix::identity(field, m.dim())),
                           snn.stable_coordinates(Matrix::identity(field, n.dim())));
    std::vector<Matrix> fs, gs;
    for (std::size_t i = 0; i < e; ++i) {
        fs.push_back(smn.representative(i).matrix);
        gs.push_back(snm.representative(i).matrix);
    }
    // Given g, both g f = id and f g = id are linear in f.
    auto try_g = [&](const Matrix& g) -> bool {
        ++out.candidates;
        Matrix system(field, 2 * e, e);
        for (std::size_t i = 0; i < e; ++i) {
            system.set_block(0, i, smm.stable_coordinates(g * fs[i]));
            system.set_block(e, i, snn.stable_coordinates(fs[i] * g));
        }
        auto res = solve_right(system, target);
        if (!res.solvable) return false;
        Matrix f(field, n.dim(), m.dim());
        for (std::size_t i = 0; i < e; ++i)
            if (!res.solution.entry_is_zero(i, 0)) f = f + fs[i].scaled(res.solution.at(i, 0));
        out.verdict = StableIsoVerdict::Isomorphic;
        out.forward = ModuleHom{m, n, f};
        out.backward = ModuleHom{n, m, g};
        out.reason = "mutually inverse stable maps found";
        return true;
    };

    for (const auto& g : gs)
        if (try_g(g)) return out;

    if (field.is_prime()) {
        const std::uint64_t p = field.characteristic();
        std::uint64_t total = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < e; ++i) {
            if (total > cap) { overflow = true; break; }
            total *= p;
        }
        std::uint64_t code = 1;
        for (; !overflow && code < total && out.candidates < cap; ++code) {
            Matrix g(field, m.dim(), n.dim());
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < e; ++i, rest /= p)
                if (rest % p) g = g + gs[i].scaled(Rational(static_cast<long long>(rest % p)));
            if (try_g(g)) return out;
        }
        if (!overflow && code == total) {
            out.verdict = StableIsoVerdict::NotIsomorphic;
            out.reason = "exhaustive search over all stable maps N -> M found no inverse pair";
            return out;
        }
    }
    out.verdict = StableIsoVerdict::Inconclusive;
    out.reason = "candidate cap reached without finding an inverse pair";
    return out;
}

StableObject realize_module(const GorensteinContext& ctx, const Module& m) {
    return {complete_resolution(ctx, m, ctx.d).cycle(0)};
}

}  // namespace ghal
