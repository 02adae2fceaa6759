#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghal/corpus.hpp"
#include "ghal/gorenstein.hpp"

using namespace ghal;

namespace {

const Field F2 = Field::prime(2);

Module named(const std::string& name) {
    for (const auto& nm : corpus::modules())
        if (nm.name == name) return nm.module;
    throw std::runtime_error("unknown corpus module " + name);
}

GorensteinContext context_of(const std::string& algebra) {
    for (const auto& na : corpus::algebras())
        if (na.name == algebra) return GorensteinContext(na.algebra, na.gdim);
    throw std::runtime_error("unknown corpus algebra " + algebra);
}

bool stably_iso(const GorensteinContext& ctx, const Module& a, const Module& b) {
    return stable_iso_check(ctx, a, b).verdict == StableIsoVerdict::Isomorphic;
}

/// dim of the span of {beta o alpha} over alpha in Hom(M, F), beta in Hom(F, N), F the cover of N.
std::size_t product_span_dim(const Module& m, const Module& n) {
    Module f = free_cover(n).cover;
    Matrix span(m.field(), m.dim() * n.dim(), 0);
    for (const auto& alpha : hom_basis(m, f))
        for (const auto& beta : hom_basis(f, n)) span = hstack(span, (beta.matrix * alpha.matrix).vec());
    return rank(span);
}

}  // namespace

TEST_CASE("GP test examples") {
    GorensteinContext a2 = context_of("A2");
    for (const auto& nm : corpus::modules())
        if (nm.algebra == "A2") CHECK(is_gorenstein_projective(a2, nm.module).gorenstein_projective);

    GorensteinContext t2 = context_of("T2");
    auto cert = is_gorenstein_projective(t2, named("T2/S2"));
    CHECK_FALSE(cert.gorenstein_projective);
    REQUIRE(cert.ext_dims.size() == 1);

    // oracle: 0 -> P1 -> P2 -> S2 -> 0 and the induced Hom(-, A) sequence
    Module p1 = named("T2/S1"), p2 = named("T2/P2"), reg = t2.regular();
    auto incl = hom_basis(p1, p2);
    REQUIRE(incl.size() == 1);
    CHECK(rank(incl[0].matrix) == 1);
    Matrix restricted(F2, p1.dim() * reg.dim(), 0);
    for (const auto& h : hom_basis(p2, reg)) restricted = hstack(restricted, compose(h, incl[0]).matrix.vec());
    std::size_t ext1 = hom_basis(p1, reg).size() - rank(restricted);
    CHECK(ext1 > 0);
    CHECK(cert.ext_dims[0] == ext1);

    for (const auto& na : corpus::algebras()) {
        GorensteinContext ctx(na.algebra, na.gdim);
        for (std::size_t g = 0; g < 3; ++g) CHECK(is_gorenstein_projective(ctx, free_module(na.algebra, g)).gorenstein_projective);
    }
    CHECK(is_gorenstein_projective(t2, named("T2/S1")).gorenstein_projective);
    CHECK(is_gorenstein_projective(t2, named("T2/P2")).gorenstein_projective);
}

TEST_CASE("declared dimensions are consistent on the corpus") {
    for (const auto& na : corpus::algebras()) {
        GorensteinContext ctx(na.algebra, na.gdim);
        std::vector<Module> samples;
        for (const auto& nm : corpus::modules())
            if (nm.algebra == na.name) samples.push_back(nm.module);
        CHECK_FALSE(check_declared_dimension(ctx, samples).has_value());
    }
    GorensteinContext wrong(corpus::upper_triangular(), 0);
    // with d = 0 every module counts as GP, so the check cannot see the error
    CHECK_FALSE(check_declared_dimension(wrong, {named("T2/S2")}).has_value());
}

TEST_CASE("cosyzygy examples") {
    GorensteinContext ctx = context_of("A2");
    Module k = named("A2/k");
    auto c = cosyzygy(ctx, k);
    CHECK(c.free.dim() == 2);
    CHECK(c.embedding.matrix == Matrix::from_rows(F2, {{0}, {1}}));  // socle embedding
    CHECK(c.cokernel.dim() == 1);
    CHECK(c.cokernel == k);

    auto cf = cosyzygy(ctx, free_module(ctx.algebra, 1));
    CHECK(cf.free.dim() == 2);
    CHECK(cf.cokernel.is_zero());

    auto cz = cosyzygy(ctx, zero_module(ctx.algebra));
    CHECK(cz.free.is_zero());
    CHECK(cz.cokernel.is_zero());

    CHECK_THROWS_AS(cosyzygy(context_of("T2"), named("T2/S2")), PreconditionError);
}

TEST_CASE("cosyzygies are exact with GP cokernel") {
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        if (!is_gorenstein_projective(ctx, nm.module).gorenstein_projective) continue;
        auto c = cosyzygy(ctx, nm.module);
        CHECK(c.embedding.is_valid());
        CHECK(c.projection.is_valid());
        CHECK(rank(c.embedding.matrix) == nm.module.dim());
        CHECK((c.projection.matrix * c.embedding.matrix).is_zero());
        CHECK(c.cokernel.dim() + nm.module.dim() == c.free.dim());
        CHECK(is_gorenstein_projective(ctx, c.cokernel).gorenstein_projective);
    }
}

TEST_CASE("complete resolution of k over F_2[x]/(x^2)") {
    GorensteinContext ctx = context_of("A2");
    auto t = complete_resolution(ctx, named("A2/k"), 3);
    Matrix x = free_module(ctx.algebra, 1).action(1);
    for (int n = -3; n <= 3; ++n) CHECK(t.component(n).dim() == 2);
    for (int n = -3; n < 3; ++n) CHECK(t.differential(n).matrix == x);
    CHECK(t.cycle(0) == named("A2/k"));
    CHECK_FALSE(validate_window(ctx, t).has_value());
    CHECK_THROWS_AS(complete_resolution(context_of("T2"), named("T2/S2"), 0), PreconditionError);
}

TEST_CASE("complete resolution of a free module is the zero window") {
    for (const auto& na : corpus::algebras()) {
        GorensteinContext ctx(na.algebra, na.gdim);
        auto t = complete_resolution(ctx, free_module(na.algebra, 2), na.gdim + 1);
        CHECK(t.is_zero());
    }
}

TEST_CASE("complete resolution of k over F_2[x,y]/(x^2,y^2)") {
    GorensteinContext ctx = context_of("K4");
    auto t = complete_resolution(ctx, named("K4/k"), 2);
    CHECK_FALSE(validate_window(ctx, t).has_value());
    // rank-nullity chain: dim Z^{n+1} = dim T^n - dim Z^n, starting from Z^0 = k
    CHECK(t.cycle(0).dim() == 1);
    CHECK(t.cycle(-1).dim() == 3);
    CHECK(t.cycle(-2).dim() == 5);
    CHECK(t.component(-1).dim() == 4);
    CHECK(t.component(-2).dim() == 8);
    for (int n = -2; n <= 2; ++n) CHECK(t.component(n).dim() == t.cycle(n).dim() + t.cycle(n + 1).dim());
    CHECK(t.component(0).dim() == 4);
}

TEST_CASE("complete resolutions validate and agree with the resolution on the left") {
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        std::size_t w = ctx.d + 2;
        auto t = complete_resolution(ctx, nm.module, w);
        CHECK_MESSAGE(!validate_window(ctx, t).has_value(), nm.name);
        if (t.is_zero()) continue;
        Resolution r = resolution(nm.module, w + 1);
        for (int n = -int(w); n <= -int(ctx.d) - 1; ++n) {
            CHECK(t.component(n) == r.free(std::size_t(-n - 1)));
        }
        CHECK(t.cycle(-int(ctx.d)) == syzygy(nm.module, ctx.d));
    }
}

TEST_CASE("GP approximation examples") {
    GorensteinContext a2 = context_of("A2");
    Module k = named("A2/k");
    auto ak = gp_approximation(a2, k);
    CHECK(ak.gp == k);
    CHECK(ak.kernel.is_zero());
    CHECK(ak.projection.matrix == Matrix::identity(F2, 1));

    GorensteinContext t2 = context_of("T2");
    auto as = gp_approximation(t2, named("T2/S2"));
    CHECK(is_projective(as.gp).projective);
    CHECK(as.kernel_pd <= 1);
    CHECK(stable_hom(as.gp, as.gp).dim() == 0);
}

TEST_CASE("GP approximations are exact with valid certificates") {
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        auto a = gp_approximation(ctx, nm.module);
        CHECK(a.projection.is_valid());
        CHECK(a.kernel_inclusion.is_valid());
        CHECK(rank(a.projection.matrix) == nm.module.dim());
        CHECK(rank(a.kernel_inclusion.matrix) == a.kernel.dim());
        CHECK((a.projection.matrix * a.kernel_inclusion.matrix).is_zero());
        CHECK(a.kernel.dim() + nm.module.dim() == a.gp.dim());
        CHECK(is_gorenstein_projective(ctx, a.gp).gorenstein_projective);
        CHECK(proj_dim_upto(a.kernel, ctx.d).has_value());
        if (nm.algebra == "T2") CHECK(is_projective(a.gp).projective);
    }
}

TEST_CASE("fpd hull examples and invariants") {
    GorensteinContext a2 = context_of("A2");
    auto hf = fpd_hull(a2, free_module(a2.algebra, 1));
    CHECK(hf.hull.dim() == 2);
    CHECK(hf.cokernel.is_zero());

    auto hk = fpd_hull(a2, named("A2/k"));
    CHECK(is_projective(hk.hull).projective);
    CHECK(hk.hull.dim() == 2);
    CHECK(hk.cokernel == named("A2/k"));

    auto h0 = fpd_hull(a2, zero_module(a2.algebra));
    CHECK(h0.hull.is_zero());
    CHECK(h0.cokernel.is_zero());

    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        auto h = fpd_hull(ctx, nm.module);
        CHECK(h.inclusion.is_valid());
        CHECK(h.projection.is_valid());
        CHECK(rank(h.inclusion.matrix) == nm.module.dim());
        CHECK(rank(h.projection.matrix) == h.cokernel.dim());
        CHECK((h.projection.matrix * h.inclusion.matrix).is_zero());
        CHECK(h.cokernel.dim() + nm.module.dim() == h.hull.dim());
        CHECK(proj_dim_upto(h.hull, ctx.d).has_value());
        CHECK(is_gorenstein_projective(ctx, h.cokernel).gorenstein_projective);
    }
}

TEST_CASE("stable hom examples") {
    auto a = corpus::dual_numbers();
    Module k = named("A2/k"), fa = free_module(a, 1);
    auto skk = stable_hom(k, k);
    CHECK(skk.dim() == 1);
    // oracle: every k -> A lands in the socle and every A -> k kills it
    for (const auto& alpha : hom_basis(k, fa))
        for (const auto& beta : hom_basis(fa, k)) CHECK((beta.matrix * alpha.matrix).is_zero());
    CHECK(stable_hom(fa, k).dim() == 0);
    CHECK(stable_hom(free_module(a, 2), fa).dim() == 0);
    CHECK(stable_hom(zero_module(a), k).dim() == 0);
    CHECK(stable_hom(k, zero_module(a)).dim() == 0);
}

TEST_CASE("factoring subspace matches the span of products") {
    for (const auto& m : corpus::modules())
        for (const auto& n : corpus::modules()) {
            if (m.algebra != n.algebra) continue;
            auto s = stable_hom(m.module, n.module);
            CHECK(s.factoring_dim() == product_span_dim(m.module, n.module));
            CHECK(s.factoring_dim() + s.dim() == s.full_dim());
        }
}

TEST_CASE("stable hom is invariant under adding free summands") {
    for (const auto& m : corpus::modules())
        for (const auto& n : corpus::modules()) {
            if (m.algebra != n.algebra) continue;
            Module mf = direct_sum(m.module, free_module(m.module.algebra(), 1));
            CHECK(stable_hom(mf, n.module).dim() == stable_hom(m.module, n.module).dim());
            Module nf = direct_sum(n.module, free_module(n.module.algebra(), 1));
            CHECK(stable_hom(m.module, nf).dim() == stable_hom(m.module, n.module).dim());
        }
}

TEST_CASE("stable iso examples") {
    GorensteinContext a2 = context_of("A2");
    Module k = named("A2/k");
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        if (!is_gorenstein_projective(ctx, nm.module).gorenstein_projective) continue;
        auto r = stable_iso_check(ctx, nm.module, nm.module);
        CHECK(r.verdict == StableIsoVerdict::Isomorphic);
    }
    auto r2 = stable_iso_check(a2, k, syzygy(k, 2));
    CHECK(r2.verdict == StableIsoVerdict::Isomorphic);
    REQUIRE(r2.forward.has_value());
    CHECK(r2.forward->is_valid());
    CHECK(r2.backward->is_valid());

    auto rf = stable_iso_check(a2, k, free_module(a2.algebra, 1));
    CHECK(rf.verdict == StableIsoVerdict::NotIsomorphic);

    // k and A/x^2 over F_3[x]/(x^3): equal stable dimensions, not isomorphic; decided by enumeration
    GorensteinContext a3 = context_of("A3");
    auto r3 = stable_iso_check(a3, named("A3/k"), named("A3/A_x2"));
    CHECK(r3.verdict == StableIsoVerdict::NotIsomorphic);
    CHECK(r3.candidates == 3);
    CHECK(stably_iso(a3, named("A3/k"), syzygy(named("A3/k"), 2)));
    CHECK(stably_iso(a3, named("A3/A_x2"), syzygy(named("A3/k"), 1)));

    auto cap = stable_iso_check(a3, named("A3/k"), named("A3/A_x2"), 1);
    CHECK(cap.verdict == StableIsoVerdict::Inconclusive);

    CHECK_THROWS_AS(stable_iso_check(context_of("T2"), named("T2/S2"), named("T2/S2")), PreconditionError);
}

TEST_CASE("stable iso certificates are inverse modulo projectives") {
    GorensteinContext ctx = context_of("K4");
    Module m = named("K4/m");
    Module omega = free_cover(named("K4/k")).syzygy;
    auto r = stable_iso_check(ctx, m, omega);
    REQUIRE(r.verdict == StableIsoVerdict::Isomorphic);
    auto smm = stable_hom(m, m);
    auto snn = stable_hom(omega, omega);
    Matrix gf = r.backward->matrix * r.forward->matrix;
    Matrix fg = r.forward->matrix * r.backward->matrix;
    CHECK(smm.factors_through_projective(gf - Matrix::identity(m.field(), m.dim())));
    CHECK(snn.factors_through_projective(fg - Matrix::identity(m.field(), omega.dim())));
}

TEST_CASE("realize_module examples") {
    GorensteinContext a2 = context_of("A2");
    CHECK(stably_iso(a2, realize_module(a2, named("A2/k")).module, named("A2/k")));
    CHECK(stable_hom(realize_module(a2, named("A2/A")).module, named("A2/k")).dim() == 0);
    CHECK(realize_module(a2, named("A2/A")).module.is_zero());
    GorensteinContext t2 = context_of("T2");
    for (const auto& nm : corpus::modules()) {
        if (nm.algebra != "T2") continue;
        Module z = realize_module(t2, nm.module).module;
        CHECK(stable_hom(z, z).dim() == 0);
    }
}

TEST_CASE("realization agrees with approximation") {
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        Module z = realize_module(ctx, nm.module).module;
        CHECK(is_gorenstein_projective(ctx, z).gorenstein_projective);
        CHECK_MESSAGE(stably_iso(ctx, z, gp_approximation(ctx, nm.module).gp), nm.name);
    }
}

TEST_CASE("syzygy and cosyzygy are mutually inverse stably") {
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        if (!is_gorenstein_projective(ctx, nm.module).gorenstein_projective) continue;
        Module up = cosyzygy(ctx, nm.module).cokernel;
        CHECK_MESSAGE(stably_iso(ctx, free_cover(up).syzygy, nm.module), nm.name);
        Module down = free_cover(nm.module).syzygy;
        CHECK_MESSAGE(stably_iso(ctx, cosyzygy(ctx, down).cokernel, nm.module), nm.name);
    }
}

TEST_CASE("frees are self-orthogonal") {
    for (const auto& na : corpus::algebras())
        for (std::size_t g = 1; g < 3; ++g)
            for (std::size_t h = 1; h < 3; ++h)
                CHECK(ext_space(free_module(na.algebra, g), free_module(na.algebra, h), 1).dim == 0);
}

TEST_CASE("splice offset does not change the stable class") {
    for (const auto& nm : corpus::modules()) {
        GorensteinContext ctx = context_of(nm.algebra);
        Module z0 = complete_resolution(ctx, nm.module, ctx.d + 2).cycle(0);
        Module z1 = complete_resolution(ctx, nm.module, ctx.d + 2, 1).cycle(0);
        CHECK_MESSAGE(stably_iso(ctx, z0, z1), nm.name);
    }
}
