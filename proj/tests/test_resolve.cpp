#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghal/corpus.hpp"
#include "ghal/resolve.hpp"

using namespace ghal;

namespace {

const Field F2 = Field::prime(2);

Module named(const std::string& name) {
    for (const auto& nm : corpus::modules())
        if (nm.name == name) return nm.module;
    throw std::runtime_error("unknown corpus module " + name);
}

}  // namespace

TEST_CASE("free_cover examples") {
    auto a = corpus::dual_numbers();
    auto c1 = free_cover(free_module(a, 1));
    CHECK(c1.generators.size() == 1);
    CHECK(c1.syzygy.is_zero());

    auto ck = free_cover(corpus::residue_field(a));
    CHECK(ck.cover.dim() == 2);
    CHECK(ck.syzygy.dim() == 1);
    // kernel of the evaluation map [1 0]
    CHECK(ck.inclusion.matrix == kernel_basis(ck.projection.matrix));
    CHECK(ck.inclusion.matrix == Matrix::from_rows(F2, {{0}, {1}}));

    auto c4 = free_cover(corpus::residue_field(corpus::klein_four()));
    CHECK(c4.cover.dim() == 4);
    CHECK(c4.syzygy.dim() == 3);
}

TEST_CASE("free covers are exact on the corpus") {
    for (const auto& nm : corpus::modules()) {
        auto c = free_cover(nm.module);
        CHECK(c.projection.is_valid());
        CHECK(c.inclusion.is_valid());
        CHECK(rank(c.projection.matrix) == nm.module.dim());
        CHECK(rank(c.inclusion.matrix) == c.syzygy.dim());
        CHECK((c.projection.matrix * c.inclusion.matrix).is_zero());
        CHECK(c.syzygy.dim() + nm.module.dim() == c.cover.dim());
    }
}

TEST_CASE("syzygy examples") {
    auto a = corpus::dual_numbers();
    Module k = corpus::residue_field(a);
    CHECK(syzygy(k, 0) == k);
    Module o2 = syzygy(k, 2);
    CHECK(o2.dim() == 1);
    CHECK(hom_basis(o2, k).size() == 1);
    CHECK(o2 == k);
    for (std::size_t j = 1; j < 4; ++j) CHECK(syzygy(free_module(a, 2), j).is_zero());

    Module s2 = named("T2/S2");
    Module o = syzygy(s2, 1);
    CHECK(o.dim() == 2);  // kernel of A -> S2 is P1 + rad P2, not free
    CHECK(is_projective(o).projective);
}

TEST_CASE("resolution examples") {
    auto a = corpus::dual_numbers();
    auto rf = resolution(free_module(a, 1), 3);
    CHECK(rf.free(0).dim() == 2);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(rf.free(i).is_zero());

    auto rk = resolution(corpus::residue_field(a), 3);
    Matrix x = free_module(a, 1).action(1);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(rk.rank(i) == 1);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(rk.differential(i).matrix == x);
    CHECK(is_exact(rk));

    auto rz = resolution(zero_module(a), 2);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(rz.free(i).is_zero());
    CHECK(is_exact(rz));
}

TEST_CASE("resolutions are exact on the corpus") {
    for (const auto& nm : corpus::modules()) {
        auto r = resolution(nm.module, 3);
        CHECK_MESSAGE(is_exact(r), nm.name);
        for (std::size_t i = 1; i <= 3; ++i) CHECK(r.differential(i).is_valid());
    }
}

TEST_CASE("is_projective and proj_dim_upto") {
    auto a = corpus::dual_numbers();
    CHECK(is_projective(free_module(a, 2)).projective);
    auto ck = is_projective(corpus::residue_field(a));
    CHECK_FALSE(ck.projective);
    CHECK_FALSE(ck.section.has_value());
    CHECK(is_projective(zero_module(a)).projective);

    CHECK(proj_dim_upto(free_module(a, 1), 3) == 0);
    CHECK(proj_dim_upto(named("T2/S2"), 3) == 1);
    CHECK_FALSE(proj_dim_upto(corpus::residue_field(a), 5).has_value());

    for (const auto& nm : corpus::modules()) {
        auto cert = is_projective(nm.module);
        if (cert.projective) {
            REQUIRE(cert.section.has_value());
            CHECK(compose(cert.cover.projection, *cert.section).matrix == Matrix::identity(nm.module.field(), nm.module.dim()));
            for (std::size_t b = 0; b < 3; ++b) CHECK(proj_dim_upto(nm.module, b) == 0);
        }
    }
    // T2 is hereditary: every module has pd at most 1
    for (const auto& nm : corpus::modules())
        if (nm.algebra == "T2") CHECK(proj_dim_upto(nm.module, 1).has_value());
}

TEST_CASE("ext_space examples") {
    auto a = corpus::dual_numbers();
    Module k = corpus::residue_field(a);
    Module fa = free_module(a, 1);
    for (std::size_t i = 0; i <= 5; ++i) CHECK(ext_space(k, k, i).dim == 1);
    CHECK(ext_space(k, fa, 1).dim == 0);
    for (const auto& m : corpus::modules())
        for (const auto& n : corpus::modules()) {
            if (m.algebra != n.algebra) continue;
            CHECK(ext_space(m.module, n.module, 0).dim == hom_basis(m.module, n.module).size());
        }
    for (std::size_t i = 1; i < 4; ++i) CHECK(ext_space(free_module(a, 2), k, i).dim == 0);
    // Ext^1(S2, A) over T2 is nonzero
    Module t = free_module(corpus::upper_triangular(), 1);
    CHECK(ext_space(named("T2/S2"), t, 1).dim > 0);
}

TEST_CASE("ext representatives are cocycles") {
    Module k = corpus::residue_field(corpus::klein_four());
    for (std::size_t i = 0; i < 3; ++i) {
        auto e = ext_space(k, k, i);
        auto r = resolution(k, i + 1);
        CHECK(e.dim == i + 1);  // dims of Ext^i(k,k) over k[x,y]/(x^2,y^2) grow as i+1
        for (const auto& rep : e.representatives) {
            CHECK(rep.is_valid());
            CHECK(compose(rep, r.differential(i + 1)).matrix.is_zero());
        }
    }
}

TEST_CASE("dimension shifting") {
    for (const auto& m : corpus::modules()) {
        for (const auto& n : corpus::modules()) {
            if (m.algebra != n.algebra) continue;
            auto cover = free_cover(m.module);
            for (std::size_t i = 1; i < 3; ++i)
                CHECK(ext_space(m.module, n.module, i + 1).dim == ext_space(cover.syzygy, n.module, i).dim);
            // Ext^1(M,N) = coker(Hom(F0,N) -> Hom(Omega M,N))
            Matrix restrict_images(n.module.field(), cover.syzygy.dim() * n.module.dim(), 0);
            for (const auto& h : hom_basis(cover.cover, n.module))
                restrict_images = hstack(restrict_images, compose(h, cover.inclusion).matrix.vec());
            std::size_t coker = hom_basis(cover.syzygy, n.module).size() - rank(restrict_images);
            CHECK(ext_space(m.module, n.module, 1).dim == coker);
        }
    }
}

TEST_CASE("ext_dimensions agrees with ext_space") {
    for (const auto& m : corpus::modules())
        for (const auto& n : corpus::modules()) {
            if (m.algebra != n.algebra) continue;
            auto dims = ext_dimensions(m.module, n.module, 3);
            for (std::size_t i = 0; i <= 3; ++i) CHECK(dims[i] == ext_space(m.module, n.module, i).dim);
        }
}
