#include "ghal/corpus.hpp"

namespace ghal::corpus {

namespace {

using Table = std::vector<std::vector<std::vector<long long>>>;

Table empty_table(std::size_t n) { return Table(n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0))); }

/// k[x]/(x^n) in the monomial basis.
AlgebraPtr truncated_polynomial(Field field, std::size_t n) {
    Table t = empty_table(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) t[i][j][i + j] = 1;
    std::vector<long long> unit(n, 0);
    unit[0] = 1;
    return make_algebra(Algebra::from_table(field, unit, t));
}

Matrix columns(Field f, std::size_t n, const std::vector<std::vector<long long>>& cols) {
    Matrix m(f, n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) m.set(r, c, Rational(cols[c][r]));
    return m;
}

}  // namespace

AlgebraPtr dual_numbers() {
    static const AlgebraPtr a = truncated_polynomial(Field::prime(2), 2);
    return a;
}

AlgebraPtr truncated_cubic() {
    static const AlgebraPtr a = truncated_polynomial(Field::prime(3), 3);
    return a;
}

AlgebraPtr klein_four() {
    static const AlgebraPtr a = [] {
        // basis index = bitmask of the monomial (x = 1, y = 2)
        Table t = empty_table(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if ((i & j) == 0) t[i][j][i | j] = 1;
        return make_algebra(Algebra::from_table(Field::prime(2), {1, 0, 0, 0}, t));
    }();
    return a;
}

AlgebraPtr upper_triangular() {
    static const AlgebraPtr a = [] {
        Table t = empty_table(3);
        t[0][0][0] = 1;  // e11 e11 = e11
        t[0][1][1] = 1;  // e11 e12 = e12
        t[1][2][1] = 1;  // e12 e22 = e12
        t[2][2][2] = 1;  // e22 e22 = e22
        return make_algebra(Algebra::from_table(Field::prime(2), {1, 0, 1}, t));
    }();
    return a;
}

Module residue_field(const AlgebraPtr& a) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Matrix m(a->field(), 1, 1);
        if (i == 0) m.set(0, 0, Rational(1));
        action.push_back(m);
    }
    return Module(a, 1, std::move(action));
}

Module cyclic_quotient(const AlgebraPtr& a, const Matrix& ideal) {
    return quotient_module(free_module(a, 1), ideal).module;
}

Module left_ideal(const AlgebraPtr& a, const Matrix& ideal) {
    return submodule(free_module(a, 1), image_basis(ideal)).module;
}

std::vector<NamedAlgebra> algebras() {
    return {{"A2", dual_numbers(), 0},
            {"A3", truncated_cubic(), 0},
            {"K4", klein_four(), 0},
            {"T2", upper_triangular(), 1}};
}

std::vector<NamedModule> modules() {
    std::vector<NamedModule> out;
    {
        auto a = dual_numbers();
        out.push_back({"A2/k", "A2", residue_field(a)});
        out.push_back({"A2/A", "A2", free_module(a, 1)});
        out.push_back({"A2/A2", "A2", free_module(a, 2)});
        out.push_back({"A2/k+A", "A2", direct_sum(residue_field(a), free_module(a, 1))});
    }
    {
        auto a = truncated_cubic();
        Field f = a->field();
        out.push_back({"A3/k", "A3", residue_field(a)});
        out.push_back({"A3/A_x2", "A3", cyclic_quotient(a, columns(f, 3, {{0, 0, 1}}))});
        out.push_back({"A3/A", "A3", free_module(a, 1)});
    }
    {
        auto a = klein_four();
        Field f = a->field();
        out.push_back({"K4/k", "K4", residue_field(a)});
        out.push_back({"K4/A", "K4", free_module(a, 1)});
        out.push_back({"K4/A_x", "K4", cyclic_quotient(a, columns(f, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}}))});
        out.push_back({"K4/m", "K4", left_ideal(a, columns(f, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}))});
        out.push_back({"K4/A_soc", "K4", cyclic_quotient(a, columns(f, 4, {{0, 0, 0, 1}}))});
    }
    {
        auto a = upper_triangular();
        Field f = a->field();
        out.push_back({"T2/S1", "T2", left_ideal(a, columns(f, 3, {{1, 0, 0}}))});
        out.push_back({"T2/S2", "T2", cyclic_quotient(a, columns(f, 3, {{1, 0, 0}, {0, 1, 0}}))});
        out.push_back({"T2/P2", "T2", left_ideal(a, columns(f, 3, {{0, 1, 0}, {0, 0, 1}}))});
        out.push_back({"T2/A", "T2", free_module(a, 1)});
    }
    return out;
}

std::vector<NamedComplex> complexes() {
    std::vector<NamedComplex> out;
    {
        auto a = dual_numbers();
        Field f = a->field();
        Module k = residue_field(a), r = free_module(a, 1);
        Matrix soc = columns(f, 2, {{0, 1}});
        Matrix x = a->left_mult(1);
        Matrix proj(f, 1, 2);
        proj.set(0, 0, Rational(1));
        ChainComplex closure(a, 0, {k, r, r, k}, {soc, x, proj});
        out.push_back({"A2/disk_A", "A2", disk_complex(r, 0)});
        out.push_back({"A2/disk_k", "A2", disk_complex(k, 0)});
        out.push_back({"A2/closure", "A2", closure});
        out.push_back({"A2/k0", "A2", ChainComplex::concentrated(k, 0)});
        out.push_back({"A2/k0+k1", "A2", ChainComplex(a, 0, {k, k}, {Matrix(f, 1, 1)})});
        out.push_back({"A2/x_window", "A2", ChainComplex(a, 0, {r, r, r}, {x, x})});
        out.push_back({"A2/disk0_A+disk2_A", "A2", direct_sum(disk_complex(r, 0), disk_complex(r, 2))});
        out.push_back({"A2/sigma_closure", "A2", suspension(closure)});
        out.push_back({"A2/x", "A2", ChainComplex(a, 0, {r, r}, {x})});
        out.push_back({"A2/disk1_A2", "A2", disk_complex(free_module(a, 2), 1)});
    }
    {
        auto a = truncated_cubic();
        Field f = a->field();
        Module k = residue_field(a), r = free_module(a, 1);
        Matrix x = a->left_mult(1), x2 = a->left_mult(2);
        Matrix proj(f, 1, 3);
        proj.set(0, 0, Rational(1));
        out.push_back({"A3/disk_A", "A3", disk_complex(r, 0)});
        out.push_back({"A3/closure", "A3", ChainComplex(a, 0, {k, r, r, k}, {columns(f, 3, {{0, 0, 1}}), x, proj})});
        out.push_back({"A3/x_x2_x", "A3", ChainComplex(a, 0, {r, r, r, r}, {x, x2, x})});
        out.push_back({"A3/disk_A_x2", "A3", disk_complex(cyclic_quotient(a, columns(f, 3, {{0, 0, 1}})), 0)});
    }
    {
        auto a = klein_four();
        Field f = a->field();
        Module k = residue_field(a), r = free_module(a, 1);
        Submodule m = submodule(r, columns(f, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
        Matrix proj(f, 1, 4);
        proj.set(0, 0, Rational(1));
        out.push_back({"K4/disk_k", "K4", disk_complex(k, 0)});
        out.push_back({"K4/disk_A", "K4", disk_complex(r, 0)});
        out.push_back({"K4/k0", "K4", ChainComplex::concentrated(k, 0)});
        out.push_back({"K4/m_A_k", "K4", ChainComplex(a, 0, {m.module, r, k}, {m.inclusion.matrix, proj})});
        out.push_back({"K4/A0", "K4", ChainComplex::concentrated(r, 0)});
    }
    {
        auto a = upper_triangular();
        Field f = a->field();
        Module r = free_module(a, 1);
        Submodule p1 = submodule(r, columns(f, 3, {{1, 0, 0}}));
        Submodule p2 = submodule(r, columns(f, 3, {{0, 1, 0}, {0, 0, 1}}));
        QuotientModule s2 = quotient_module(r, columns(f, 3, {{1, 0, 0}, {0, 1, 0}}));
        Matrix p1_to_p2 = columns(f, 2, {{1, 0}});
        Matrix p2_to_s2 = s2.projection.matrix * p2.inclusion.matrix;
        out.push_back({"T2/A0", "T2", ChainComplex::concentrated(r, 0)});
        out.push_back({"T2/disk_S2", "T2", disk_complex(s2.module, 0)});
        out.push_back({"T2/S2_0", "T2", ChainComplex::concentrated(s2.module, 0)});
        out.push_back({"T2/P1_P2_S2", "T2", ChainComplex(a, 0, {p1.module, p2.module, s2.module}, {p1_to_p2, p2_to_s2})});
        out.push_back({"T2/P1_P2", "T2", ChainComplex(a, 0, {p1.module, p2.module}, {p1_to_p2})});
    }
    return out;
}

}  // namespace ghal::corpus
