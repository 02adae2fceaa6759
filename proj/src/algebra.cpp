#include "ghal/algebra.hpp"

#include <sstream>

namespace ghal {

namespace {

/// Dimension of the subalgebra generated by the unit and the basis elements in `gens`.
std::size_t generated_subalgebra_dim(const Algebra& a, const std::vector<std::size_t>& gens) {
    const std::size_t n = a.dim();
    Matrix span = a.unit();
    for (auto g : gens) span = hstack(span, Matrix::identity(a.field(), n).column(g));
    span = image_basis(span);
    for (;;) {
        Matrix grown = span;
        for (auto g : gens) grown = hstack(grown, a.left_mult(g) * span);
        grown = image_basis(grown);
        if (grown.cols() == span.cols()) return span.cols();
        span = grown;
    }
}

Matrix vec_columns(const std::vector<ModuleHom>& homs, Field field, std::size_t rows) {
    Matrix out(field, rows, homs.size());
    for (std::size_t t = 0; t < homs.size(); ++t) out.set_block(0, t, homs[t].matrix.vec());
    return out;
}

}  // namespace

Algebra::Algebra(Field field, Matrix unit, std::vector<Matrix> left_mult)
    : field_(field), dim_(unit.rows()), unit_(std::move(unit)), left_mult_(std::move(left_mult)) {
    if (unit_.cols() != 1) throw InvalidArgument("algebra unit must be a column vector");
    if (left_mult_.size() != dim_) throw InvalidArgument("algebra needs one multiplication matrix per basis element");
    for (const auto& l : left_mult_) {
        if (l.rows() != dim_ || l.cols() != dim_ || !(l.field() == field_)) {
            throw InvalidArgument("algebra multiplication matrix has the wrong shape");
        }
    }
    compute_generators();
}

Algebra Algebra::from_table(Field field, const std::vector<long long>& unit,
                            const std::vector<std::vector<std::vector<long long>>>& table) {
    const std::size_t n = unit.size();
    if (table.size() != n) throw InvalidArgument("multiplication table has the wrong size");
    std::vector<Matrix> left(n, Matrix(field, n, n));
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw InvalidArgument("multiplication table has the wrong size");
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j].size() != n) throw InvalidArgument("multiplication table has the wrong size");
            for (std::size_t k = 0; k < n; ++k) left[i].set(k, j, Rational(table[i][j][k]));
        }
    }
    return Algebra(field, Matrix::column_vector(field, unit), std::move(left));
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
    Matrix out(field_, dim_, 1);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.entry_is_zero(i, 0)) continue;
        out = out + (left_mult_[i] * y).scaled(x.at(i, 0));
    }
    return out;
}

void Algebra::compute_generators() {
    generators_.clear();
    for (std::size_t i = 0; i < dim_; ++i) generators_.push_back(i);
    if (dim_ == 0) return;
    // Only meaningful for valid algebras; an invalid table keeps every index.
    if (generated_subalgebra_dim(*this, generators_) != dim_) return;
    for (std::size_t i = 0; i < dim_; ++i) {
        std::vector<std::size_t> trial;
        for (auto g : generators_)
            if (g != i) trial.push_back(g);
        if (generated_subalgebra_dim(*this, trial) == dim_) generators_ = std::move(trial);
    }
}

std::optional<AlgebraViolation> validate_algebra(const Algebra& a) {
    const std::size_t n = a.dim();
    const Matrix one = Matrix::identity(a.field(), n);
    // unit * e_j = e_j
    Matrix left_unit(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.unit().entry_is_zero(i, 0)) left_unit = left_unit + a.left_mult(i).scaled(a.unit().at(i, 0));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!(left_unit.column(j) == one.column(j))) {
            return AlgebraViolation{AlgebraViolation::Kind::LeftUnit, j, 0, 0,
                                    "unit * e_" + std::to_string(j) + " != e_" + std::to_string(j)};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(a.left_mult(i) * a.unit() == one.column(i))) {
            return AlgebraViolation{AlgebraViolation::Kind::RightUnit, i, 0, 0,
                                    "e_" + std::to_string(i) + " * unit != e_" + std::to_string(i)};
        }
    }
    // (e_i e_j) e_k = e_i (e_j e_k)  <=>  L_{e_i e_j} = L_i L_j
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs(a.field(), n, n);
            Matrix prod = a.product(i, j);
            for (std::size_t t = 0; t < n; ++t)
                if (!prod.entry_is_zero(t, 0)) lhs = lhs + a.left_mult(t).scaled(prod.at(t, 0));
            Matrix rhs = a.left_mult(i) * a.left_mult(j);
            for (std::size_t k = 0; k < n; ++k) {
                if (!(lhs.column(k) == rhs.column(k))) {
                    std::ostringstream os;
                    os << "(e_" << i << " e_" << j << ") e_" << k << " != e_" << i << " (e_" << j << " e_" << k << ")";
                    return AlgebraViolation{AlgebraViolation::Kind::Associativity, i, j, k, os.str()};
                }
            }
        }
    }
    return std::nullopt;
}

AlgebraPtr opposite(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> left(n, Matrix(a.field(), n, n));
    // e_i *op e_j = e_j e_i, so column j of L^op_i is column i of L_j.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) left[i].set_block(0, j, a.product(j, i));
    return make_algebra(Algebra(a.field(), a.unit(), std::move(left)));
}

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim) {
    if (!algebra_) throw InvalidArgument("module without an algebra");
    if (action.size() != algebra_->dim()) throw InvalidArgument("module needs one action matrix per basis element");
    for (const auto& m : action) {
        if (m.rows() != dim || m.cols() != dim || !(m.field() == algebra_->field())) {
            throw InvalidArgument("module action matrix has the wrong shape");
        }
    }
    action_ = std::make_shared<const std::vector<Matrix>>(std::move(action));
}

Matrix Module::act(const Matrix& element) const {
    Matrix out(field(), dim_, dim_);
    for (std::size_t i = 0; i < algebra_->dim(); ++i) {
        if (!element.entry_is_zero(i, 0)) out = out + (*action_)[i].scaled(element.at(i, 0));
    }
    return out;
}

std::optional<std::string> validate_module(const Module& m) {
    const Algebra& a = *m.algebra();
    const std::size_t n = a.dim();
    if (!(m.act(a.unit()) == Matrix::identity(m.field(), m.dim()))) {
        return std::string("unit does not act as the identity");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(m.action(i) * m.action(j) == m.act(a.product(i, j)))) {
                return "rho(e_" + std::to_string(i) + ") rho(e_" + std::to_string(j) + ") != rho(e_" +
                       std::to_string(i) + " e_" + std::to_string(j) + ")";
            }
        }
    }
    return std::nullopt;
}

bool same_algebra(const Module& a, const Module& b) {
    return a.algebra() == b.algebra() || *a.algebra() == *b.algebra();
}

void require_same_algebra(const Module& a, const Module& b, const char* where) {
    if (!same_algebra(a, b)) throw InvalidArgument(std::string(where) + ": modules over different algebras");
}

Module zero_module(const AlgebraPtr& a) {
    return Module(a, 0, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
}

Module free_module(const AlgebraPtr& a, std::size_t rank) {
    std::vector<Matrix> action;
    action.reserve(a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        action.push_back(block_diagonal(std::vector<Matrix>(rank, a->left_mult(i)), a->field()));
    }
    return Module(a, rank * a->dim(), std::move(action));
}

Module direct_sum(const Module& a, const Module& b) {
    require_same_algebra(a, b, "direct_sum");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.algebra()->dim(); ++i) {
        action.push_back(block_diagonal({a.action(i), b.action(i)}, a.field()));
    }
    return Module(a.algebra(), a.dim() + b.dim(), std::move(action));
}

Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& a) {
    Module out = zero_module(a);
    for (const auto& p : parts) out = direct_sum(out, p);
    return out;
}

bool ModuleHom::is_valid() const {
    if (!same_algebra(source, target)) return false;
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
    for (std::size_t i = 0; i < source.algebra()->dim(); ++i) {
        if (!(matrix * source.action(i) == target.action(i) * matrix)) return false;
    }
    return true;
}

ModuleHom identity_hom(const Module& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

ModuleHom zero_hom(const Module& source, const Module& target) {
    return {source, target, Matrix(source.field(), target.dim(), source.dim())};
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
    if (g.source.dim() != f.target.dim()) throw InvalidArgument("compose: shape mismatch");
    return {f.source, g.target, g.matrix * f.matrix};
}

Matrix hom_space(const Module& m, const Module& n) {
    require_same_algebra(m, n, "hom_basis");
    const Field field = m.field();
    const std::size_t unknowns = m.dim() * n.dim();
    const Matrix im = Matrix::identity(field, m.dim());
    const Matrix in = Matrix::identity(field, n.dim());
    std::vector<Matrix> blocks;
    for (auto g : m.algebra()->generators()) {
        blocks.push_back(kron(m.action(g).transpose(), in) - kron(im, n.action(g)));
    }
    if (blocks.empty()) return Matrix::identity(field, unknowns);
    return kernel_basis(vstack(blocks, field, unknowns));
}

std::vector<ModuleHom> hom_basis(const Module& m, const Module& n) {
    Matrix k = hom_space(m, n);
    std::vector<ModuleHom> out;
    out.reserve(k.cols());
    for (std::size_t t = 0; t < k.cols(); ++t) {
        out.push_back({m, n, Matrix::unvec(k.column(t), n.dim(), m.dim())});
    }
    return out;
}

std::optional<ModuleHom> module_section(const ModuleHom& f) {
    const Module& top = f.source;
    const Module& bottom = f.target;
    auto basis = hom_basis(bottom, top);
    const Field field = f.matrix.field();
    Matrix system(field, bottom.dim() * bottom.dim(), basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
        system.set_block(0, t, (f.matrix * basis[t].matrix).vec());
    }
    auto res = solve_right(system, Matrix::identity(field, bottom.dim()).vec());
    if (!res.solvable) return std::nullopt;
    Matrix s(field, top.dim(), bottom.dim());
    for (std::size_t t = 0; t < basis.size(); ++t) {
        if (!res.solution.entry_is_zero(t, 0)) s = s + basis[t].matrix.scaled(res.solution.at(t, 0));
    }
    return ModuleHom{bottom, top, s};
}

Submodule submodule(const Module& m, const Matrix& basis) {
    const Field field = m.field();
    Matrix b = basis.cols() == 0 ? Matrix(field, m.dim(), 0) : basis;
    if (b.rows() != m.dim()) throw InvalidArgument("submodule basis has the wrong length");
    if (rank(b) != b.cols()) throw InvalidArgument("submodule basis is not independent");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        auto res = solve_right(b, m.action(i) * b);
        if (!res.solvable) throw InvalidArgument("subspace is not invariant under the algebra");
        action.push_back(res.solution);
    }
    Module sub(m.algebra(), b.cols(), std::move(action));
    return {sub, ModuleHom{sub, m, b}};
}

Submodule kernel(const ModuleHom& f) { return submodule(f.source, kernel_basis(f.matrix)); }

Submodule image(const ModuleHom& f) { return submodule(f.target, image_basis(f.matrix)); }

QuotientModule quotient_module(const Module& m, const Matrix& span) {
    const Field field = m.field();
    Matrix basis = span.cols() == 0 ? Matrix(field, m.dim(), 0) : image_basis(span);
    QuotientStructure qs = quotient_structure(field, m.dim(), basis);
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        Matrix moved = m.action(i) * basis;
        if (!(qs.projection * moved).is_zero()) {
            throw InvalidArgument("quotient by a subspace that is not invariant");
        }
        action.push_back(qs.projection * m.action(i) * qs.section);
    }
    Module q(m.algebra(), qs.quotient_dim, std::move(action));
    return {q, ModuleHom{m, q, qs.projection}, qs.section};
}

QuotientModule cokernel(const ModuleHom& f) { return quotient_module(f.target, f.matrix); }

DualModule dual_module(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    AlgebraPtr aop = opposite(*a);
    Module regular = free_module(a, 1);
    auto basis = hom_basis(m, regular);
    const Field field = m.field();
    const std::size_t n = a->dim();
    const std::size_t r = basis.size();
    Matrix coords = vec_columns(basis, field, n * m.dim());
    std::vector<Matrix> action;
    action.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // (f . e_i)(x) = f(x) e_i, i.e. right multiplication applied after f.
        const Matrix& right = aop->left_mult(i);
        Matrix images(field, n * m.dim(), r);
        for (std::size_t t = 0; t < r; ++t) images.set_block(0, t, (right * basis[t].matrix).vec());
        auto res = solve_right(coords, images);
        if (!res.solvable) throw InconsistencyError("dual module is not closed under the right action");
        action.push_back(res.solution);
    }
    return {Module(aop, r, std::move(action)), std::move(basis)};
}

DoubleDual double_dual(const Module& m) {
    DualModule first = dual_module(m);
    DualModule second = dual_module(first.module);
    const Field field = m.field();
    const std::size_t n = m.algebra()->dim();
    const std::size_t r = first.basis.size();
    Module mm(m.algebra(), second.module.dim(), second.module.actions());

    Matrix coords = vec_columns(second.basis, field, n * r);
    Matrix evals(field, n * r, m.dim());
    for (std::size_t c = 0; c < m.dim(); ++c) {
        // ev_c(f_t) = f_t(e_c)
        Matrix ev(field, n, r);
        for (std::size_t t = 0; t < r; ++t) ev.set_block(0, t, first.basis[t].matrix.column(c));
        evals.set_block(0, c, ev.vec());
    }
    auto res = solve_right(coords, evals);
    if (!res.solvable) throw InconsistencyError("evaluation is not a homomorphism of duals");
    return {mm, ModuleHom{m, mm, res.solution}};
}

Module change_basis(const Module& m, const Matrix& p) {
    Matrix pinv = inverse(p);
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) action.push_back(pinv * a * p);
    return Module(m.algebra(), m.dim(), std::move(action));
}

}  // namespace ghal
