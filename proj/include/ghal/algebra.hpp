#pragma once

// Finite-dimensional algebras given by structure constants, left modules as
// representations, and module homomorphisms.
//
// Vectors are columns. For an algebra with basis e_0..e_{n-1} the product
// e_i e_j has coordinates mult(i, j); the left regular representation is
// stored as the matrices L_i with L_i e_j = e_i e_j.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghal/exactlin.hpp"

namespace ghal {

class Algebra {
public:
    /// `unit` is a dim x 1 column; `left_mult[i]` is the matrix of e_i acting
    /// on the left of the algebra. No axioms are checked here; see
    /// validate_algebra.
    Algebra(Field field, Matrix unit, std::vector<Matrix> left_mult);

    /// table[i][j] = coordinates of e_i e_j.
    static Algebra from_table(Field field, const std::vector<long long>& unit,
                              const std::vector<std::vector<std::vector<long long>>>& table);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Matrix& unit() const { return unit_; }
    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    /// Coordinates of e_i e_j as a column.
    Matrix product(std::size_t i, std::size_t j) const { return left_mult_[i].column(j); }
    /// Coordinates of x y for coordinate columns x, y.
    Matrix multiply(const Matrix& x, const Matrix& y) const;

    /// Basis indices generating the algebra together with the unit. A module
    /// map commuting with these commutes with the whole algebra.
    const std::vector<std::size_t>& generators() const { return generators_; }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.field_ == b.field_ && a.unit_ == b.unit_ && a.left_mult_ == b.left_mult_;
    }

private:
    void compute_generators();

    Field field_;
    std::size_t dim_;
    Matrix unit_;
    std::vector<Matrix> left_mult_;
    std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

struct AlgebraViolation {
    enum class Kind { Shape, LeftUnit, RightUnit, Associativity };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    std::string message;
};

std::optional<AlgebraViolation> validate_algebra(const Algebra& a);

/// The opposite algebra, with e_i *op e_j = e_j e_i.
AlgebraPtr opposite(const Algebra& a);

/// A left module: action(i) is the matrix of e_i. Cheap to copy; the action
/// matrices are shared and never mutated.
class Module {
public:
    Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return (*action_)[i]; }
    const std::vector<Matrix>& actions() const { return *action_; }
    /// Matrix of the algebra element with coordinate column `element`.
    Matrix act(const Matrix& element) const;

    bool is_zero() const { return dim_ == 0; }

    friend bool operator==(const Module& a, const Module& b) {
        return a.dim_ == b.dim_ && *a.algebra_ == *b.algebra_ && *a.action_ == *b.action_;
    }

private:
    AlgebraPtr algebra_;
    std::size_t dim_;
    std::shared_ptr<const std::vector<Matrix>> action_;
};

/// Returns a description of the first violated module axiom, if any.
std::optional<std::string> validate_module(const Module& m);

bool same_algebra(const Module& a, const Module& b);
void require_same_algebra(const Module& a, const Module& b, const char* where);

Module zero_module(const AlgebraPtr& a);
/// The left regular representation summed `rank` times.
Module free_module(const AlgebraPtr& a, std::size_t rank);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& a);

struct ModuleHom {
    Module source;
    Module target;
    Matrix matrix;  ///< target.dim x source.dim

    bool is_valid() const;
};

ModuleHom identity_hom(const Module& m);
ModuleHom zero_hom(const Module& source, const Module& target);
/// g after f.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

/// Basis of Hom_A(m, n) as solutions of the intertwining system.
std::vector<ModuleHom> hom_basis(const Module& m, const Module& n);
/// Columns are vec() of the hom_basis matrices.
Matrix hom_space(const Module& m, const Module& n);

/// An A-linear right inverse of f, if f splits.
std::optional<ModuleHom> module_section(const ModuleHom& f);

/// Submodule spanned by the independent, invariant columns of `basis`.
struct Submodule {
    Module module;
    ModuleHom inclusion;
};
Submodule submodule(const Module& m, const Matrix& basis);
Submodule kernel(const ModuleHom& f);
/// Image of f as a submodule of its target.
Submodule image(const ModuleHom& f);

/// Quotient of m by an invariant subspace spanned by the columns of `span`
/// (need not be independent).
struct QuotientModule {
    Module module;
    ModuleHom projection;
    Matrix section;  ///< linear (not A-linear) right inverse of the projection
};
QuotientModule quotient_module(const Module& m, const Matrix& span);
QuotientModule cokernel(const ModuleHom& f);

/// Hom_A(M, A) as a left module over the opposite algebra, with the basis of
/// homomorphisms used for its coordinates.
struct DualModule {
    Module module;
    std::vector<ModuleHom> basis;
};
DualModule dual_module(const Module& m);

/// The natural map M -> M**, as a matrix into the coordinates of
/// dual_module(dual_module(M).module).module.
struct DoubleDual {
    Module module;
    ModuleHom natural_map;
};
DoubleDual double_dual(const Module& m);

/// Conjugates every action matrix by an invertible change of basis p
/// (new action = p^-1 rho p).
Module change_basis(const Module& m, const Matrix& p);

}  // namespace ghal
