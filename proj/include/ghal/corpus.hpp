#pragma once

// The bundled example algebras, modules and complexes.

#include <string>
#include <vector>

#include "ghal/complexes.hpp"

namespace ghal::corpus {

/// F_2[x]/(x^2), basis 1, x.
AlgebraPtr dual_numbers();
/// F_3[x]/(x^3), basis 1, x, x^2.
AlgebraPtr truncated_cubic();
/// F_2[x,y]/(x^2,y^2), basis 1, x, y, xy.
AlgebraPtr klein_four();
/// Upper-triangular 2x2 matrices over F_2, basis e11, e12, e22.
AlgebraPtr upper_triangular();

/// The residue field of a local algebra whose basis is 1 followed by radical elements.
Module residue_field(const AlgebraPtr& a);
/// A / I for the left ideal I spanned by the columns of `ideal`.
Module cyclic_quotient(const AlgebraPtr& a, const Matrix& ideal);
/// The left ideal spanned by the columns of `ideal`, as a module.
Module left_ideal(const AlgebraPtr& a, const Matrix& ideal);

struct NamedAlgebra {
    std::string name;
    AlgebraPtr algebra;
    std::size_t gdim;
};

struct NamedModule {
    std::string name;      ///< unique across the corpus, e.g. "A2/k"
    std::string algebra;   ///< NamedAlgebra::name
    Module module;
};

std::vector<NamedAlgebra> algebras();
struct NamedComplex {
    std::string name;
    std::string algebra;
    ChainComplex complex;
};

std::vector<NamedModule> modules();
/// Disks, closures, shifts and a few non-acyclic complexes.
std::vector<NamedComplex> complexes();

}  // namespace ghal::corpus
