#pragma once

// JSON interchange for algebras, modules and complexes. Rationals are
// {"num", "den"} string pairs; matrices are arrays of rows whose shape is
// fixed by the surrounding object.

#include <string>

#include "json.hpp"

#include "ghal/complexes.hpp"

namespace ghal::io {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
/// Parses and validates the algebra axioms.
AlgebraPtr algebra_from_json(const Json& j);

/// Lowercase hex SHA-256 of the compact serialization.
std::string digest(const Json& j);
std::string algebra_digest(const Algebra& a);

Json module_to_json(const Module& m);
/// Checks the algebra digest and the module axioms.
Module module_from_json(const Json& j, const AlgebraPtr& a);

Json complex_to_json(const ChainComplex& x);
/// Checks every component and d^2 = 0.
ChainComplex complex_from_json(const Json& j, const AlgebraPtr& a);

Json read_json_file(const std::string& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace ghal::io
