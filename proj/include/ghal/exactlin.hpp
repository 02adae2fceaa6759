#pragma once

// Exact dense linear algebra over a prime field F_p or over the rationals.
//
// All matrices are immutable values once built. Elimination uses the first
// nonzero entry scanning top-to-bottom, left-to-right as pivot, so every
// basis produced here is a deterministic function of the input entries.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghal/error.hpp"

namespace ghal {

using Rational = boost::multiprecision::cpp_rational;

class Field {
public:
    /// F_p; throws InvalidArgument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    static Field rationals() { return Field(0); }

    bool is_prime() const { return p_ != 0; }
    bool is_rationals() const { return p_ == 0; }
    /// p for F_p, 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    /// Maps a rational value into the field (a/b -> a * b^-1 mod p for F_p).
    Rational reduce(const Rational& value) const;

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

namespace detail {

struct PrimeOps {
    using T = std::uint32_t;
    std::uint32_t p;

    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return T(s >= p ? s - p : s);
    }
    T sub(T a, T b) const { return a >= b ? a - b : T(std::uint64_t(a) + p - b); }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T mul(T a, T b) const { return T((std::uint64_t(a) * b) % p); }
    T inv(T a) const;
};

struct RationalOps {
    using T = Rational;

    T zero() const { return T(0); }
    T one() const { return T(1); }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T neg(const T& a) const { return -a; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return T(1) / a; }
};

}  // namespace detail

/// Dense row-major matrix over an exact field. Empty shapes (0 rows or 0
/// columns) are valid values.
class Matrix {
public:
    Matrix() : Matrix(Field::prime(2), 0, 0) {}
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix zero(Field field, std::size_t rows, std::size_t cols) {
        return Matrix(field, rows, cols);
    }
    static Matrix identity(Field field, std::size_t n);
    /// Builds from integer rows, reducing entries into the field.
    static Matrix from_rows(Field field, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& row_major);
    static Matrix from_rows(Field field,
                            std::initializer_list<std::initializer_list<long long>> rows);
    /// Column vector of length n.
    static Matrix column_vector(Field field, const std::vector<long long>& entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    bool entry_is_zero(std::size_t r, std::size_t c) const;
    bool is_zero() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& factor) const;
    Matrix transpose() const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src);

    /// Column-major vectorization into a (rows*cols) x 1 column.
    Matrix vec() const;
    static Matrix unvec(const Matrix& column, std::size_t rows, std::size_t cols);

    std::string to_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    template <class Ops>
    std::vector<typename Ops::T>& storage();
    template <class Ops>
    const std::vector<typename Ops::T>& storage() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> fp_;
    std::vector<Rational> q_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, Field field, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& parts, Field field, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& parts, Field field);

struct Echelon {
    Matrix reduced;                   ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns spanning ker(m), one per free column of the echelon form.
Matrix kernel_basis(const Matrix& m);

/// Linearly independent columns of m spanning its image (the pivot columns).
Matrix image_basis(const Matrix& m);

struct SolveResult {
    bool solvable = false;
    Matrix solution;                  ///< valid when solvable
    std::size_t certificate_column = 0;  ///< first column of B outside im(A)
};

/// Solves A X = B; free variables are set to zero.
SolveResult solve_right(const Matrix& a, const Matrix& b);

/// A right inverse s with f s = id, when one exists.
std::optional<Matrix> split_section(const Matrix& f);

struct QuotientStructure {
    Matrix projection;   ///< quotient_dim x ambient, kernel = span(S)
    Matrix section;      ///< ambient x quotient_dim, projection * section = id
    std::size_t quotient_dim = 0;
};

/// Quotient of k^ambient by the span of the (independent) columns of s.
QuotientStructure quotient_structure(Field field, std::size_t ambient, const Matrix& s);

/// Inverse of a square invertible matrix; throws InvalidArgument otherwise.
Matrix inverse(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

template <class Fn>
decltype(auto) dispatch(const Field& field, Fn&& fn) {
    if (field.is_prime()) {
        return fn(detail::PrimeOps{field.characteristic()});
    }
    return fn(detail::RationalOps{});
}

template <>
inline std::vector<std::uint32_t>& Matrix::storage<detail::PrimeOps>() { return fp_; }
template <>
inline const std::vector<std::uint32_t>& Matrix::storage<detail::PrimeOps>() const { return fp_; }
template <>
inline std::vector<Rational>& Matrix::storage<detail::RationalOps>() { return q_; }
template <>
inline const std::vector<Rational>& Matrix::storage<detail::RationalOps>() const { return q_; }

}  // namespace ghal
