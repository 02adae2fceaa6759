#include "ghal/exactlin.hpp"

#include <sstream>

namespace ghal {

namespace {

bool is_prime_number(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint32_t residue(const Rational& value, std::uint32_t p) {
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator(value);
    cpp_int den = boost::multiprecision::denominator(value);
    cpp_int pp = p;
    cpp_int n = num % pp;
    if (n < 0) n += pp;
    cpp_int d = den % pp;
    if (d == 0) {
        throw InvalidArgument("denominator divisible by the field characteristic");
    }
    detail::PrimeOps ops{p};
    auto nn = static_cast<std::uint32_t>(n);
    auto dd = static_cast<std::uint32_t>(d);
    return ops.mul(nn, ops.inv(dd));
}

template <class Ops>
void eliminate(const Ops& ops, std::vector<typename Ops::T>& a, std::size_t rows,
               std::size_t cols, std::size_t pivot_limit, std::vector<std::size_t>& pivots) {
    pivots.clear();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < pivot_limit && prow < rows; ++c) {
        std::size_t r = prow;
        while (r < rows && ops.is_zero(a[r * cols + c])) ++r;
        if (r == rows) continue;
        if (r != prow) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[r * cols + k], a[prow * cols + k]);
        }
        auto inv = ops.inv(a[prow * cols + c]);
        for (std::size_t k = c; k < cols; ++k) {
            a[prow * cols + k] = ops.mul(a[prow * cols + k], inv);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow || ops.is_zero(a[i * cols + c])) continue;
            auto factor = a[i * cols + c];
            for (std::size_t k = c; k < cols; ++k) {
                if (ops.is_zero(a[prow * cols + k])) continue;
                a[i * cols + k] = ops.sub(a[i * cols + k], ops.mul(factor, a[prow * cols + k]));
            }
        }
        pivots.push_back(c);
        ++prow;
    }
}

void check_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw InvalidArgument("matrices over different fields");
}

}  // namespace

detail::PrimeOps::T detail::PrimeOps::inv(T a) const {
    if (a == 0) throw InvalidArgument("division by zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return T(result);
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_number(p)) {
        throw InvalidArgument("field characteristic " + std::to_string(p) +
                              " is not a prime below 2^31");
    }
    return Field(p);
}

Rational Field::reduce(const Rational& value) const {
    if (is_rationals()) return value;
    return Rational(residue(value, p_));
}

std::string Field::name() const {
    if (is_rationals()) return "Q";
    return "F_" + std::to_string(p_);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (field_.is_prime()) {
        fp_.assign(rows * cols, 0);
    } else {
        q_.assign(rows * cols, Rational(0));
    }
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    dispatch(field, [&](auto ops) {
        auto& s = m.storage<decltype(ops)>();
        for (std::size_t i = 0; i < n; ++i) s[i * n + i] = ops.one();
    });
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& row_major) {
    if (row_major.size() != rows * cols) {
        throw InvalidArgument("entry count does not match matrix shape");
    }
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < row_major.size(); ++i) {
        m.set(i / cols, i % cols, Rational(row_major[i]));
    }
    return m;
}

Matrix Matrix::from_rows(Field field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    std::vector<long long> flat;
    for (const auto& r : rows) {
        if (r.size() != nc) throw InvalidArgument("ragged matrix rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_rows(field, nr, nc, flat);
}

Matrix Matrix::column_vector(Field field, const std::vector<long long>& entries) {
    return from_rows(field, entries.size(), 1, entries);
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
    if (field_.is_prime()) return Rational(fp_[r * cols_ + c]);
    return q_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
    if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
    if (field_.is_prime()) {
        fp_[r * cols_ + c] = residue(value, field_.characteristic());
    } else {
        q_[r * cols_ + c] = value;
    }
}

bool Matrix::entry_is_zero(std::size_t r, std::size_t c) const {
    if (field_.is_prime()) return fp_[r * cols_ + c] == 0;
    return q_[r * cols_ + c] == 0;
}

bool Matrix::is_zero() const {
    if (field_.is_prime()) {
        for (auto v : fp_)
            if (v != 0) return false;
        return true;
    }
    for (const auto& v : q_)
        if (v != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (cols_ != rhs.rows_) {
        throw InvalidArgument("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                              std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                              std::to_string(rhs.cols_));
    }
    Matrix out(field_, rows_, rhs.cols_);
    if (field_.is_prime()) {
        const std::uint64_t p = field_.characteristic();
        const auto& a = fp_;
        const auto& b = rhs.fp_;
        auto& o = out.fp_;
        std::vector<std::uint64_t> acc(rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t aik = a[i * cols_ + k];
                if (aik == 0) continue;
                const std::uint32_t* brow = b.data() + k * rhs.cols_;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    acc[j] += aik * brow[j];
                    if (acc[j] >= (1ull << 62)) acc[j] %= p;
                }
            }
            for (std::size_t j = 0; j < rhs.cols_; ++j) o[i * rhs.cols_ + j] = std::uint32_t(acc[j] % p);
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& aik = q_[i * cols_ + k];
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const auto& bkj = rhs.q_[k * rhs.cols_ + j];
                    if (bkj == 0) continue;
                    out.q_[i * rhs.cols_ + j] += aik * bkj;
                }
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidArgument("matrix sum shape mismatch");
    Matrix out(*this);
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        auto& o = out.storage<Ops>();
        const auto& r = rhs.storage<Ops>();
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = ops.add(o[i], r[i]);
    });
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
    Matrix out(*this);
    dispatch(field_, [&](auto ops) {
        for (auto& v : out.storage<decltype(ops)>()) v = ops.neg(v);
    });
    return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
    Matrix out(*this);
    Rational f = field_.reduce(factor);
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        typename Ops::T t;
        if constexpr (std::is_same_v<Ops, detail::PrimeOps>) {
            t = static_cast<std::uint32_t>(boost::multiprecision::numerator(f));
        } else {
            t = f;
        }
        for (auto& v : out.storage<Ops>()) v = ops.mul(v, t);
    });
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = storage<Ops>();
        auto& o = out.storage<Ops>();
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) o[j * rows_ + i] = s[i * cols_ + j];
    });
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
    Matrix out(field_, nr, nc);
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = storage<Ops>();
        auto& o = out.storage<Ops>();
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) o[i * nc + j] = s[(r0 + i) * cols_ + c0 + j];
    });
    return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix out(field_, rows_, cols.size());
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = storage<Ops>();
        auto& o = out.storage<Ops>();
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw InvalidArgument("column index out of range");
            for (std::size_t i = 0; i < rows_; ++i) o[i * cols.size() + j] = s[i * cols_ + cols[j]];
        }
    });
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    check_same_field(*this, src);
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw InvalidArgument("block out of range");
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = src.storage<Ops>();
        auto& o = storage<Ops>();
        for (std::size_t i = 0; i < src.rows_; ++i)
            for (std::size_t j = 0; j < src.cols_; ++j) o[(r0 + i) * cols_ + c0 + j] = s[i * src.cols_ + j];
    });
}

Matrix Matrix::vec() const {
    Matrix out(field_, rows_ * cols_, 1);
    dispatch(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = storage<Ops>();
        auto& o = out.storage<Ops>();
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) o[j * rows_ + i] = s[i * cols_ + j];
    });
    return out;
}

Matrix Matrix::unvec(const Matrix& column, std::size_t rows, std::size_t cols) {
    if (column.cols() != 1 || column.rows() != rows * cols) {
        throw InvalidArgument("unvec shape mismatch");
    }
    Matrix out(column.field(), rows, cols);
    dispatch(column.field(), [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = column.storage<Ops>();
        auto& o = out.storage<Ops>();
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) o[i * cols + j] = s[j * rows + i];
    });
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ &&
           a.q_ == b.q_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw InvalidArgument("hstack row mismatch");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols()) throw InvalidArgument("vstack column mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

Matrix hstack(const std::vector<Matrix>& parts, Field field, std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw InvalidArgument("hstack row mismatch");
        cols += p.cols();
    }
    Matrix out(field, rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& parts, Field field, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw InvalidArgument("vstack column mismatch");
        rows += p.rows();
    }
    Matrix out(field, rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows();
    }
    return out;
}

Matrix block_diagonal(const std::vector<Matrix>& parts, Field field) {
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows();
        cols += p.cols();
    }
    Matrix out(field, rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        out.set_block(r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return out;
}

Echelon rref(const Matrix& m) {
    Echelon e{m, {}};
    dispatch(m.field(), [&](auto ops) {
        eliminate(ops, e.reduced.storage<decltype(ops)>(), m.rows(), m.cols(), m.cols(), e.pivots);
    });
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix k(m.field(), n, free_cols.size());
    dispatch(m.field(), [&](auto ops) {
        using Ops = decltype(ops);
        const auto& r = e.reduced.template storage<Ops>();
        auto& out = k.template storage<Ops>();
        const std::size_t kc = free_cols.size();
        for (std::size_t j = 0; j < kc; ++j) {
            std::size_t f = free_cols[j];
            out[f * kc + j] = ops.one();
            for (std::size_t i = 0; i < e.pivots.size(); ++i) {
                out[e.pivots[i] * kc + j] = ops.neg(r[i * n + f]);
            }
        }
    });
    return k;
}

Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

SolveResult solve_right(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) {
        throw InvalidArgument("solve_right: A has " + std::to_string(a.rows()) + " rows, B has " +
                              std::to_string(b.rows()));
    }
    Matrix aug = hstack(a, b);
    std::vector<std::size_t> pivots;
    dispatch(a.field(), [&](auto ops) {
        eliminate(ops, aug.storage<decltype(ops)>(), aug.rows(), aug.cols(), a.cols(), pivots);
    });
    SolveResult result;
    const std::size_t r = pivots.size();
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = r; i < aug.rows(); ++i) {
            if (!aug.entry_is_zero(i, a.cols() + j)) {
                result.solvable = false;
                result.certificate_column = j;
                return result;
            }
        }
    }
    result.solvable = true;
    result.solution = Matrix(a.field(), a.cols(), b.cols());
    dispatch(a.field(), [&](auto ops) {
        using Ops = decltype(ops);
        const auto& s = aug.storage<Ops>();
        auto& x = result.solution.storage<Ops>();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                x[pivots[i] * b.cols() + j] = s[i * aug.cols() + a.cols() + j];
    });
    return result;
}

std::optional<Matrix> split_section(const Matrix& f) {
    auto res = solve_right(f, Matrix::identity(f.field(), f.rows()));
    if (!res.solvable) return std::nullopt;
    return res.solution;
}

QuotientStructure quotient_structure(Field field, std::size_t ambient, const Matrix& s) {
    Matrix sub = s;
    if (sub.cols() == 0) sub = Matrix(field, ambient, 0);
    if (sub.rows() != ambient) throw InvalidArgument("subspace basis does not live in the ambient space");
    if (rank(sub) != sub.cols()) throw InvalidArgument("quotient_structure: dependent subspace columns");

    Echelon e = rref(hstack(sub, Matrix::identity(field, ambient)));
    std::vector<std::size_t> complement;
    for (auto c : e.pivots)
        if (c >= sub.cols()) complement.push_back(c - sub.cols());
    Matrix section = Matrix::identity(field, ambient).select_columns(complement);
    const std::size_t q = complement.size();

    QuotientStructure out;
    out.quotient_dim = q;
    out.section = section;
    if (ambient == 0) {
        out.projection = Matrix(field, 0, 0);
        return out;
    }
    Matrix basis = hstack(sub, section);
    Matrix inv = inverse(basis);
    out.projection = inv.block(sub.cols(), 0, q, ambient);
    return out;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    auto res = solve_right(m, Matrix::identity(m.field(), m.rows()));
    if (!res.solvable || rank(m) != m.rows()) throw InvalidArgument("matrix is singular");
    return res.solution;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    dispatch(a.field(), [&](auto ops) {
        using Ops = decltype(ops);
        const auto& sa = a.storage<Ops>();
        const auto& sb = b.storage<Ops>();
        auto& o = out.storage<Ops>();
        const std::size_t oc = out.cols();
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const auto& aij = sa[i * a.cols() + j];
                if (ops.is_zero(aij)) continue;
                for (std::size_t k = 0; k < b.rows(); ++k)
                    for (std::size_t l = 0; l < b.cols(); ++l)
                        o[(i * b.rows() + k) * oc + j * b.cols() + l] = ops.mul(aij, sb[k * b.cols() + l]);
            }
    });
    return out;
}

}  // namespace ghal
