#include "ghal/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

namespace ghal::io {

namespace {

const Json& field_of(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::size_t count_of(const Json& j, const char* key, const char* what) {
    const Json& v = field_of(j, key, what);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ParseError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

int int_of(const Json& j, const char* key, const char* what) {
    const Json& v = field_of(j, key, what);
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

const Json& array_of(const Json& j, const char* key, const char* what, std::size_t size) {
    const Json& v = field_of(j, key, what);
    if (!v.is_array() || v.size() != size) {
        throw ParseError(std::string(what) + ": \"" + key + "\" must be an array of length " + std::to_string(size));
    }
    return v;
}

boost::multiprecision::cpp_int integer_of(const Json& v) {
    if (v.is_number_integer()) return boost::multiprecision::cpp_int(v.get<long long>());
    if (!v.is_string()) throw ParseError("rational part must be a decimal string");
    const std::string s = v.get<std::string>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
        throw ParseError("malformed integer \"" + s + "\"");
    }
    return boost::multiprecision::cpp_int(s);
}

}  // namespace

Json rational_to_json(const Rational& q) {
    return {{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("rational must be {\"num\", \"den\"}");
    auto den = integer_of(j.at("den"));
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(integer_of(j.at("num")), den);
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols) {
    const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix must have " + shape + " entries");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError("matrix must have " + shape + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                m.set(r, c, rational_from_json(j[r][c]));
            } catch (const InvalidArgument& e) {
                throw ParseError(e.what());
            }
        }
    }
    return m;
}

Json field_to_json(const Field& f) {
    if (f.is_rationals()) return {{"rationals", true}};
    return {{"p", f.characteristic()}};
}

Field field_from_json(const Json& j) {
    if (j.is_object() && j.contains("rationals") && j.size() == 1) {
        if (j.at("rationals") != true) throw ParseError("field: \"rationals\" must be true");
        return Field::rationals();
    }
    if (j.is_object() && j.contains("p") && j.size() == 1 && j.at("p").is_number_integer()) {
        std::size_t p = count_of(j, "p", "field");
        if (p > UINT32_MAX) throw ParseError("field: \"p\" out of range");
        try {
            return Field::prime(static_cast<std::uint32_t>(p));
        } catch (const InvalidArgument& e) {
            throw ParseError(std::string("field: ") + e.what());
        }
    }
    throw ParseError("field must be {\"p\": prime} or {\"rationals\": true}");
}

Json algebra_to_json(const Algebra& a) {
    Json unit = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) unit.push_back(rational_to_json(a.unit().at(i, 0)));
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Json v = Json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) v.push_back(rational_to_json(a.left_mult(i).at(k, j)));
            row.push_back(v);
        }
        mult.push_back(row);
    }
    return {{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"unit", unit}, {"mult", mult}};
}

AlgebraPtr algebra_from_json(const Json& j) {
    const char* what = "algebra";
    Field field = field_from_json(field_of(j, "field", what));
    const std::size_t n = count_of(j, "dim", what);
    const Json& unit = array_of(j, "unit", what, n);
    Matrix u(field, n, 1);
    for (std::size_t i = 0; i < n; ++i) u.set(i, 0, field.reduce(rational_from_json(unit[i])));
    const Json& mult = array_of(j, "mult", what, n);
    std::vector<Matrix> left(n, Matrix(field, n, n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!mult[i].is_array() || mult[i].size() != n) throw ParseError("algebra: mult must be dim x dim x dim");
        for (std::size_t jj = 0; jj < n; ++jj) {
            if (!mult[i][jj].is_array() || mult[i][jj].size() != n) throw ParseError("algebra: mult must be dim x dim x dim");
            for (std::size_t k = 0; k < n; ++k) left[i].set(k, jj, field.reduce(rational_from_json(mult[i][jj][k])));
        }
    }
    Algebra a(field, u, std::move(left));
    if (auto v = validate_algebra(a)) throw ParseError("algebra violates its axioms: " + v->message);
    return make_algebra(std::move(a));
}

std::string digest(const Json& j) {
    const std::string text = j.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

std::string algebra_digest(const Algebra& a) { return digest(algebra_to_json(a)); }

Json module_to_json(const Module& m) {
    Json action = Json::array();
    for (const auto& act : m.actions()) action.push_back(matrix_to_json(act));
    return {{"algebra_digest", algebra_digest(*m.algebra())}, {"dim", m.dim()}, {"action", action}};
}

Module module_from_json(const Json& j, const AlgebraPtr& a) {
    const char* what = "module";
    const Json& d = field_of(j, "algebra_digest", what);
    if (!d.is_string() || d.get<std::string>() != algebra_digest(*a)) {
        throw ParseError("module: algebra_digest does not match the algebra");
    }
    const std::size_t n = count_of(j, "dim", what);
    const Json& action = array_of(j, "action", what, a->dim());
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < a->dim(); ++i) mats.push_back(matrix_from_json(action[i], a->field(), n, n));
    Module m(a, n, std::move(mats));
    if (auto err = validate_module(m)) throw ParseError("module violates its axioms: " + *err);
    return m;
}

Json complex_to_json(const ChainComplex& x) {
    Json comps = Json::array(), diffs = Json::array();
    for (const auto& c : x.components()) comps.push_back(module_to_json(c));
    for (int n = x.lo(); n < x.hi(); ++n) diffs.push_back(matrix_to_json(x.differential(n).matrix));
    return {{"lo", x.lo()}, {"hi", x.hi()}, {"components", comps}, {"differentials", diffs}};
}

ChainComplex complex_from_json(const Json& j, const AlgebraPtr& a) {
    const char* what = "complex";
    const int lo = int_of(j, "lo", what), hi = int_of(j, "hi", what);
    if (hi < lo - 1) throw ParseError("complex: hi must be at least lo - 1");
    const std::size_t len = std::size_t(hi - lo + 1);
    const Json& comps = array_of(j, "components", what, len);
    const Json& diffs = array_of(j, "differentials", what, len == 0 ? 0 : len - 1);
    std::vector<Module> modules;
    for (std::size_t i = 0; i < len; ++i) modules.push_back(module_from_json(comps[i], a));
    std::vector<Matrix> ds;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        ds.push_back(matrix_from_json(diffs[i], a->field(), modules[i + 1].dim(), modules[i].dim()));
    }
    ChainComplex x(a, lo, std::move(modules), std::move(ds));
    if (auto err = validate_complex(x)) throw ParseError("complex violates its axioms: " + *err);
    return x;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) throw Error("cannot write " + path);
}

}  // namespace ghal::io
