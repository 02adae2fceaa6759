#include "ghal/ghal.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <functional>
#include <new>

#include "ghal/verify.hpp"

using ghal::io::Json;

struct ghal_algebra {
    ghal::AlgebraPtr algebra;
};

struct ghal_module {
    ghal::Module module;
};

struct ghal_complex {
    ghal::ChainComplex complex;
};

namespace {

thread_local std::string last_error;

ghal_status fail(ghal_status s, const std::string& message) {
    last_error = message;
    return s;
}

ghal_status guarded(const std::function<void()>& body) {
    try {
        body();
        last_error.clear();
        return GHAL_OK;
    } catch (const ghal::ParseError& e) {
        return fail(GHAL_ERR_PARSE, e.what());
    } catch (const ghal::InvalidArgument& e) {
        return fail(GHAL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const ghal::PreconditionError& e) {
        return fail(GHAL_ERR_PRECONDITION, e.what());
    } catch (const ghal::CertificateError& e) {
        return fail(GHAL_ERR_CERTIFICATE, e.what());
    } catch (const ghal::InconsistencyError& e) {
        return fail(GHAL_ERR_INCONSISTENCY, e.what());
    } catch (const ghal::Error& e) {
        return fail(GHAL_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GHAL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GHAL_ERR_INTERNAL, e.what());
    }
}

void require(const void* p, const char* what) {
    if (!p) throw ghal::InvalidArgument(std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const Json& j) {
    if (out) *out = duplicate(j.dump());
}

ghal::GorensteinContext context(const ghal::Module& m, std::size_t gdim) {
    return ghal::GorensteinContext(m.algebra(), gdim);
}

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json dims_of(const ghal::ChainComplex& x) {
    Json d = Json::array();
    for (const auto& m : x.components()) d.push_back(m.dim());
    return d;
}

ghal::ClassOracle oracle_of(const char* name, const ghal::GorensteinContext& ctx) {
    require(name, "oracle");
    return ghal::ClassOracle::parse(name, ctx);
}

/// The partner class in the cotorsion pairs (projective, all) and (GP, finite pd).
ghal::ClassOracle right_partner(const ghal::ClassOracle& left, const ghal::GorensteinContext& ctx) {
    switch (left.kind()) {
        case ghal::ClassOracle::Kind::Projective: return ghal::ClassOracle::all();
        case ghal::ClassOracle::Kind::GorensteinProjective: return ghal::ClassOracle::finite_pd(ctx);
        default: throw ghal::InvalidArgument("dg test needs a left class: projective or gorenstein-projective");
    }
}

}  // namespace

extern "C" {

const char* ghal_version(void) { return ghal::verify::kVersion; }

const char* ghal_last_error(void) { return last_error.c_str(); }

const char* ghal_status_name(ghal_status status) {
    switch (status) {
        case GHAL_OK: return "ok";
        case GHAL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case GHAL_ERR_PARSE: return "parse error";
        case GHAL_ERR_PRECONDITION: return "precondition violated";
        case GHAL_ERR_CERTIFICATE: return "certificate failure";
        case GHAL_ERR_INCONSISTENCY: return "internal inconsistency";
        case GHAL_ERR_IO: return "i/o error";
        case GHAL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ghal_string_free(char* s) { std::free(s); }

ghal_status ghal_algebra_parse(const char* json, ghal_algebra** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        Json j;
        try {
            j = Json::parse(json);
        } catch (const Json::parse_error& e) {
            throw ghal::ParseError(e.what());
        }
        *out = new ghal_algebra{ghal::io::algebra_from_json(j)};
    });
}

ghal_status ghal_algebra_load(const char* path, ghal_algebra** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new ghal_algebra{ghal::io::algebra_from_json(ghal::io::read_json_file(path))};
    });
}

ghal_status ghal_algebra_to_json(const ghal_algebra* a, char** out) {
    return guarded([&] {
        require(a, "algebra");
        require(out, "out");
        emit(out, ghal::io::algebra_to_json(*a->algebra));
    });
}

ghal_status ghal_algebra_digest(const ghal_algebra* a, char** out) {
    return guarded([&] {
        require(a, "algebra");
        require(out, "out");
        *out = duplicate(ghal::io::algebra_digest(*a->algebra));
    });
}

ghal_status ghal_algebra_dim(const ghal_algebra* a, size_t* out) {
    return guarded([&] {
        require(a, "algebra");
        require(out, "out");
        *out = a->algebra->dim();
    });
}

void ghal_algebra_free(ghal_algebra* a) { delete a; }

ghal_status ghal_module_parse(const ghal_algebra* a, const char* json, ghal_module** out) {
    return guarded([&] {
        require(a, "algebra");
        require(json, "json");
        require(out, "out");
        Json j;
        try {
            j = Json::parse(json);
        } catch (const Json::parse_error& e) {
            throw ghal::ParseError(e.what());
        }
        *out = new ghal_module{ghal::io::module_from_json(j, a->algebra)};
    });
}

ghal_status ghal_module_load(const ghal_algebra* a, const char* path, ghal_module** out) {
    return guarded([&] {
        require(a, "algebra");
        require(path, "path");
        require(out, "out");
        *out = new ghal_module{ghal::io::module_from_json(ghal::io::read_json_file(path), a->algebra)};
    });
}

ghal_status ghal_module_free_of_rank(const ghal_algebra* a, size_t rank, ghal_module** out) {
    return guarded([&] {
        require(a, "algebra");
        require(out, "out");
        *out = new ghal_module{ghal::free_module(a->algebra, rank)};
    });
}

ghal_status ghal_module_to_json(const ghal_module* m, char** out) {
    return guarded([&] {
        require(m, "module");
        require(out, "out");
        emit(out, ghal::io::module_to_json(m->module));
    });
}

ghal_status ghal_module_save(const ghal_module* m, const char* path) {
    return guarded([&] {
        require(m, "module");
        require(path, "path");
        ghal::io::write_json_file(path, ghal::io::module_to_json(m->module));
    });
}

ghal_status ghal_module_dim(const ghal_module* m, size_t* out) {
    return guarded([&] {
        require(m, "module");
        require(out, "out");
        *out = m->module.dim();
    });
}

void ghal_module_free(ghal_module* m) { delete m; }

ghal_status ghal_complex_parse(const ghal_algebra* a, const char* json, ghal_complex** out) {
    return guarded([&] {
        require(a, "algebra");
        require(json, "json");
        require(out, "out");
        Json j;
        try {
            j = Json::parse(json);
        } catch (const Json::parse_error& e) {
            throw ghal::ParseError(e.what());
        }
        *out = new ghal_complex{ghal::io::complex_from_json(j, a->algebra)};
    });
}

ghal_status ghal_complex_load(const ghal_algebra* a, const char* path, ghal_complex** out) {
    return guarded([&] {
        require(a, "algebra");
        require(path, "path");
        require(out, "out");
        *out = new ghal_complex{ghal::io::complex_from_json(ghal::io::read_json_file(path), a->algebra)};
    });
}

ghal_status ghal_complex_concentrated(const ghal_module* m, int degree, ghal_complex** out) {
    return guarded([&] {
        require(m, "module");
        require(out, "out");
        *out = new ghal_complex{ghal::ChainComplex::concentrated(m->module, degree)};
    });
}

ghal_status ghal_complex_to_json(const ghal_complex* x, char** out) {
    return guarded([&] {
        require(x, "complex");
        require(out, "out");
        emit(out, ghal::io::complex_to_json(x->complex));
    });
}

ghal_status ghal_complex_save(const ghal_complex* x, const char* path) {
    return guarded([&] {
        require(x, "complex");
        require(path, "path");
        ghal::io::write_json_file(path, ghal::io::complex_to_json(x->complex));
    });
}

void ghal_complex_free(ghal_complex* x) { delete x; }

ghal_status ghal_ext_dim(const ghal_module* m, const ghal_module* n, size_t degree, size_t* out) {
    return guarded([&] {
        require(m, "module");
        require(n, "module");
        require(out, "out");
        ghal::require_same_algebra(m->module, n->module, "ext");
        *out = ghal::ext_space(m->module, n->module, degree).dim;
    });
}

ghal_status ghal_resolve(const ghal_module* m, size_t length, char** report) {
    return guarded([&] {
        require(m, "module");
        require(report, "report");
        ghal::Resolution r = ghal::resolution(m->module, length);
        Json ranks = Json::array(), syz = Json::array();
        for (std::size_t i = 0; i <= r.length(); ++i) {
            ranks.push_back(r.rank(i));
            syz.push_back(r.steps[i].syzygy.dim());
        }
        emit(report, {{"length", r.length()}, {"ranks", ranks}, {"syzygy_dims", syz}, {"exact", ghal::is_exact(r)}});
    });
}

ghal_status ghal_syzygy(const ghal_module* m, size_t j, ghal_module** out) {
    return guarded([&] {
        require(m, "module");
        require(out, "out");
        *out = new ghal_module{ghal::syzygy(m->module, j)};
    });
}

ghal_status ghal_proj_dim(const ghal_module* m, size_t bound, int* out) {
    return guarded([&] {
        require(m, "module");
        require(out, "out");
        auto pd = ghal::proj_dim_upto(m->module, bound);
        *out = pd ? int(*pd) : -1;
    });
}

ghal_status ghal_gp_test(const ghal_module* m, size_t gdim, char** report) {
    return guarded([&] {
        require(m, "module");
        require(report, "report");
        auto cert = ghal::is_gorenstein_projective(context(m->module, gdim), m->module);
        emit(report, {{"gorenstein_projective", cert.gorenstein_projective}, {"ext_dims", cert.ext_dims}, {"gdim", gdim}});
    });
}

ghal_status ghal_cosyzygy(const ghal_module* m, size_t gdim, ghal_module** out) {
    return guarded([&] {
        require(m, "module");
        require(out, "out");
        *out = new ghal_module{ghal::cosyzygy(context(m->module, gdim), m->module).cokernel};
    });
}

ghal_status ghal_complete_resolution(const ghal_module* m, size_t gdim, size_t window, ghal_complex** out,
                                     char** report) {
    return guarded([&] {
        require(m, "module");
        auto ctx = context(m->module, gdim);
        auto t = ghal::complete_resolution(ctx, m->module, window);
        if (auto err = ghal::validate_window(ctx, t)) throw ghal::InconsistencyError("window: " + *err);
        ghal::ChainComplex x = ghal::window_complex(t);
        Json ranks = Json::array(), cycles = Json::array();
        for (const auto& c : t.components) ranks.push_back(c.dim());
        for (const auto& z : t.cycles) cycles.push_back(z.dim());
        emit(report, {{"lo", t.lo},
                      {"hi", t.hi},
                      {"splice_degree", t.splice_degree},
                      {"component_dims", ranks},
                      {"cycle_dims", cycles},
                      {"zero", t.is_zero()}});
        if (out) *out = new ghal_complex{x};
    });
}

ghal_status ghal_gp_approximation(const ghal_module* m, size_t gdim, ghal_module** gp, char** report) {
    return guarded([&] {
        require(m, "module");
        auto ap = ghal::gp_approximation(context(m->module, gdim), m->module);
        emit(report, {{"gp_dim", ap.gp.dim()}, {"kernel_dim", ap.kernel.dim()}, {"kernel_pd", ap.kernel_pd}});
        if (gp) *gp = new ghal_module{ap.gp};
    });
}

ghal_status ghal_fpd_hull(const ghal_module* m, size_t gdim, ghal_module** hull, char** report) {
    return guarded([&] {
        require(m, "module");
        auto h = ghal::fpd_hull(context(m->module, gdim), m->module);
        emit(report, {{"hull_dim", h.hull.dim()}, {"cokernel_dim", h.cokernel.dim()}, {"hull_pd", h.hull_pd}});
        if (hull) *hull = new ghal_module{h.hull};
    });
}

ghal_status ghal_stable_hom(const ghal_module* m, const ghal_module* n, char** report) {
    return guarded([&] {
        require(m, "module");
        require(n, "module");
        require(report, "report");
        auto s = ghal::stable_hom(m->module, n->module);
        emit(report, {{"dim", s.dim()}, {"hom_dim", s.full_dim()}, {"factoring_dim", s.factoring_dim()}});
    });
}

ghal_status ghal_stable_iso(const ghal_module* m, const ghal_module* n, size_t gdim, size_t cap, char** report) {
    return guarded([&] {
        require(m, "module");
        require(n, "module");
        require(report, "report");
        auto r = ghal::stable_iso_check(context(m->module, gdim), m->module, n->module, cap);
        Json j = {{"verdict", ghal::to_string(r.verdict)}, {"candidates", r.candidates}, {"reason", r.reason}};
        if (r.forward) j["forward"] = ghal::io::matrix_to_json(r.forward->matrix);
        if (r.backward) j["backward"] = ghal::io::matrix_to_json(r.backward->matrix);
        emit(report, j);
    });
}

ghal_status ghal_realize_module(const ghal_module* m, size_t gdim, size_t window, ghal_module** out, char** report) {
    return guarded([&] {
        require(m, "module");
        auto ctx = context(m->module, gdim);
        auto t = ghal::complete_resolution(ctx, m->module, std::max(window, gdim));
        ghal::Module z = t.is_zero() ? ghal::zero_module(m->module.algebra()) : t.cycle(0);
        emit(report, {{"dim", z.dim()}, {"stable_dim_end", ghal::stable_hom(z, z).dim()}});
        if (out) *out = new ghal_module{z};
    });
}

ghal_status ghal_realize_complex(const ghal_complex* x, size_t gdim, ghal_stabilization variant, ghal_module** out,
                                 char** report) {
    return guarded([&] {
        require(x, "complex");
        ghal::GorensteinContext ctx(x->complex.algebra(), gdim);
        auto v = variant == GHAL_STABILIZATION_RIGHT ? ghal::Stabilization::Right : ghal::Stabilization::Left;
        ghal::Module z = ghal::realize_complex(ctx, x->complex, v).module;
        emit(report, {{"dim", z.dim()},
                      {"stable_dim_end", ghal::stable_hom(z, z).dim()},
                      {"variant", v == ghal::Stabilization::Right ? "right" : "left"}});
        if (out) *out = new ghal_module{z};
    });
}

ghal_status ghal_complex_check(const ghal_complex* x, const char* what, const char* oracle, int tilde, size_t gdim,
                               const ghal_complex* other, char** report) {
    return guarded([&] {
        require(x, "complex");
        require(what, "what");
        require(report, "report");
        const ghal::ChainComplex& c = x->complex;
        ghal::GorensteinContext ctx(c.algebra(), gdim);
        const std::string w = what;
        Json j = {{"check", w}, {"lo", c.lo()}, {"hi", c.hi()}};
        if (w == "validate") {
            auto err = ghal::validate_complex(c);
            j["valid"] = !err;
            if (err) j["violation"] = *err;
        } else if (w == "acyclic") {
            Json h = Json::array();
            for (int n = c.lo(); n <= c.hi(); ++n) h.push_back(ghal::homology(c, n));
            j["homology_dims"] = h;
            j["acyclic"] = ghal::is_acyclic(c);
        } else if (w == "contractible") {
            auto r = ghal::is_contractible(c);
            j["contractible"] = r.contractible;
            j["acyclic"] = r.acyclic;
            j["split_test"] = r.split_test;
            j["homotopy_test"] = r.homotopy_test;
            j["reason"] = r.reason;
        } else if (w == "class") {
            auto o = oracle_of(oracle, ctx);
            j["oracle"] = o.name();
            j["kind"] = tilde ? "tilde" : "dw";
            j["member"] = ghal::class_membership(c, o, tilde ? ghal::ClassKind::Tilde : ghal::ClassKind::Degreewise);
        } else if (w == "dg") {
            auto left = oracle_of(oracle, ctx);
            auto right = right_partner(left, ctx);
            std::vector<ghal::Module> mods{ghal::free_module(c.algebra(), 1)};
            for (const auto& m : c.components())
                if (right(m)) mods.push_back(m);
            std::vector<ghal::ChainComplex> acyclic;
            if (other) acyclic.push_back(other->complex);
            auto family = ghal::standard_family(mods, acyclic, c.lo(), c.hi());
            auto r = ghal::dg_test(c, left, right, family);
            j["left"] = left.name();
            j["right"] = right.name();
            j["family_size"] = family.size();
            j["pass"] = r.pass;
            j["reason"] = r.reason;
            if (r.failing_degree) j["failing_degree"] = *r.failing_degree;
            if (r.witness) {
                j["witness"] = *r.witness;
                j["witness_complex"] = ghal::io::complex_to_json(family[*r.witness]);
                Json maps = Json::array();
                for (const auto& f : r.witness_map) maps.push_back(ghal::io::matrix_to_json(f));
                j["witness_map"] = {{"lo", r.witness_lo}, {"components", maps}};
            }
        } else if (w == "homotopy") {
            if (!other) throw ghal::InvalidArgument("homotopy check needs a target complex");
            auto h = ghal::homotopy_classes(c, other->complex);
            j["chain_maps"] = h.chain_maps;
            j["nullhomotopic"] = h.nullhomotopic;
            j["quotient"] = h.quotient;
        } else {
            throw ghal::InvalidArgument("unknown complex check " + w);
        }
        emit(report, j);
    });
}

ghal_status ghal_witness_weak_triviality(const ghal_complex* x, size_t gdim, ghal_complex** f, ghal_complex** c,
                                         char** report) {
    return guarded([&] {
        require(x, "complex");
        ghal::GorensteinContext ctx(x->complex.algebra(), gdim);
        auto w = ghal::witness_weak_triviality(ctx, x->complex);
        auto err = ghal::verify_weak_triviality(ctx, x->complex, w);
        Json j = {{"f_lo", w.f.lo()}, {"f_dims", dims_of(w.f)}, {"c_lo", w.c.lo()}, {"c_dims", dims_of(w.c)},
                  {"verified", !err}};
        if (err) j["problem"] = *err;
        emit(report, j);
        if (f) *f = new ghal_complex{w.f};
        if (c) *c = new ghal_complex{w.c};
    });
}

ghal_status ghal_write_corpus(const char* dir) {
    return guarded([&] {
        require(dir, "dir");
        ghal::verify::write_corpus(dir);
    });
}

ghal_status ghal_verify(const char* corpus_dir, const char* suite, char** report) {
    return guarded([&] {
        require(corpus_dir, "corpus_dir");
        require(suite, "suite");
        require(report, "report");
        auto corpus = ghal::verify::load_corpus(corpus_dir);
        emit(report, ghal::verify::run_suite(corpus, suite, utc_now()));
    });
}

}  // extern "C"
