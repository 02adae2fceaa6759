#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ghal/ghal.h"

#ifndef GHAL_DEFAULT_CORPUS
#define GHAL_DEFAULT_CORPUS "corpus"
#endif

namespace {

using Json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Failure {
    ghal_status status;
    std::string message;
};

int exit_code(ghal_status s) {
    switch (s) {
        case GHAL_OK: return kOk;
        case GHAL_ERR_CERTIFICATE:
        case GHAL_ERR_INCONSISTENCY:
        case GHAL_ERR_INTERNAL: return kCheckFailed;
        default: return kInputError;
    }
}

void check(ghal_status s) {
    if (s != GHAL_OK) throw Failure{s, ghal_last_error()};
}

struct AlgebraDeleter {
    void operator()(ghal_algebra* a) const { ghal_algebra_free(a); }
};
struct ModuleDeleter {
    void operator()(ghal_module* m) const { ghal_module_free(m); }
};
struct ComplexDeleter {
    void operator()(ghal_complex* x) const { ghal_complex_free(x); }
};
using AlgebraHandle = std::unique_ptr<ghal_algebra, AlgebraDeleter>;
using ModuleHandle = std::unique_ptr<ghal_module, ModuleDeleter>;
using ComplexHandle = std::unique_ptr<ghal_complex, ComplexDeleter>;

Json take(char* s) {
    std::string text(s);
    ghal_string_free(s);
    return Json::parse(text);
}

struct Options {
    std::string algebra, module, of_module, complex, other, out, out_f, out_c, format = "json";
    std::string suite = "all", corpus = GHAL_DEFAULT_CORPUS, variant = "left", oracle = "projective", check_name;
    std::size_t gdim = 0, window = 0, bound = 10, degree = 1, cap = 10000;
    bool tilde = false;
};

class Session {
public:
    explicit Session(const Options& o) : opt_(o) {}

    ghal_algebra* algebra() {
        if (!algebra_) {
            need(opt_.algebra, "--algebra");
            ghal_algebra* a = nullptr;
            check(ghal_algebra_load(opt_.algebra.c_str(), &a));
            algebra_.reset(a);
        }
        return algebra_.get();
    }

    ModuleHandle module(const std::string& path, const char* flag) {
        need(path, flag);
        ghal_module* m = nullptr;
        check(ghal_module_load(algebra(), path.c_str(), &m));
        return ModuleHandle(m);
    }

    ComplexHandle complex(const std::string& path, const char* flag) {
        need(path, flag);
        ghal_complex* x = nullptr;
        check(ghal_complex_load(algebra(), path.c_str(), &x));
        return ComplexHandle(x);
    }

    static void need(const std::string& v, const char* flag) {
        if (v.empty()) throw Failure{GHAL_ERR_INVALID_ARGUMENT, std::string("missing required option ") + flag};
    }

private:
    const Options& opt_;
    AlgebraHandle algebra_;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// Writes the module to --out, or embeds it in the printed report.
void deliver_module(const Options& o, ghal_module* m, Json& report) {
    if (!o.out.empty()) {
        check(ghal_module_save(m, o.out.c_str()));
        report["module_file"] = o.out;
    } else {
        char* s = nullptr;
        check(ghal_module_to_json(m, &s));
        report["module"] = take(s);
    }
}

void deliver_complex(const std::string& path, ghal_complex* x, Json& report, const char* key) {
    if (!path.empty()) {
        check(ghal_complex_save(x, path.c_str()));
        report[std::string(key) + "_file"] = path;
    } else {
        char* s = nullptr;
        check(ghal_complex_to_json(x, &s));
        report[key] = take(s);
    }
}

int run(const std::string& cmd, const Options& o) {
    Session s(o);
    char* rep = nullptr;
    if (cmd == "ext") {
        auto m = s.module(o.module, "--module");
        auto n = s.module(o.of_module, "--of-module");
        std::size_t dim = 0;
        check(ghal_ext_dim(m.get(), n.get(), o.degree, &dim));
        print({{"dim", dim}, {"degree", o.degree}});
    } else if (cmd == "resolve") {
        auto m = s.module(o.module, "--module");
        check(ghal_resolve(m.get(), o.degree, &rep));
        print(take(rep));
    } else if (cmd == "syzygy") {
        auto m = s.module(o.module, "--module");
        ghal_module* out = nullptr;
        check(ghal_syzygy(m.get(), o.degree, &out));
        ModuleHandle h(out);
        std::size_t dim = 0;
        check(ghal_module_dim(out, &dim));
        Json j = {{"dim", dim}, {"degree", o.degree}};
        deliver_module(o, out, j);
        print(j);
    } else if (cmd == "pd") {
        auto m = s.module(o.module, "--module");
        int pd = 0;
        check(ghal_proj_dim(m.get(), o.bound, &pd));
        print({{"pd", pd >= 0 ? Json(pd) : Json("exceeds bound")}, {"bound", o.bound}});
    } else if (cmd == "gp-test") {
        auto m = s.module(o.module, "--module");
        check(ghal_gp_test(m.get(), o.gdim, &rep));
        print(take(rep));
    } else if (cmd == "cosyzygy") {
        auto m = s.module(o.module, "--module");
        ghal_module* out = nullptr;
        check(ghal_cosyzygy(m.get(), o.gdim, &out));
        ModuleHandle h(out);
        std::size_t dim = 0;
        check(ghal_module_dim(out, &dim));
        Json j = {{"dim", dim}};
        deliver_module(o, out, j);
        print(j);
    } else if (cmd == "complete-res") {
        auto m = s.module(o.module, "--module");
        ghal_complex* out = nullptr;
        check(ghal_complete_resolution(m.get(), o.gdim, o.window, &out, &rep));
        ComplexHandle h(out);
        Json j = take(rep);
        if (!o.out.empty()) deliver_complex(o.out, out, j, "complex");
        print(j);
    } else if (cmd == "approx") {
        auto m = s.module(o.module, "--module");
        ghal_module* out = nullptr;
        check(ghal_gp_approximation(m.get(), o.gdim, &out, &rep));
        ModuleHandle h(out);
        Json j = take(rep);
        deliver_module(o, out, j);
        print(j);
    } else if (cmd == "hull") {
        auto m = s.module(o.module, "--module");
        ghal_module* out = nullptr;
        check(ghal_fpd_hull(m.get(), o.gdim, &out, &rep));
        ModuleHandle h(out);
        Json j = take(rep);
        deliver_module(o, out, j);
        print(j);
    } else if (cmd == "stable-hom") {
        auto m = s.module(o.module, "--module");
        auto n = s.module(o.of_module, "--of-module");
        check(ghal_stable_hom(m.get(), n.get(), &rep));
        print(take(rep));
    } else if (cmd == "stable-iso") {
        auto m = s.module(o.module, "--module");
        auto n = s.module(o.of_module, "--of-module");
        check(ghal_stable_iso(m.get(), n.get(), o.gdim, o.cap, &rep));
        print(take(rep));
    } else if (cmd == "realize") {
        auto m = s.module(o.module, "--module");
        ghal_module* out = nullptr;
        check(ghal_realize_module(m.get(), o.gdim, o.window, &out, &rep));
        ModuleHandle h(out);
        Json j = take(rep);
        deliver_module(o, out, j);
        print(j);
    } else if (cmd == "realize-complex") {
        auto x = s.complex(o.complex, "--complex");
        ghal_module* out = nullptr;
        auto v = o.variant == "right" ? GHAL_STABILIZATION_RIGHT : GHAL_STABILIZATION_LEFT;
        check(ghal_realize_complex(x.get(), o.gdim, v, &out, &rep));
        ModuleHandle h(out);
        Json j = take(rep);
        deliver_module(o, out, j);
        print(j);
    } else if (cmd == "complex-check") {
        auto x = s.complex(o.complex, "--complex");
        ComplexHandle other;
        if (!o.other.empty()) other = s.complex(o.other, "--other");
        check(ghal_complex_check(x.get(), o.check_name.c_str(), o.oracle.c_str(), o.tilde ? 1 : 0, o.gdim, other.get(),
                                 &rep));
        print(take(rep));
    } else if (cmd == "witness-w") {
        auto x = s.complex(o.complex, "--complex");
        ghal_complex *f = nullptr, *c = nullptr;
        check(ghal_witness_weak_triviality(x.get(), o.gdim, &f, &c, &rep));
        ComplexHandle hf(f), hc(c);
        Json j = take(rep);
        deliver_complex(o.out_f, f, j, "f");
        deliver_complex(o.out_c, c, j, "c");
        print(j);
        if (!j.at("verified").get<bool>()) return kCheckFailed;
    } else if (cmd == "verify") {
        check(ghal_verify(o.corpus.c_str(), o.suite.c_str(), &rep));
        Json j = take(rep);
        const std::string text = j.dump(2) + "\n";
        if (o.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(o.out);
            f << text;
            if (!f) throw Failure{GHAL_ERR_IO, "cannot write " + o.out};
        }
        if (j.at("overall") != "pass") return kCheckFailed;
    } else if (cmd == "write-corpus") {
        Session::need(o.out, "--out");
        check(ghal_write_corpus(o.out.c_str()));
        print({{"corpus", o.out}});
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ghal: exact homological algebra over finite-dimensional algebras"};
    app.set_version_flag("--version", std::string(ghal_version()));
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--algebra", o.algebra, "algebra JSON file");
    app.add_option("--module", o.module, "module JSON file");
    app.add_option("--complex", o.complex, "complex JSON file");
    app.add_option("--gdim", o.gdim, "declared Gorenstein dimension d");
    app.add_option("--window", o.window, "complete resolution window radius");
    app.add_option("--bound", o.bound, "projective dimension search bound");
    app.add_option("--degree", o.degree, "Ext degree, syzygy power or resolution length");
    app.add_option("--out", o.out, "output file");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json"}));

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"ext", "dim Ext^degree(module, of-module)"},
        {"resolve", "free resolution of length --degree"},
        {"syzygy", "Omega^degree of the module"},
        {"pd", "projective dimension up to --bound"},
        {"gp-test", "Gorenstein-projective test"},
        {"cosyzygy", "cosyzygy of a Gorenstein-projective module"},
        {"complete-res", "complete resolution window"},
        {"approx", "Gorenstein-projective approximation"},
        {"hull", "hull of finite projective dimension"},
        {"stable-hom", "stable Hom dimension"},
        {"stable-iso", "stable isomorphism test"},
        {"realize", "realization of a module"},
        {"realize-complex", "realization of a bounded complex"},
        {"complex-check", "validate, acyclic, contractible, class, dg or homotopy"},
        {"witness-w", "weak triviality witness for a bounded acyclic complex"},
        {"verify", "run a verification suite over the corpus"},
        {"write-corpus", "write the bundled corpus to --out"},
    };
    for (const auto& sp : specs) {
        CLI::App* sub = app.add_subcommand(sp.name, sp.help);
        const std::string name = sp.name;
        if (name == "ext" || name == "stable-hom" || name == "stable-iso") {
            sub->add_option("--of-module", o.of_module, "second module JSON file");
        }
        if (name == "stable-iso") sub->add_option("--cap", o.cap, "enumeration cap");
        if (name == "realize-complex") {
            sub->add_option("--variant", o.variant, "left or right stabilization")->check(CLI::IsMember({"left", "right"}));
        }
        if (name == "complex-check") {
            sub->add_option("check", o.check_name, "check to run")
                ->required()
                ->check(CLI::IsMember({"validate", "acyclic", "contractible", "class", "dg", "homotopy"}));
            sub->add_option("--oracle", o.oracle, "class oracle")
                ->check(CLI::IsMember({"projective", "gorenstein-projective", "finite-pd", "all"}));
            sub->add_flag("--tilde", o.tilde, "tilde class instead of degreewise");
            sub->add_option("--other", o.other, "target or extra family complex JSON file");
        }
        if (name == "witness-w") {
            sub->add_option("--out-f", o.out_f, "output file for F");
            sub->add_option("--out-c", o.out_c, "output file for C");
        }
        if (name == "verify") {
            sub->add_option("--suite", o.suite, "suite name")
                ->check(CLI::IsMember({"frobenius-shift", "realization", "classes", "contractibility", "all"}));
            sub->add_option("--corpus", o.corpus, "corpus directory");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, o);
    } catch (const Failure& f) {
        std::cerr << "ghal: " << ghal_status_name(f.status) << ": " << f.message << "\n";
        return exit_code(f.status);
    } catch (const Json::exception& e) {
        std::cerr << "ghal: internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}
