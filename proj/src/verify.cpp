#include "ghal/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>

#include "ghal/corpus.hpp"

namespace ghal::verify {

namespace fs = std::filesystem;
using io::Json;

namespace {

std::string file_stem(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '/', '_');
    return s;
}

struct Record {
    std::string check;
    std::string anchor;
    std::string input;
    std::string digest;
    bool pass = false;
    Json details = Json::object();
};

Json to_json(const Record& r) {
    return {{"check", r.check},   {"anchor", r.anchor},
            {"input", r.input},   {"input_digest", r.digest},
            {"verdict", r.pass ? "pass" : "fail"}, {"details", r.details}};
}

class Runner {
public:
    explicit Runner(const Corpus& c) : corpus_(c) {}

    void contractibility();
    void frobenius_shift();
    void realization();
    void classes();

    std::vector<Record> take() { return std::move(records_); }

private:
    /// Runs `body`, which fills details and returns the verdict; library errors become failures.
    void record(const std::string& check, const std::string& anchor, const std::string& input,
                const std::string& digest, const std::function<bool(Json&)>& body) {
        Record r{check, anchor, input, digest};
        try {
            r.pass = body(r.details);
        } catch (const Error& e) {
            r.pass = false;
            r.details["error"] = e.what();
        }
        records_.push_back(std::move(r));
    }

    GorensteinContext context(const std::string& algebra) const {
        const auto& a = corpus_.algebra(algebra);
        return GorensteinContext(a.algebra, a.gdim);
    }

    std::vector<Module> modules_over(const std::string& algebra) const {
        std::vector<Module> out;
        for (const auto& m : corpus_.modules)
            if (m.algebra == algebra) out.push_back(m.module);
        return out;
    }

    std::vector<ChainComplex> acyclic_over(const std::string& algebra) const {
        std::vector<ChainComplex> out;
        for (const auto& c : corpus_.complexes)
            if (c.algebra == algebra && !c.complex.is_zero() && is_acyclic(c.complex)) out.push_back(c.complex);
        return out;
    }

    bool finite_global_dimension(const std::string& algebra) const {
        auto ctx = context(algebra);
        for (const auto& m : modules_over(algebra))
            if (!proj_dim_upto(m, ctx.d)) return false;
        return true;
    }

    static bool iso(const GorensteinContext& ctx, const Module& a, const Module& b, Json& d, const char* key) {
        auto r = stable_iso_check(ctx, a, b);
        d[key] = to_string(r.verdict);
        return r.verdict == StableIsoVerdict::Isomorphic;
    }

    const Corpus& corpus_;
    std::vector<Record> records_;
};

void Runner::contractibility() {
    for (const auto& c : corpus_.complexes) {
        record("contractibility-agreement", "contractible iff every syzygy sequence splits", c.name, c.digest,
               [&](Json& d) {
                   ContractibilityResult r = is_contractible(c.complex);
                   d["acyclic"] = r.acyclic;
                   d["split_test"] = r.split_test;
                   d["homotopy_test"] = r.homotopy_test;
                   d["contractible"] = r.contractible;
                   return r.contractible == r.homotopy_test && (!r.acyclic || r.split_test == r.homotopy_test);
               });
    }
}

void Runner::frobenius_shift() {
    for (const auto& a : corpus_.algebras) {
        record("core-self-orthogonal", "Ext^1 vanishes between projectives", a.name, a.digest, [&](Json& d) {
            Module f = free_module(a.algebra, 1), g = free_module(a.algebra, 2);
            std::size_t e = ext_space(f, g, 1).dim + ext_space(g, f, 1).dim;
            d["ext1_dim"] = e;
            return e == 0;
        });
    }
    for (const auto& m : corpus_.modules) {
        auto ctx = context(m.algebra);
        if (!is_gorenstein_projective(ctx, m.module).gorenstein_projective) continue;
        record("shift-cosyzygy-then-syzygy", "syzygy inverts cosyzygy stably", m.name, m.digest, [&](Json& d) {
            Module back = syzygy(cosyzygy(ctx, m.module).cokernel, 1);
            return iso(ctx, back, m.module, d, "verdict");
        });
        record("shift-syzygy-then-cosyzygy", "cosyzygy inverts syzygy stably", m.name, m.digest, [&](Json& d) {
            Module back = cosyzygy(ctx, syzygy(m.module, 1)).cokernel;
            return iso(ctx, back, m.module, d, "verdict");
        });
    }
    for (const auto& m : corpus_.modules) {
        auto ctx = context(m.algebra);
        record("right-stabilization-module", "right stabilization is the suspension of the left", m.name, m.digest,
               [&](Json& d) {
                   ChainComplex x = ChainComplex::concentrated(m.module, 0);
                   Module left = realize_complex(ctx, x).module;
                   Module right = realize_complex(ctx, x, Stabilization::Right).module;
                   d["left_dim"] = left.dim();
                   d["right_dim"] = right.dim();
                   return iso(ctx, right, cosyzygy(ctx, left).cokernel, d, "verdict");
               });
    }
    for (const auto& c : corpus_.complexes) {
        auto ctx = context(c.algebra);
        record("right-stabilization-complex", "right stabilization is the suspension of the left", c.name, c.digest,
               [&](Json& d) {
                   Module left = realize_complex(ctx, c.complex).module;
                   Module right = realize_complex(ctx, c.complex, Stabilization::Right).module;
                   return iso(ctx, right, cosyzygy(ctx, left).cokernel, d, "verdict");
               });
        record("suspension-realization", "realization carries suspension to cosyzygy", c.name, c.digest,
               [&](Json& d) {
                   Module rx = realize_complex(ctx, c.complex).module;
                   Module rs = realize_complex(ctx, suspension(c.complex)).module;
                   return iso(ctx, rs, cosyzygy(ctx, rx).cokernel, d, "verdict");
               });
    }
}

void Runner::realization() {
    for (const auto& m : corpus_.modules) {
        auto ctx = context(m.algebra);
        record("realization-approximation", "realization agrees with the Gorenstein-projective approximation", m.name,
               m.digest, [&](Json& d) {
                   Module r = realize_module(ctx, m.module).module;
                   Module g = gp_approximation(ctx, m.module).gp;
                   d["realized_dim"] = r.dim();
                   d["approximation_dim"] = g.dim();
                   d["stable_dim_end"] = stable_hom(r, r).dim();
                   return iso(ctx, r, g, d, "verdict");
               });
        record("realization-degree-zero", "realization of a module placed in degree zero", m.name, m.digest,
               [&](Json& d) {
                   Module r = realize_complex(ctx, ChainComplex::concentrated(m.module, 0)).module;
                   Module g = gp_approximation(ctx, m.module).gp;
                   return iso(ctx, r, g, d, "verdict");
               });
        record("approximation-certificate", "0 -> K -> G -> M -> 0 with G Gorenstein projective and pd K <= d",
               m.name, m.digest, [&](Json& d) {
                   GPApproximation ap = gp_approximation(ctx, m.module);
                   const bool onto = rank(ap.projection.matrix) == m.module.dim();
                   const bool into = rank(ap.kernel_inclusion.matrix) == ap.kernel.dim();
                   const bool zero = (ap.projection.matrix * ap.kernel_inclusion.matrix).is_zero();
                   const bool dims = ap.kernel.dim() + m.module.dim() == ap.gp.dim();
                   const bool gp = is_gorenstein_projective(ctx, ap.gp).gorenstein_projective;
                   auto pd = proj_dim_upto(ap.kernel, ctx.d);
                   d["gp_dim"] = ap.gp.dim();
                   d["kernel_dim"] = ap.kernel.dim();
                   d["exact"] = onto && into && zero && dims;
                   d["gorenstein_projective"] = gp;
                   d["kernel_pd"] = pd ? Json(*pd) : Json("exceeds bound");
                   return onto && into && zero && dims && gp && pd.has_value();
               });
    }
    for (const auto& a : corpus_.algebras) {
        if (!finite_global_dimension(a.name)) continue;
        auto ctx = context(a.name);
        for (const auto& m : corpus_.modules) {
            if (m.algebra != a.name) continue;
            record("stable-zero-module", "the stable category vanishes in finite global dimension", m.name, m.digest,
                   [&](Json& d) {
                       Module r = realize_module(ctx, m.module).module;
                       std::size_t e = stable_hom(r, r).dim();
                       d["stable_dim_end"] = e;
                       return e == 0;
                   });
        }
        for (const auto& c : corpus_.complexes) {
            if (c.algebra != a.name) continue;
            record("stable-zero-complex", "the stable category vanishes in finite global dimension", c.name, c.digest,
                   [&](Json& d) {
                       Module r = realize_complex(ctx, c.complex).module;
                       std::size_t e = stable_hom(r, r).dim();
                       d["stable_dim_end"] = e;
                       return e == 0;
                   });
        }
    }
    for (const auto& c : corpus_.complexes) {
        auto ctx = context(c.algebra);
        record("realization-splice-invariance", "realization does not depend on the splice degree", c.name, c.digest,
               [&](Json& d) {
                   Module a = realize_complex(ctx, c.complex).module;
                   Module b = realize_complex(ctx, c.complex, Stabilization::Left, 2).module;
                   d["realized_dim"] = a.dim();
                   return iso(ctx, a, b, d, "verdict");
               });
        record("realization-quasi-isomorphism", "realization is invariant under quasi-isomorphism", c.name, c.digest,
               [&](Json& d) {
                   const int bottom = c.complex.lo() - 2;
                   FreeReplacement fr = free_replacement(c.complex, bottom);
                   ChainComplex t = smart_truncation_above(fr.p, bottom + 1);
                   return iso(ctx, realize_complex(ctx, t).module, realize_complex(ctx, c.complex).module, d,
                              "verdict");
               });
    }
}

void Runner::classes() {
    const ClassOracle proj = ClassOracle::projective(), all = ClassOracle::all();
    for (const auto& c : corpus_.complexes) {
        const ChainComplex& x = c.complex;
        auto family = standard_family(modules_over(c.algebra), acyclic_over(c.algebra), x.lo(), x.hi());
        record("tilde-equals-dg-and-acyclic", "tilde class = dg class intersected with acyclic complexes", c.name,
               c.digest, [&](Json& d) {
                   DgTestResult r = dg_test(x, proj, all, family);
                   const bool tilde = class_membership(x, proj, ClassKind::Tilde);
                   const bool acyclic = is_acyclic(x);
                   d["tilde"] = tilde;
                   d["dg_pass"] = r.pass;
                   d["acyclic"] = acyclic;
                   d["family_size"] = family.size();
                   bool witness_ok = true;
                   if (!r.pass) {
                       if (r.failing_degree) {
                           d["failing_degree"] = *r.failing_degree;
                           witness_ok = !proj(x.component(*r.failing_degree));
                       } else if (r.witness) {
                           d["witness"] = *r.witness;
                           witness_ok = is_essential_chain_map(x, family[*r.witness], r.witness_lo, r.witness_map);
                       } else {
                           witness_ok = false;
                       }
                       d["witness_verified"] = witness_ok;
                   }
                   return tilde == (r.pass && acyclic) && witness_ok;
               });
        if (class_membership(x, proj, ClassKind::Degreewise)) {
            record("bounded-frees-dg", "bounded complexes of projectives pass the dg test", c.name, c.digest,
                   [&](Json& d) {
                       bool pass = dg_test(x, proj, all, family).pass;
                       std::size_t nonzero = 0;
                       for (const auto& a : acyclic_over(c.algebra))
                           if (homotopy_classes(x, a).quotient != 0) ++nonzero;
                       d["dg_pass"] = pass;
                       d["acyclic_targets_with_classes"] = nonzero;
                       return pass && nonzero == 0;
                   });
        }
        if (is_acyclic(x)) {
            auto ctx = context(c.algebra);
            record("weak-triviality-witness", "bounded acyclic complexes are weakly trivial", c.name, c.digest,
                   [&](Json& d) {
                       WeakTrivialityWitness w = witness_weak_triviality(ctx, x);
                       auto err = verify_weak_triviality(ctx, x, w);
                       Json fd = Json::array(), cd = Json::array();
                       for (const auto& m : w.f.components()) fd.push_back(m.dim());
                       for (const auto& m : w.c.components()) cd.push_back(m.dim());
                       d["f_dims"] = fd;
                       d["c_dims"] = cd;
                       if (err) d["problem"] = *err;
                       return !err;
                   });
        }
    }
}

}  // namespace

const CorpusAlgebra& Corpus::algebra(const std::string& name) const {
    for (const auto& a : algebras)
        if (a.name == name) return a;
    throw InvalidArgument("unknown corpus algebra " + name);
}

void write_corpus(const std::string& dir) {
    const fs::path root(dir);
    fs::create_directories(root / "algebras");
    fs::create_directories(root / "modules");
    fs::create_directories(root / "complexes");
    Json manifest = {{"format", "ghal-corpus"}, {"version", 1}};
    Json algs = Json::array(), mods = Json::array(), cxs = Json::array();
    for (const auto& a : corpus::algebras()) {
        Json j = io::algebra_to_json(*a.algebra);
        std::string file = "algebras/" + file_stem(a.name) + ".json";
        io::write_json_file((root / file).string(), j);
        algs.push_back({{"name", a.name}, {"file", file}, {"gdim", a.gdim}, {"digest", io::digest(j)}});
    }
    for (const auto& m : corpus::modules()) {
        Json j = io::module_to_json(m.module);
        std::string file = "modules/" + file_stem(m.name) + ".json";
        io::write_json_file((root / file).string(), j);
        mods.push_back({{"name", m.name}, {"algebra", m.algebra}, {"file", file}, {"digest", io::digest(j)}});
    }
    for (const auto& c : corpus::complexes()) {
        Json j = io::complex_to_json(c.complex);
        std::string file = "complexes/" + file_stem(c.name) + ".json";
        io::write_json_file((root / file).string(), j);
        cxs.push_back({{"name", c.name}, {"algebra", c.algebra}, {"file", file}, {"digest", io::digest(j)}});
    }
    manifest["algebras"] = algs;
    manifest["modules"] = mods;
    manifest["complexes"] = cxs;
    io::write_json_file((root / "manifest.json").string(), manifest);
}

Corpus load_corpus(const std::string& dir) {
    const fs::path root(dir);
    if (!fs::is_regular_file(root / "manifest.json")) throw ParseError("no corpus manifest in " + dir);
    Json manifest = io::read_json_file((root / "manifest.json").string());
    auto entries = [&](const char* key) -> const Json& {
        if (!manifest.contains(key) || !manifest.at(key).is_array()) {
            throw ParseError(std::string("manifest: missing array \"") + key + "\"");
        }
        return manifest.at(key);
    };
    auto text = [](const Json& e, const char* key) {
        if (!e.is_object() || !e.contains(key) || !e.at(key).is_string()) {
            throw ParseError(std::string("manifest entry without \"") + key + "\"");
        }
        return e.at(key).get<std::string>();
    };
    auto load = [&](const Json& e, const std::string& kind) {
        const std::string file = text(e, "file");
        Json j = io::read_json_file((root / file).string());
        if (io::digest(j) != text(e, "digest")) throw ParseError(kind + " " + file + ": digest mismatch");
        return j;
    };
    auto wrap = [](const std::string& where, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
    };

    Corpus c;
    for (const auto& e : entries("algebras")) {
        wrap(text(e, "name"), [&] {
            Json j = load(e, "algebra");
            if (!e.contains("gdim") || !e.at("gdim").is_number_unsigned()) throw ParseError("manifest: bad gdim");
            c.algebras.push_back({text(e, "name"), io::algebra_from_json(j), e.at("gdim").get<std::size_t>(), io::digest(j)});
        });
    }
    for (const auto& e : entries("modules")) {
        wrap(text(e, "name"), [&] {
            Json j = load(e, "module");
            const auto& a = c.algebra(text(e, "algebra"));
            c.modules.push_back({text(e, "name"), a.name, io::module_from_json(j, a.algebra), io::digest(j)});
        });
    }
    for (const auto& e : entries("complexes")) {
        wrap(text(e, "name"), [&] {
            Json j = load(e, "complex");
            const auto& a = c.algebra(text(e, "algebra"));
            c.complexes.push_back({text(e, "name"), a.name, io::complex_from_json(j, a.algebra), io::digest(j)});
        });
    }
    return c;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"frobenius-shift", "realization", "classes", "contractibility", "all"};
    return names;
}

Json run_suite(const Corpus& corpus, const std::string& suite, const std::string& timestamp) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw InvalidArgument("unknown suite " + suite);
    }
    Runner runner(corpus);
    const bool all = suite == "all";
    if (all || suite == "frobenius-shift") runner.frobenius_shift();
    if (all || suite == "realization") runner.realization();
    if (all || suite == "classes") runner.classes();
    if (all || suite == "contractibility") runner.contractibility();
    std::vector<Record> records = runner.take();
    std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.check, a.digest, a.input) < std::tie(b.check, b.digest, b.input);
    });

    Json inputs = Json::array();
    for (const auto& a : corpus.algebras) inputs.push_back({{"kind", "algebra"}, {"name", a.name}, {"digest", a.digest}});
    for (const auto& m : corpus.modules) inputs.push_back({{"kind", "module"}, {"name", m.name}, {"digest", m.digest}});
    for (const auto& x : corpus.complexes) inputs.push_back({{"kind", "complex"}, {"name", x.name}, {"digest", x.digest}});

    Json recs = Json::array();
    std::size_t passed = 0;
    for (const auto& r : records) {
        recs.push_back(to_json(r));
        if (r.pass) ++passed;
    }
    return {{"artifact_version", kVersion},
            {"generated_at", timestamp},
            {"suite", suite},
            {"inputs", inputs},
            {"records", recs},
            {"summary", {{"records", records.size()}, {"passed", passed}, {"failed", records.size() - passed}}},
            {"overall", passed == records.size() ? "pass" : "fail"}};
}

Json strip_timestamp(Json report) {
    report.erase("generated_at");
    return report;
}

}  // namespace ghal::verify
