#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ghal/verify.hpp"

using namespace ghal;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> body;
};

std::string corpus_path = GHAL_DEFAULT_CORPUS;
std::string cli_path = GHAL_CLI;

const verify::Corpus& corpus() {
    static const verify::Corpus c = verify::load_corpus(corpus_path);
    return c;
}

GorensteinContext context(const std::string& algebra) {
    const auto& a = corpus().algebra(algebra);
    return GorensteinContext(a.algebra, a.gdim);
}

const Module& corpus_module(const std::string& name) {
    for (const auto& m : corpus().modules)
        if (m.name == name) return m.module;
    throw InvalidArgument("no corpus module " + name);
}

bool stably_isomorphic(const GorensteinContext& ctx, const Module& a, const Module& b) {
    return stable_iso_check(ctx, a, b).verdict == StableIsoVerdict::Isomorphic;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path + "' " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome realization_equals_approximation() {
    std::size_t n = 0;
    for (const auto& m : corpus().modules) {
        auto ctx = context(m.algebra);
        Module z = realize_module(ctx, m.module).module;
        Module g = gp_approximation(ctx, m.module).gp;
        if (!stably_isomorphic(ctx, z, g)) return {false, m.name + ": realization differs from approximation"};
        Module c = realize_complex(ctx, ChainComplex::concentrated(m.module, 0)).module;
        if (!stably_isomorphic(ctx, c, g)) return {false, m.name + ": degree-0 complex realization differs"};
        ++n;
    }
    return {n >= 12, std::to_string(n) + " modules"};
}

Outcome finite_global_dimension_vanishes() {
    std::size_t n = 0;
    auto ctx = context("T2");
    for (const auto& m : corpus().modules) {
        if (m.algebra != "T2") continue;
        Module z = realize_module(ctx, m.module).module;
        if (stable_hom(z, z).dim() != 0) return {false, m.name + ": nonzero stable endomorphisms"};
        ++n;
    }
    return {n > 0, std::to_string(n) + " T2 modules realize to zero"};
}

Outcome shift_relation() {
    std::size_t modules = 0, complexes = 0;
    for (const char* alg : {"A2", "K4"}) {
        auto ctx = context(alg);
        for (const auto& m : corpus().modules) {
            if (m.algebra != alg || !is_gorenstein_projective(ctx, m.module).gorenstein_projective) continue;
            Module up_down = syzygy(cosyzygy(ctx, m.module).cokernel, 1);
            Module down_up = cosyzygy(ctx, syzygy(m.module, 1)).cokernel;
            if (!stably_isomorphic(ctx, up_down, m.module)) return {false, m.name + ": syzygy of cosyzygy"};
            if (!stably_isomorphic(ctx, down_up, m.module)) return {false, m.name + ": cosyzygy of syzygy"};
            Module left = realize_complex(ctx, ChainComplex::concentrated(m.module, 0), Stabilization::Left).module;
            Module right = realize_complex(ctx, ChainComplex::concentrated(m.module, 0), Stabilization::Right).module;
            if (!stably_isomorphic(ctx, right, cosyzygy(ctx, left).cokernel))
                return {false, m.name + ": right variant is not the suspension of the left"};
            ++modules;
        }
        for (const auto& c : corpus().complexes) {
            if (c.algebra != alg) continue;
            Module left = realize_complex(ctx, c.complex, Stabilization::Left).module;
            Module right = realize_complex(ctx, c.complex, Stabilization::Right).module;
            if (!stably_isomorphic(ctx, right, cosyzygy(ctx, left).cokernel))
                return {false, c.name + ": right variant is not the suspension of the left"};
            ++complexes;
        }
    }
    return {modules > 0 && complexes > 0,
            std::to_string(modules) + " GP modules, " + std::to_string(complexes) + " complexes"};
}

Outcome contractibility_agreement() {
    std::size_t n = 0, contractible = 0;
    for (const auto& c : corpus().complexes) {
        ContractibilityResult r = is_contractible(c.complex);
        if (r.split_test != r.homotopy_test) return {false, c.name + ": tests disagree"};
        if (r.contractible) ++contractible;
        ++n;
    }
    bool mixed = contractible > 0 && contractible < n;
    return {n >= 20 && mixed,
            std::to_string(n) + " complexes, " + std::to_string(contractible) + " contractible"};
}

Outcome tilde_equals_dg_and_acyclic() {
    std::size_t n = 0, failures = 0, discrepancies = 0;
    const ClassOracle proj = ClassOracle::projective(), all = ClassOracle::all();
    for (const auto& c : corpus().complexes) {
        const ChainComplex& x = c.complex;
        std::vector<Module> modules;
        std::vector<ChainComplex> acyclic;
        for (const auto& m : corpus().modules)
            if (m.algebra == c.algebra) modules.push_back(m.module);
        for (const auto& d : corpus().complexes)
            if (d.algebra == c.algebra && !d.complex.is_zero() && is_acyclic(d.complex)) acyclic.push_back(d.complex);
        auto family = standard_family(modules, acyclic, x.lo(), x.hi());
        for (const auto& d : family)
            if (!class_membership(d, all, ClassKind::Tilde)) return {false, c.name + ": family member not acyclic"};
        DgTestResult r = dg_test(x, proj, all, family);
        bool tilde = class_membership(x, proj, ClassKind::Tilde);
        if (tilde != (r.pass && is_acyclic(x))) ++discrepancies;
        if (!r.pass) {
            ++failures;
            bool verified = false;
            if (r.failing_degree) verified = !proj(x.component(*r.failing_degree));
            else if (r.witness) verified = is_essential_chain_map(x, family[*r.witness], r.witness_lo, r.witness_map);
            if (!verified) return {false, c.name + ": dg failure without a verified witness"};
        }
        ++n;
    }
    return {discrepancies == 0, std::to_string(n) + " complexes, " + std::to_string(discrepancies) +
                                    " discrepancies, " + std::to_string(failures) + " verified failures"};
}

Outcome approximation_certificates() {
    for (const auto& m : corpus().modules) {
        auto ctx = context(m.algebra);
        GPApproximation ap = gp_approximation(ctx, m.module);
        const std::size_t k = ap.kernel.dim(), g = ap.gp.dim(), dm = m.module.dim();
        bool exact = ap.projection.is_valid() && ap.kernel_inclusion.is_valid() && rank(ap.projection.matrix) == dm &&
                     rank(ap.kernel_inclusion.matrix) == k && g == k + dm &&
                     (ap.projection.matrix * ap.kernel_inclusion.matrix).is_zero();
        if (!exact) return {false, m.name + ": sequence not exact"};
        if (!is_gorenstein_projective(ctx, ap.gp).gorenstein_projective) return {false, m.name + ": G is not GP"};
        if (!proj_dim_upto(ap.kernel, ctx.d)) return {false, m.name + ": pd K exceeds d"};
        if (m.algebra == "T2" && !is_projective(ap.gp).projective) return {false, m.name + ": G not projective"};
    }
    auto ctx = context("A2");
    const Module& k = corpus_module("A2/k");
    GPApproximation ap = gp_approximation(ctx, k);
    if (ap.kernel.dim() != 0) return {false, "A2/k: K is nonzero"};
    if (ap.gp.dim() != 1 || !stably_isomorphic(ctx, ap.gp, k)) return {false, "A2/k: G is not k"};
    return {true, std::to_string(corpus().modules.size()) + " certificates"};
}

Outcome stable_hom_ledger() {
    const Module& k = corpus_module("A2/k");
    std::size_t end = stable_hom(k, k).dim();
    if (end != 1) return {false, "stable End(k) = " + std::to_string(end)};
    auto ext = ext_dimensions(k, k, 5);
    for (std::size_t i = 0; i <= 5; ++i)
        if (ext.at(i) != 1) return {false, "Ext^" + std::to_string(i) + "(k,k) = " + std::to_string(ext.at(i))};
    std::size_t omega = syzygy(corpus_module("K4/k"), 1).dim();
    if (omega != 3) return {false, "dim Omega k over K4 = " + std::to_string(omega)};
    return {true, "stable End(k) = 1, Ext^0..5(k,k) = 1, dim Omega k = 3"};
}

Outcome window_homotopy() {
    auto ctx = context("A2");
    const Module& k = corpus_module("A2/k");
    CompleteResolutionWindow s = complete_resolution(ctx, k, 3), t = complete_resolution(ctx, k, 3);
    ChainComplex sx = window_complex(s), tx = window_complex(t);
    std::size_t classes = homotopy_classes_on(sx, tx, s.lo + 1, s.hi - 1).quotient;
    std::size_t stable = stable_hom(s.cycle(0), t.cycle(0)).dim();
    return {classes == stable && stable == 1,
            "interior homotopy classes " + std::to_string(classes) + ", stable hom " + std::to_string(stable)};
}

Outcome witness_soundness() {
    std::size_t n = 0;
    for (const auto& c : corpus().complexes) {
        if (!is_acyclic(c.complex)) continue;
        auto ctx = context(c.algebra);
        WeakTrivialityWitness w = witness_weak_triviality(ctx, c.complex);
        if (auto err = verify_weak_triviality(ctx, c.complex, w)) return {false, c.name + ": " + *err};
        if (!class_membership(w.f, ClassOracle::finite_pd(ctx), ClassKind::Tilde))
            return {false, c.name + ": F not in tilde(finite pd)"};
        if (!class_membership(w.c, ClassOracle::gorenstein_projective(ctx), ClassKind::Tilde))
            return {false, c.name + ": C not in tilde(GP)"};
        if (!is_chain_map(c.complex, w.f, w.inclusion) || !is_chain_map(w.f, w.c, w.projection))
            return {false, c.name + ": maps are not chain maps"};
        ++n;
    }
    return {n > 0, std::to_string(n) + " acyclic complexes"};
}

Outcome determinism_and_round_trip() {
    fs::path dir = fs::temp_directory_path() / "ghal_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string corpus_arg = " --corpus '" + corpus_path + "'";
    fs::path r1 = dir / "r1.json", r2 = dir / "r2.json";
    if (run_cli("verify --suite all" + corpus_arg + " --out '" + r1.string() + "'") != 0 ||
        run_cli("verify --suite all" + corpus_arg + " --out '" + r2.string() + "'") != 0)
        return {false, "verify did not pass"};
    Json a = Json::parse(slurp(r1)), b = Json::parse(slurp(r2));
    if (verify::strip_timestamp(a).dump() != verify::strip_timestamp(b).dump()) return {false, "reports differ"};

    std::size_t files = 0;
    for (const auto& m : corpus().modules) {
        auto ctx = context(m.algebra);
        const std::string alg = " --algebra '" + corpus_path + "/algebras/" + m.algebra + ".json'";
        std::string file;
        for (char ch : m.name) file += ch == '/' ? '_' : ch;
        const std::string module_arg = " --module '" + corpus_path + "/modules/" + file + ".json'";
        const std::string gdim = " --gdim " + std::to_string(ctx.d);
        fs::path z = dir / (file + "_z.json"), g = dir / (file + "_g.json"), w = dir / (file + "_w.json");
        if (run_cli("realize" + alg + module_arg + gdim + " --out '" + z.string() + "'") != 0 ||
            run_cli("approx" + alg + module_arg + gdim + " --out '" + g.string() + "'") != 0 ||
            run_cli("complete-res" + alg + module_arg + gdim + " --window 2 --out '" + w.string() + "'") != 0)
            return {false, m.name + ": emitting files failed"};
        Module zr = io::module_from_json(io::read_json_file(z.string()), ctx.algebra);
        Module gr = io::module_from_json(io::read_json_file(g.string()), ctx.algebra);
        ChainComplex wr = io::complex_from_json(io::read_json_file(w.string()), ctx.algebra);
        if (zr != realize_module(ctx, m.module).module) return {false, m.name + ": realization file differs"};
        if (gr != gp_approximation(ctx, m.module).gp) return {false, m.name + ": approximation file differs"};
        if (wr != window_complex(complete_resolution(ctx, m.module, 2))) return {false, m.name + ": window differs"};
        if (stable_hom(zr, zr).dim() != stable_hom(gr, gr).dim()) return {false, m.name + ": downstream results differ"};
        files += 3;
    }
    for (const auto& c : corpus().complexes) {
        if (!is_acyclic(c.complex)) continue;
        auto ctx = context(c.algebra);
        std::string file;
        for (char ch : c.name) file += ch == '/' ? '_' : ch;
        fs::path f = dir / (file + "_f.json"), cc = dir / (file + "_c.json");
        if (run_cli("witness-w --algebra '" + corpus_path + "/algebras/" + c.algebra + ".json' --complex '" +
                    corpus_path + "/complexes/" + file + ".json' --gdim " + std::to_string(ctx.d) + " --out-f '" +
                    f.string() + "' --out-c '" + cc.string() + "'") != 0)
            return {false, c.name + ": witness-w failed"};
        WeakTrivialityWitness w = witness_weak_triviality(ctx, c.complex);
        if (io::complex_from_json(io::read_json_file(f.string()), ctx.algebra) != w.f ||
            io::complex_from_json(io::read_json_file(cc.string()), ctx.algebra) != w.c)
            return {false, c.name + ": witness files differ"};
        files += 2;
    }
    fs::path regenerated = dir / "corpus";
    if (run_cli("write-corpus --out '" + regenerated.string() + "'") != 0) return {false, "write-corpus failed"};
    verify::Corpus again = verify::load_corpus(regenerated.string());
    files += 1 + again.algebras.size() + again.modules.size() + again.complexes.size();
    fs::remove_all(dir);
    return {true, "identical reports, " + std::to_string(files) + " emitted files re-validated"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) corpus_path = argv[1];
    if (argc > 2) cli_path = argv[2];

    const std::vector<Criterion> criteria = {
        {1, "realization equals approximation", 5.0, realization_equals_approximation},
        {2, "stable zero in finite global dimension", 1.0, finite_global_dimension_vanishes},
        {3, "shift relation", 2.0, shift_relation},
        {4, "contractibility agreement", 1.0, contractibility_agreement},
        {5, "tilde equals dg and acyclic", 2.0, tilde_equals_dg_and_acyclic},
        {6, "approximation certificates", 1.0, approximation_certificates},
        {7, "stable hom ledger", 1.0, stable_hom_ledger},
        {8, "window homotopy equals stable hom", 1.0, window_homotopy},
        {9, "witness soundness", 1.0, witness_soundness},
        {10, "determinism and round trip", 10.0, determinism_and_round_trip},
    };

    try {
        corpus();
    } catch (const std::exception& e) {
        std::cerr << "cannot load corpus " << corpus_path << ": " << e.what() << "\n";
        return 2;
    }

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < c.limit_seconds;
        bool pass = o.pass && in_time;
        if (!pass) ++failed;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", secs, c.limit_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " [" << timing << "] " << o.detail
                  << (in_time ? "" : " (over time limit)") << "\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
