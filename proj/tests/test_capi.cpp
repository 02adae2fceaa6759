#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <memory>
#include <string>

#include "ghal/ghal.h"
#include "json.hpp"

using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path corpus_dir(GHAL_SOURCE_CORPUS);

struct AlgebraFree {
    void operator()(ghal_algebra* a) const { ghal_algebra_free(a); }
};
struct ModuleFree {
    void operator()(ghal_module* m) const { ghal_module_free(m); }
};
struct ComplexFree {
    void operator()(ghal_complex* x) const { ghal_complex_free(x); }
};
using AlgebraHandle = std::unique_ptr<ghal_algebra, AlgebraFree>;
using ModuleHandle = std::unique_ptr<ghal_module, ModuleFree>;
using ComplexHandle = std::unique_ptr<ghal_complex, ComplexFree>;

AlgebraHandle algebra(const std::string& name) {
    ghal_algebra* a = nullptr;
    REQUIRE(ghal_algebra_load((corpus_dir / "algebras" / (name + ".json")).c_str(), &a) == GHAL_OK);
    return AlgebraHandle(a);
}

ModuleHandle module(const ghal_algebra* a, const std::string& file) {
    ghal_module* m = nullptr;
    REQUIRE(ghal_module_load(a, (corpus_dir / "modules" / (file + ".json")).c_str(), &m) == GHAL_OK);
    return ModuleHandle(m);
}

ComplexHandle complex_of(const ghal_algebra* a, const std::string& file) {
    ghal_complex* x = nullptr;
    REQUIRE(ghal_complex_load(a, (corpus_dir / "complexes" / (file + ".json")).c_str(), &x) == GHAL_OK);
    return ComplexHandle(x);
}

Json take(char* s) {
    REQUIRE(s != nullptr);
    Json j = Json::parse(s);
    ghal_string_free(s);
    return j;
}

std::size_t dim_of(const ghal_module* m) {
    std::size_t d = 0;
    REQUIRE(ghal_module_dim(m, &d) == GHAL_OK);
    return d;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(ghal_version()) == "0.1.0");
    CHECK(std::string(ghal_status_name(GHAL_OK)) == "ok");
    CHECK(std::string(ghal_status_name(GHAL_ERR_PARSE)) == "parse error");
    CHECK(std::string(ghal_status_name(static_cast<ghal_status>(99))) == "unknown status");
}

TEST_CASE("algebra handles") {
    auto a = algebra("A2");
    std::size_t d = 0;
    CHECK(ghal_algebra_dim(a.get(), &d) == GHAL_OK);
    CHECK(d == 2);
    char* digest = nullptr;
    REQUIRE(ghal_algebra_digest(a.get(), &digest) == GHAL_OK);
    CHECK(std::strlen(digest) == 64);
    char* text = nullptr;
    REQUIRE(ghal_algebra_to_json(a.get(), &text) == GHAL_OK);
    ghal_algebra* back = nullptr;
    REQUIRE(ghal_algebra_parse(text, &back) == GHAL_OK);
    AlgebraHandle owned(back);
    char* digest2 = nullptr;
    REQUIRE(ghal_algebra_digest(back, &digest2) == GHAL_OK);
    CHECK(std::string(digest) == std::string(digest2));
    ghal_string_free(digest);
    ghal_string_free(digest2);
    ghal_string_free(text);
}

TEST_CASE("errors carry a status and a message") {
    ghal_algebra* a = nullptr;
    CHECK(ghal_algebra_parse("{not json", &a) == GHAL_ERR_PARSE);
    CHECK(a == nullptr);
    CHECK(std::strlen(ghal_last_error()) > 0);
    CHECK(ghal_algebra_parse(R"({"field": {"p": 4}, "dim": 1, "unit": [1], "mult": [[[1]]]})", &a) == GHAL_ERR_PARSE);
    CHECK(ghal_algebra_load("/nonexistent/ghal.json", &a) != GHAL_OK);
    CHECK(ghal_algebra_parse(nullptr, &a) == GHAL_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ghal_last_error()).find("null") != std::string::npos);
    CHECK(ghal_algebra_dim(nullptr, nullptr) == GHAL_ERR_INVALID_ARGUMENT);

    auto a2 = algebra("A2");
    std::size_t d = 0;
    CHECK(ghal_algebra_dim(a2.get(), &d) == GHAL_OK);
    CHECK(std::string(ghal_last_error()).empty());

    auto k4 = algebra("K4");
    ghal_module* m = nullptr;
    CHECK(ghal_module_load(k4.get(), (corpus_dir / "modules" / "A2_k.json").c_str(), &m) == GHAL_ERR_PARSE);
    CHECK(m == nullptr);

    auto k = module(a2.get(), "A2_k");
    auto kk = module(k4.get(), "K4_k");
    CHECK(ghal_ext_dim(k.get(), kk.get(), 0, &d) == GHAL_ERR_INVALID_ARGUMENT);

    char* report = nullptr;
    CHECK(ghal_gp_test(k.get(), 0, nullptr) == GHAL_ERR_INVALID_ARGUMENT);
    auto x = complex_of(a2.get(), "A2_k0");
    CHECK(ghal_complex_check(x.get(), "nonsense", nullptr, 0, 0, nullptr, &report) == GHAL_ERR_INVALID_ARGUMENT);
    CHECK(ghal_complex_check(x.get(), "homotopy", nullptr, 0, 0, nullptr, &report) == GHAL_ERR_INVALID_ARGUMENT);
    CHECK(ghal_complex_check(x.get(), "class", "bogus", 0, 0, nullptr, &report) == GHAL_ERR_INVALID_ARGUMENT);
    CHECK(report == nullptr);
}

TEST_CASE("ext, syzygies and projective dimension") {
    auto a2 = algebra("A2");
    auto k = module(a2.get(), "A2_k");
    auto r = module(a2.get(), "A2_A");
    std::size_t d = 99;
    for (std::size_t i = 0; i <= 5; ++i) {
        REQUIRE(ghal_ext_dim(k.get(), k.get(), i, &d) == GHAL_OK);
        CHECK(d == 1);
    }
    REQUIRE(ghal_ext_dim(k.get(), r.get(), 1, &d) == GHAL_OK);
    CHECK(d == 0);

    int pd = 0;
    REQUIRE(ghal_proj_dim(k.get(), 6, &pd) == GHAL_OK);
    CHECK(pd == -1);
    REQUIRE(ghal_proj_dim(r.get(), 6, &pd) == GHAL_OK);
    CHECK(pd == 0);

    auto k4 = algebra("K4");
    auto kk = module(k4.get(), "K4_k");
    ghal_module* omega = nullptr;
    REQUIRE(ghal_syzygy(kk.get(), 1, &omega) == GHAL_OK);
    ModuleHandle owned(omega);
    CHECK(dim_of(omega) == 3);
    REQUIRE(ghal_ext_dim(kk.get(), kk.get(), 1, &d) == GHAL_OK);
    CHECK(d == 2);

    char* report = nullptr;
    REQUIRE(ghal_resolve(kk.get(), 3, &report) == GHAL_OK);
    Json j = take(report);
    CHECK(j.at("ranks") == Json::array({1, 2, 3, 4}));
    CHECK(j.at("exact") == true);
}

TEST_CASE("gorenstein layer") {
    auto a2 = algebra("A2");
    auto k = module(a2.get(), "A2_k");
    char* report = nullptr;
    REQUIRE(ghal_gp_test(k.get(), 0, &report) == GHAL_OK);
    CHECK(take(report).at("gorenstein_projective") == true);

    ghal_module* g = nullptr;
    REQUIRE(ghal_gp_approximation(k.get(), 0, &g, &report) == GHAL_OK);
    ModuleHandle gh(g);
    Json ap = take(report);
    CHECK(ap.at("gp_dim") == 1);
    CHECK(ap.at("kernel_dim") == 0);

    ghal_module* z = nullptr;
    REQUIRE(ghal_realize_module(k.get(), 0, 2, &z, &report) == GHAL_OK);
    ModuleHandle zh(z);
    CHECK(take(report).at("stable_dim_end") == 1);
    REQUIRE(ghal_stable_iso(z, g, 0, 64, &report) == GHAL_OK);
    CHECK(take(report).at("verdict") == "isomorphic");
    REQUIRE(ghal_stable_hom(k.get(), k.get(), &report) == GHAL_OK);
    CHECK(take(report).at("dim") == 1);

    ghal_complex* t = nullptr;
    REQUIRE(ghal_complete_resolution(k.get(), 0, 3, &t, &report) == GHAL_OK);
    ComplexHandle th(t);
    Json cr = take(report);
    CHECK(cr.at("zero") == false);
    REQUIRE(ghal_complex_check(t, "acyclic", nullptr, 0, 0, nullptr, &report) == GHAL_OK);
    Json hom = take(report).at("homology_dims");
    REQUIRE(hom.size() >= 3);
    for (std::size_t i = 1; i + 1 < hom.size(); ++i) CHECK(hom[i] == 0);

    auto t2 = algebra("T2");
    auto s2 = module(t2.get(), "T2_S2");
    REQUIRE(ghal_gp_test(s2.get(), 1, &report) == GHAL_OK);
    CHECK(take(report).at("gorenstein_projective") == false);
    REQUIRE(ghal_realize_module(s2.get(), 1, 2, nullptr, &report) == GHAL_OK);
    CHECK(take(report).at("stable_dim_end") == 0);
    ghal_module* h = nullptr;
    REQUIRE(ghal_fpd_hull(s2.get(), 1, &h, &report) == GHAL_OK);
    ModuleHandle hh(h);
    CHECK(take(report).contains("hull_pd"));
    ghal_module* c = nullptr;
    CHECK(ghal_cosyzygy(s2.get(), 1, &c) == GHAL_ERR_PRECONDITION);
    CHECK(c == nullptr);
}

TEST_CASE("complex checks and realization") {
    auto a2 = algebra("A2");
    auto disk = complex_of(a2.get(), "A2_disk_A");
    auto closure = complex_of(a2.get(), "A2_closure");
    char* report = nullptr;

    REQUIRE(ghal_complex_check(disk.get(), "contractible", nullptr, 0, 0, nullptr, &report) == GHAL_OK);
    CHECK(take(report).at("contractible") == true);
    REQUIRE(ghal_complex_check(closure.get(), "contractible", nullptr, 0, 0, nullptr, &report) == GHAL_OK);
    Json c = take(report);
    CHECK(c.at("contractible") == false);
    CHECK(c.at("split_test") == c.at("homotopy_test"));

    REQUIRE(ghal_complex_check(disk.get(), "class", "projective", 1, 0, nullptr, &report) == GHAL_OK);
    CHECK(take(report).at("member") == true);
    REQUIRE(ghal_complex_check(disk.get(), "dg", "projective", 0, 0, nullptr, &report) == GHAL_OK);
    CHECK(take(report).at("pass") == true);
    REQUIRE(ghal_complex_check(disk.get(), "homotopy", nullptr, 0, 0, disk.get(), &report) == GHAL_OK);
    CHECK(take(report).at("quotient") == 0);

    auto k = module(a2.get(), "A2_k");
    ghal_complex* k0 = nullptr;
    REQUIRE(ghal_complex_concentrated(k.get(), 0, &k0) == GHAL_OK);
    ComplexHandle k0h(k0);
    ghal_module* z = nullptr;
    REQUIRE(ghal_realize_complex(k0, 0, GHAL_STABILIZATION_LEFT, &z, &report) == GHAL_OK);
    ModuleHandle zh(z);
    Json r = take(report);
    CHECK(r.at("variant") == "left");
    CHECK(r.at("stable_dim_end") == 1);

    ghal_complex* f = nullptr;
    ghal_complex* cc = nullptr;
    REQUIRE(ghal_witness_weak_triviality(disk.get(), 0, &f, &cc, &report) == GHAL_OK);
    ComplexHandle fh(f), ch(cc);
    CHECK(take(report).at("verified") == true);
}

TEST_CASE("modules and complexes round-trip through json and files") {
    auto k4 = algebra("K4");
    auto m = module(k4.get(), "K4_m");
    char* text = nullptr;
    REQUIRE(ghal_module_to_json(m.get(), &text) == GHAL_OK);
    ghal_module* back = nullptr;
    REQUIRE(ghal_module_parse(k4.get(), text, &back) == GHAL_OK);
    ModuleHandle bh(back);
    char* text2 = nullptr;
    REQUIRE(ghal_module_to_json(back, &text2) == GHAL_OK);
    CHECK(std::string(text) == std::string(text2));
    ghal_string_free(text);
    ghal_string_free(text2);

    fs::path tmp = fs::temp_directory_path() / "ghal_test_capi";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    REQUIRE(ghal_module_save(m.get(), (tmp / "m.json").c_str()) == GHAL_OK);
    ghal_module* loaded = nullptr;
    REQUIRE(ghal_module_load(k4.get(), (tmp / "m.json").c_str(), &loaded) == GHAL_OK);
    ModuleHandle lh(loaded);
    CHECK(dim_of(loaded) == dim_of(m.get()));

    auto x = complex_of(k4.get(), "K4_m_A_k");
    REQUIRE(ghal_complex_save(x.get(), (tmp / "x.json").c_str()) == GHAL_OK);
    ghal_complex* y = nullptr;
    REQUIRE(ghal_complex_load(k4.get(), (tmp / "x.json").c_str(), &y) == GHAL_OK);
    ComplexHandle yh(y);
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(ghal_complex_to_json(x.get(), &a) == GHAL_OK);
    REQUIRE(ghal_complex_to_json(y, &b) == GHAL_OK);
    CHECK(std::string(a) == std::string(b));
    ghal_string_free(a);
    ghal_string_free(b);

    ghal_module* r = nullptr;
    REQUIRE(ghal_module_free_of_rank(k4.get(), 2, &r) == GHAL_OK);
    ModuleHandle rh(r);
    CHECK(dim_of(r) == 8);
    fs::remove_all(tmp);
}

TEST_CASE("corpus generation and verification") {
    fs::path tmp = fs::temp_directory_path() / "ghal_test_capi_corpus";
    fs::remove_all(tmp);
    REQUIRE(ghal_write_corpus(tmp.c_str()) == GHAL_OK);
    char* report = nullptr;
    REQUIRE(ghal_verify(tmp.c_str(), "contractibility", &report) == GHAL_OK);
    Json j = take(report);
    CHECK(j.at("overall") == "pass");
    CHECK(j.at("suite") == "contractibility");
    CHECK(j.at("records").size() >= 20);
    CHECK(ghal_verify(tmp.c_str(), "nonsense", &report) == GHAL_ERR_INVALID_ARGUMENT);
    CHECK(ghal_verify((tmp / "missing").c_str(), "all", &report) == GHAL_ERR_PARSE);
    fs::remove_all(tmp);
}
