#pragma once

// The bundled corpus on disk and the verification suites run over it.

#include <string>
#include <vector>

#include "ghal/io.hpp"

namespace ghal::verify {

inline constexpr const char* kVersion = "0.1.0";

struct CorpusAlgebra {
    std::string name;
    AlgebraPtr algebra;
    std::size_t gdim;
    std::string digest;
};

struct CorpusModule {
    std::string name;
    std::string algebra;
    Module module;
    std::string digest;
};

struct CorpusComplex {
    std::string name;
    std::string algebra;
    ChainComplex complex;
    std::string digest;
};

struct Corpus {
    std::vector<CorpusAlgebra> algebras;
    std::vector<CorpusModule> modules;
    std::vector<CorpusComplex> complexes;

    const CorpusAlgebra& algebra(const std::string& name) const;
};

/// Writes manifest.json plus one file per algebra, module and complex.
void write_corpus(const std::string& dir);

/// Parses and validates every file named by the manifest; the first problem throws ParseError.
Corpus load_corpus(const std::string& dir);

const std::vector<std::string>& suite_names();

/// Report with records sorted by check name, then input digest. `timestamp` fills "generated_at".
io::Json run_suite(const Corpus& corpus, const std::string& suite, const std::string& timestamp);

/// The report without its timestamp, for comparing runs.
io::Json strip_timestamp(io::Json report);

}  // namespace ghal::verify
