#pragma once

// Free covers, syzygies, free resolutions, projectivity, Ext.
//
// Covers are generated by a subset of the standard basis of the module: all
// basis vectors to start with, then greedily (in index order) dropping any
// vector that lies in the submodule generated by the remaining ones. Over a
// local algebra the result is a minimal cover; otherwise it may carry extra
// free summands, which every consumer here tolerates.

#include <optional>
#include <vector>

#include "ghal/algebra.hpp"

namespace ghal {

/// Basis indices of `m` that generate it, after greedy pruning.
std::vector<std::size_t> cover_generators(const Module& m);

/// The homomorphism A^g -> target sending the unit of copy s to column s of `images`.
ModuleHom hom_from_free(const Module& free, std::size_t rank, const Module& target, const Matrix& images);

struct FreeCover {
    Module module;
    std::vector<std::size_t> generators;
    Module cover;
    ModuleHom projection;  ///< cover -> module, surjective
    Module syzygy;
    ModuleHom inclusion;   ///< syzygy -> cover, with image = ker(projection)
};

FreeCover free_cover(const Module& m);

/// Omega^j(m), iterating free_cover.
Module syzygy(const Module& m, std::size_t j);

/// F_n -> ... -> F_0 -> M -> 0, with F_i the cover of Omega^i M.
struct Resolution {
    Module module;
    std::vector<FreeCover> steps;  ///< steps[i] covers Omega^i M

    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    const Module& free(std::size_t i) const { return steps.at(i).cover; }
    const ModuleHom& augmentation() const { return steps.at(0).projection; }
    /// d_i : F_i -> F_{i-1}, for 1 <= i <= length.
    ModuleHom differential(std::size_t i) const;
    /// Omega^{length+1} M.
    const Module& tail() const { return steps.back().syzygy; }
    /// Rank of F_i as a free module.
    std::size_t rank(std::size_t i) const { return steps.at(i).generators.size(); }
};

Resolution resolution(const Module& m, std::size_t n);

/// im d_{i+1} = ker d_i at every spot and the augmentation is onto.
bool is_exact(const Resolution& r);

struct ProjectivityCertificate {
    bool projective = false;
    FreeCover cover;
    std::optional<ModuleHom> section;  ///< A-linear splitting of the cover when projective
};

ProjectivityCertificate is_projective(const Module& m);

/// Smallest j <= bound with Omega^j M projective; nullopt means "exceeds bound".
std::optional<std::size_t> proj_dim_upto(const Module& m, std::size_t bound);

struct ExtSpace {
    std::size_t degree = 0;
    std::size_t dim = 0;
    /// Cocycles F_degree -> N spanning Ext modulo coboundaries.
    std::vector<ModuleHom> representatives;
};

/// Ext^i(M, N) as cohomology of Hom(resolution(M, i+1), N).
ExtSpace ext_space(const Module& m, const Module& n, std::size_t i);

/// dim Ext^i(M, N) for 0 <= i <= up_to, from a single resolution.
std::vector<std::size_t> ext_dimensions(const Module& m, const Module& n, std::size_t up_to);

/// Matrix of Hom(F_j, N) -> Hom(F_{j+1}, N), phi -> phi o d_{j+1}, in the
/// coordinates Hom(A^g, N) = N^g given by the images of the generators.
Matrix ext_coboundary(const Resolution& r, const Module& n, std::size_t j);

}  // namespace ghal
