#pragma once

// Gorenstein-projective modules over an algebra with a declared Gorenstein
// dimension d: the GP test, cosyzygies, complete resolutions, GP
// approximations, hulls of finite projective dimension, and the stable
// category GP/Proj.

#include <optional>
#include <string>
#include <vector>

#include "ghal/resolve.hpp"

namespace ghal {

struct GorensteinContext {
    AlgebraPtr algebra;
    std::size_t d = 0;  ///< declared self-injective dimension, trusted

    GorensteinContext(AlgebraPtr a, std::size_t gdim) : algebra(std::move(a)), d(gdim) {}
    Module regular() const { return free_module(algebra, 1); }
};

struct GPCertificate {
    bool gorenstein_projective = false;
    /// ext_dims[i-1] = dim Ext^i(M, A) for 1 <= i <= d
    std::vector<std::size_t> ext_dims;
};

GPCertificate is_gorenstein_projective(const GorensteinContext& ctx, const Module& m);

/// Best-effort check of the declared d: Omega^d of every sample must pass the GP test.
/// Returns the index of the first offending sample.
std::optional<std::size_t> check_declared_dimension(const GorensteinContext& ctx, const std::vector<Module>& samples);

/// B +_A C for f: A -> B and g: A -> C.
struct Pushout {
    Module module;
    ModuleHom from_first;   ///< B -> pushout
    ModuleHom from_second;  ///< C -> pushout
    ModuleHom projection;   ///< B + C -> pushout
    Matrix section;         ///< linear right inverse of `projection`
};
Pushout pushout(const ModuleHom& f, const ModuleHom& g);

struct Cosyzygy {
    Module module;
    Module free;
    ModuleHom embedding;   ///< module -> free
    Module cokernel;
    ModuleHom projection;  ///< free -> cokernel
};

/// 0 -> G -> F -> G' -> 0 with F free and G' GP, through G = G** -> (cover of G*)*.
Cosyzygy cosyzygy(const GorensteinContext& ctx, const Module& g);

/// Omega^{-j}(G), iterating cosyzygy.
Module cosyzygy_power(const GorensteinContext& ctx, const Module& g, std::size_t j);

/// A stretch T^lo -> ... -> T^hi of an acyclic complex of frees, with
/// the short exact pieces 0 -> Z^n -> T^n -> Z^{n+1} -> 0 it is spliced from.
/// Z^{-d-offset} = Omega^{d+offset} M; to the left the covers of the
/// resolution of M, to the right iterated cosyzygies.
struct CompleteResolutionWindow {
    Module module;
    int lo = 0;
    int hi = 0;
    int splice_degree = 0;
    std::vector<Module> components{};         ///< T^n at index n - lo
    std::vector<Module> cycles{};             ///< Z^n at index n - lo, for lo <= n <= hi + 1
    std::vector<ModuleHom> inclusions{};      ///< Z^n -> T^n
    std::vector<ModuleHom> projections{};     ///< T^n -> Z^{n+1}

    const Module& component(int n) const { return components.at(std::size_t(n - lo)); }
    const Module& cycle(int n) const { return cycles.at(std::size_t(n - lo)); }
    /// d^n = (Z^{n+1} -> T^{n+1}) o (T^n -> Z^{n+1}), for lo <= n < hi.
    ModuleHom differential(int n) const;
    bool is_zero() const;
};

/// Window over degrees [-w, w]. Requires w >= d. A projective Omega^{d+offset} M gives the zero window.
CompleteResolutionWindow complete_resolution(const GorensteinContext& ctx, const Module& m, std::size_t w,
                                             std::size_t splice_offset = 0);

/// Window-level invariants: exact pieces, free components, GP cycles.
std::optional<std::string> validate_window(const GorensteinContext& ctx, const CompleteResolutionWindow& t);

struct GPApproximation {
    Module module;
    Module gp;
    ModuleHom projection;  ///< gp -> module, onto
    Module kernel;
    ModuleHom kernel_inclusion;
    std::size_t kernel_pd = 0;
};

/// 0 -> K -> G -> M -> 0 with G GP and pd K <= d.
GPApproximation gp_approximation(const GorensteinContext& ctx, const Module& m);

struct FpdHull {
    Module module;
    Module hull;
    ModuleHom inclusion;   ///< module -> hull
    Module cokernel;       ///< GP
    ModuleHom projection;  ///< hull -> cokernel
    std::size_t hull_pd = 0;
};

/// 0 -> M -> H -> G' -> 0 with pd H <= d and G' GP.
FpdHull fpd_hull(const GorensteinContext& ctx, const Module& m);

/// Hom(M, N) modulo maps factoring through a projective.
struct StableHomSpace {
    Module source;
    Module target;
    Matrix full;             ///< columns: vec of a basis of Hom(M, N)
    Matrix factoring;        ///< columns: vec of a basis of the projectively factoring maps
    Matrix representatives;  ///< columns: vec of maps completing `factoring` to a basis of Hom(M, N)

    std::size_t dim() const { return representatives.cols(); }
    std::size_t full_dim() const { return full.cols(); }
    std::size_t factoring_dim() const { return factoring.cols(); }
    ModuleHom representative(std::size_t i) const;
    /// Coordinates of a homomorphism in the stable basis.
    Matrix stable_coordinates(const Matrix& hom_matrix) const;
    bool factors_through_projective(const Matrix& hom_matrix) const;
};

StableHomSpace stable_hom(const Module& m, const Module& n);

enum class StableIsoVerdict { Isomorphic, NotIsomorphic, Inconclusive };

const char* to_string(StableIsoVerdict v);

struct StableIsoResult {
    StableIsoVerdict verdict = StableIsoVerdict::Inconclusive;
    std::optional<ModuleHom> forward;   ///< M -> N
    std::optional<ModuleHom> backward;  ///< N -> M
    std::size_t candidates = 0;
    std::string reason;
};

StableIsoResult stable_iso_check(const GorensteinContext& ctx, const Module& m, const Module& n,
                                 std::size_t cap = 10000);

struct StableObject {
    Module module;
};

/// Z^0 of complete_resolution(ctx, M, d).
StableObject realize_module(const GorensteinContext& ctx, const Module& m);

}  // namespace ghal
