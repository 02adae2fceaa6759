#pragma once

// Bounded cochain complexes of modules (differentials raise degree), with
// Sigma(X)^n = X^{n+1} and negated differential.

#include <optional>
#include <string>
#include <vector>

#include "ghal/gorenstein.hpp"

namespace ghal {

class ChainComplex {
public:
    /// components[i] sits in degree lo + i; differentials[i]: X^{lo+i} -> X^{lo+i+1}.
    ChainComplex(AlgebraPtr algebra, int lo, std::vector<Module> components, std::vector<Matrix> differentials);

    static ChainComplex zero(AlgebraPtr algebra);
    /// M concentrated in degree n.
    static ChainComplex concentrated(const Module& m, int n);

    const AlgebraPtr& algebra() const { return algebra_; }
    int lo() const { return lo_; }
    /// Highest degree of the support interval; lo - 1 for the empty complex.
    int hi() const { return lo_ + int(components_.size()) - 1; }
    bool empty() const { return components_.empty(); }
    Field field() const { return algebra_->field(); }

    /// X^n, the zero module outside [lo, hi].
    Module component(int n) const;
    /// d^n : X^n -> X^{n+1}, zero outside the support.
    ModuleHom differential(int n) const;
    const std::vector<Module>& components() const { return components_; }

    bool is_zero() const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b);

private:
    AlgebraPtr algebra_;
    int lo_;
    std::vector<Module> components_;
    std::vector<Matrix> differentials_;
};

std::optional<std::string> validate_complex(const ChainComplex& x);

ChainComplex suspension(const ChainComplex& x);
/// Sigma^k for any integer k.
ChainComplex shift(const ChainComplex& x, int k);
/// M --id--> M in degrees n, n+1.
ChainComplex disk_complex(const Module& m, int n);
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// The window T^lo -> ... -> T^hi as a complex.
ChainComplex window_complex(const CompleteResolutionWindow& t);

/// Smart truncation X^n / B^n -> X^{n+1} -> ..., quasi-isomorphic to X in degrees >= n.
ChainComplex smart_truncation_above(const ChainComplex& x, int n);

/// dim H^n(X).
std::size_t homology(const ChainComplex& x, int n);
bool is_acyclic(const ChainComplex& x);
/// Z^n = ker d^n with its inclusion into X^n.
Submodule cycles(const ChainComplex& x, int n);

struct ContractibilityResult {
    bool contractible = false;
    bool acyclic = false;
    bool split_test = false;     ///< every 0 -> Z^n -> X^n -> Z^{n+1} -> 0 splits
    bool homotopy_test = false;  ///< id_X is nullhomotopic
    std::string reason;
};

/// Both algorithms are always run; disagreement throws InconsistencyError.
ContractibilityResult is_contractible(const ChainComplex& x);

class ClassOracle {
public:
    enum class Kind { Projective, GorensteinProjective, FinitePD, All };

    static ClassOracle projective() { return ClassOracle(Kind::Projective, std::nullopt); }
    static ClassOracle all() { return ClassOracle(Kind::All, std::nullopt); }
    static ClassOracle gorenstein_projective(const GorensteinContext& ctx) {
        return ClassOracle(Kind::GorensteinProjective, ctx);
    }
    static ClassOracle finite_pd(const GorensteinContext& ctx) { return ClassOracle(Kind::FinitePD, ctx); }
    /// "projective", "gorenstein-projective", "finite-pd" or "all".
    static ClassOracle parse(const std::string& name, const std::optional<GorensteinContext>& ctx);

    Kind kind() const { return kind_; }
    std::string name() const;
    bool operator()(const Module& m) const;

private:
    ClassOracle(Kind k, std::optional<GorensteinContext> ctx) : kind_(k), ctx_(std::move(ctx)) {}
    Kind kind_;
    std::optional<GorensteinContext> ctx_;
};

enum class ClassKind { Degreewise, Tilde };

/// dw: every component passes; tilde: acyclic and every cycle module passes.
bool class_membership(const ChainComplex& x, const ClassOracle& oracle, ClassKind which);

struct HomotopyClassSpace {
    std::size_t chain_maps = 0;
    std::size_t nullhomotopic = 0;
    std::size_t quotient = 0;
    int lo = 0;
    int hi = 0;
    /// Chain maps whose classes form a basis of the quotient, one matrix per degree in [lo, hi].
    std::vector<std::vector<Matrix>> representatives;
};

/// [X, Y]: chain maps modulo nullhomotopic ones.
HomotopyClassSpace homotopy_classes(const ChainComplex& x, const ChainComplex& y);

/// Chain maps on degrees [lo, hi] only, modulo homotopies h^n: X^n -> Y^{n-1} for
/// lo <= n <= hi + 1; the boundary homotopies use the components just outside.
HomotopyClassSpace homotopy_classes_on(const ChainComplex& x, const ChainComplex& y, int lo, int hi);

/// Is the family of maps (one per degree in [lo, hi]) a chain map that is not nullhomotopic?
bool is_essential_chain_map(const ChainComplex& x, const ChainComplex& y, int lo, const std::vector<Matrix>& f);

/// dim [Z, Sigma X].
std::size_t ext1_dw(const ChainComplex& z, const ChainComplex& x);

struct DgTestResult {
    bool pass = false;
    std::optional<int> failing_degree;        ///< component not in the left class
    std::optional<std::size_t> witness;       ///< family index D with [X, D] != 0
    std::vector<Matrix> witness_map;          ///< an essential chain map X -> D, degrees from witness_lo
    int witness_lo = 0;
    std::string reason;
};

/// Semi-decision of X in dg(left) against a finite family from tilde(right).
DgTestResult dg_test(const ChainComplex& x, const ClassOracle& left, const ClassOracle& right,
                     const std::vector<ChainComplex>& family);

/// Disks D^n(M) for every module and every n in [lo - 1, hi], plus every shift of
/// every given acyclic complex whose support meets [lo - 1, hi + 1].
std::vector<ChainComplex> standard_family(const std::vector<Module>& modules,
                                          const std::vector<ChainComplex>& acyclic, int lo, int hi);

/// A map of complexes, one matrix per degree of [lo, hi] (zero elsewhere).
struct ChainMap {
    int lo = 0;
    std::vector<Matrix> components;
};

bool is_chain_map(const ChainComplex& x, const ChainComplex& y, const ChainMap& f);

struct WeakTrivialityWitness {
    ChainComplex f;       ///< in tilde(finite pd)
    ChainComplex c;       ///< in tilde(GP), bounded below
    ChainMap inclusion;   ///< X -> F
    ChainMap projection;  ///< F -> C
};

/// 0 -> X -> F -> C -> 0 for a bounded acyclic X.
WeakTrivialityWitness witness_weak_triviality(const GorensteinContext& ctx, const ChainComplex& x);

/// Exactness of the sequence and both class memberships.
std::optional<std::string> verify_weak_triviality(const GorensteinContext& ctx, const ChainComplex& x,
                                                  const WeakTrivialityWitness& w);

struct FreeReplacement {
    ChainComplex p;  ///< frees, supported in [bottom, X.hi]
    ChainMap map;    ///< P -> X, a quasi-isomorphism in degrees > bottom
};

/// Replace X by frees from the top degree down to `bottom`.
FreeReplacement free_replacement(const ChainComplex& x, int bottom);

enum class Stabilization { Left, Right };

/// The realization of a bounded complex. The right variant splices one step
/// later and reads the cycle in degree 1.
StableObject realize_complex(const GorensteinContext& ctx, const ChainComplex& x,
                             Stabilization variant = Stabilization::Left, std::size_t splice_offset = 0);

}  // namespace ghal
