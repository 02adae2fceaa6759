#include "ghal/complexes.hpp"

#include <algorithm>

namespace ghal {

namespace {

/// Matrix of F -> vec(A F) on vec(Hom_k(source, mid)), for A: mid -> target.
Matrix left_compose(const Matrix& a, std::size_t source_dim) {
    return kron(Matrix::identity(a.field(), source_dim), a);
}

/// Matrix of F -> vec(F B), for B: source -> mid, F: mid -> target.
Matrix right_compose(const Matrix& b, std::size_t target_dim) {
    return kron(b.transpose(), Matrix::identity(b.field(), target_dim));
}

struct HomotopyAssembly {
    std::vector<Matrix> map_bases;  ///< hom_space(X^n, Y^n), n in [lo, hi]
    std::vector<std::size_t> offsets;
    std::size_t ambient = 0;        ///< sum of dim X^n * dim Y^n
    Matrix homotopies;              ///< columns: vec of d h + h d over a basis of homotopies
};

HomotopyAssembly assemble(const ChainComplex& x, const ChainComplex& y, int lo, int hi) {
    const Field field = x.field();
    HomotopyAssembly out{{}, {}, 0, Matrix(field, 0, 0)};
    for (int n = lo; n <= hi; ++n) {
        out.offsets.push_back(out.ambient);
        out.map_bases.push_back(hom_space(x.component(n), y.component(n)));
        out.ambient += x.component(n).dim() * y.component(n).dim();
    }
    std::vector<Matrix> cols;
    for (int n = lo; n <= hi + 1; ++n) {
        // h^n : X^n -> Y^{n-1} contributes d_Y^{n-1} h^n in degree n and h^n d_X^{n-1} in degree n-1
        Module xn = x.component(n), ym = y.component(n - 1);
        Matrix basis = hom_space(xn, ym);
        if (basis.cols() == 0) continue;
        Matrix block(field, out.ambient, basis.cols());
        if (n <= hi) {
            Matrix dy = y.differential(n - 1).matrix;
            block.set_block(out.offsets[std::size_t(n - lo)], 0, left_compose(dy, xn.dim()) * basis);
        }
        if (n - 1 >= lo) {
            Matrix dx = x.differential(n - 1).matrix;
            Matrix part = right_compose(dx, ym.dim()) * basis;
            Matrix cur = block.block(out.offsets[std::size_t(n - 1 - lo)], 0, part.rows(), part.cols());
            block.set_block(out.offsets[std::size_t(n - 1 - lo)], 0, cur + part);
        }
        cols.push_back(block);
    }
    out.homotopies = hstack(cols, field, out.ambient);
    return out;
}

Matrix stack_vec(const std::vector<Matrix>& parts, Field field, std::size_t ambient) {
    Matrix out(field, ambient, 1);
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix v = p.vec();
        out.set_block(off, 0, v);
        off += v.rows();
    }
    return out;
}

/// Z^{n+1} as the corestriction of d^n.
Matrix corestriction(const ChainComplex& x, int n, const Submodule& z_next) {
    auto res = solve_right(z_next.inclusion.matrix, x.differential(n).matrix);
    if (!res.solvable) throw InconsistencyError("differential does not land in the next cycles");
    return res.solution;
}

}  // namespace

ChainComplex::ChainComplex(AlgebraPtr algebra, int lo, std::vector<Module> components,
                           std::vector<Matrix> differentials)
    : algebra_(std::move(algebra)), lo_(lo), components_(std::move(components)),
      differentials_(std::move(differentials)) {
    const std::size_t expected = components_.empty() ? 0 : components_.size() - 1;
    if (differentials_.size() != expected) throw InvalidArgument("complex needs one differential between consecutive components");
    for (const auto& c : components_) {
        if (!(c.algebra() == algebra_ || *c.algebra() == *algebra_)) {
            throw InvalidArgument("complex component over a different algebra");
        }
    }
    for (std::size_t i = 0; i < differentials_.size(); ++i) {
        if (differentials_[i].rows() != components_[i + 1].dim() || differentials_[i].cols() != components_[i].dim()) {
            throw InvalidArgument("differential in degree " + std::to_string(lo_ + int(i)) + " has the wrong shape");
        }
    }
}

ChainComplex ChainComplex::zero(AlgebraPtr algebra) { return ChainComplex(std::move(algebra), 0, {}, {}); }

ChainComplex ChainComplex::concentrated(const Module& m, int n) { return ChainComplex(m.algebra(), n, {m}, {}); }

Module ChainComplex::component(int n) const {
    if (n < lo_ || n > hi()) return zero_module(algebra_);
    return components_[std::size_t(n - lo_)];
}

ModuleHom ChainComplex::differential(int n) const {
    if (n < lo_ || n >= hi()) return zero_hom(component(n), component(n + 1));
    const std::size_t i = std::size_t(n - lo_);
    return {components_[i], components_[i + 1], differentials_[i]};
}

bool ChainComplex::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Module& m) { return m.is_zero(); });
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.empty() && b.empty()) return *a.algebra_ == *b.algebra_;
    return a.lo_ == b.lo_ && *a.algebra_ == *b.algebra_ && a.components_ == b.components_ &&
           a.differentials_ == b.differentials_;
}

std::optional<std::string> validate_complex(const ChainComplex& x) {
    for (int n = x.lo(); n <= x.hi(); ++n) {
        if (auto err = validate_module(x.component(n))) return "component " + std::to_string(n) + ": " + *err;
    }
    for (int n = x.lo(); n < x.hi(); ++n) {
        if (!x.differential(n).is_valid()) return "differential " + std::to_string(n) + " is not a module homomorphism";
        if (n + 1 < x.hi() && !(x.differential(n + 1).matrix * x.differential(n).matrix).is_zero()) {
            return "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " is not zero";
        }
    }
    return std::nullopt;
}

ChainComplex shift(const ChainComplex& x, int k) {
    std::vector<Matrix> diffs;
    for (int n = x.lo(); n < x.hi(); ++n) {
        Matrix d = x.differential(n).matrix;
        diffs.push_back(k % 2 == 0 ? d : -d);
    }
    return ChainComplex(x.algebra(), x.lo() - k, x.components(), std::move(diffs));
}

ChainComplex suspension(const ChainComplex& x) { return shift(x, 1); }

ChainComplex disk_complex(const Module& m, int n) {
    return ChainComplex(m.algebra(), n, {m, m}, {Matrix::identity(m.field(), m.dim())});
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<Module> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) comps.push_back(direct_sum(a.component(n), b.component(n)));
    for (int n = lo; n < hi; ++n) {
        diffs.push_back(block_diagonal({a.differential(n).matrix, b.differential(n).matrix}, a.field()));
    }
    return ChainComplex(a.algebra(), lo, std::move(comps), std::move(diffs));
}

ChainComplex window_complex(const CompleteResolutionWindow& t) {
    if (t.is_zero()) return ChainComplex::zero(t.module.algebra());
    std::vector<Matrix> diffs;
    for (int n = t.lo; n < t.hi; ++n) diffs.push_back(t.differential(n).matrix);
    return ChainComplex(t.module.algebra(), t.lo, t.components, std::move(diffs));
}

ChainComplex smart_truncation_above(const ChainComplex& x, int n) {
    if (x.empty() || n > x.hi()) return ChainComplex::zero(x.algebra());
    if (n < x.lo()) return x;
    QuotientModule q = quotient_module(x.component(n), x.differential(n - 1).matrix);
    std::vector<Module> comps{q.module};
    std::vector<Matrix> diffs;
    for (int m = n + 1; m <= x.hi(); ++m) comps.push_back(x.component(m));
    if (n < x.hi()) diffs.push_back(x.differential(n).matrix * q.section);
    for (int m = n + 1; m < x.hi(); ++m) diffs.push_back(x.differential(m).matrix);
    return ChainComplex(x.algebra(), n, std::move(comps), std::move(diffs));
}

std::size_t homology(const ChainComplex& x, int n) {
    Matrix out = x.differential(n).matrix;
    Matrix in = x.differential(n - 1).matrix;
    return out.cols() - rank(out) - rank(in);
}

bool is_acyclic(const ChainComplex& x) {
    for (int n = x.lo(); n <= x.hi(); ++n)
        if (homology(x, n) != 0) return false;
    return true;
}

Submodule cycles(const ChainComplex& x, int n) { return kernel(x.differential(n)); }

ContractibilityResult is_contractible(const ChainComplex& x) {
    ContractibilityResult r;
    r.acyclic = is_acyclic(x);

    if (r.acyclic) {
        r.split_test = true;
        for (int n = x.lo(); n <= x.hi() && r.split_test; ++n) {
            Submodule z_next = cycles(x, n + 1);
            ModuleHom onto{x.component(n), z_next.module, corestriction(x, n, z_next)};
            if (!module_section(onto)) r.split_test = false;
        }
    }

    HomotopyAssembly h = assemble(x, x, x.lo(), x.hi());
    std::vector<Matrix> ids;
    for (int n = x.lo(); n <= x.hi(); ++n) ids.push_back(Matrix::identity(x.field(), x.component(n).dim()));
    r.homotopy_test = solve_right(h.homotopies, stack_vec(ids, x.field(), h.ambient)).solvable;

    if (r.acyclic && r.split_test != r.homotopy_test) {
        throw InconsistencyError("split test and nullhomotopy test disagree on contractibility");
    }
    if (!r.acyclic && r.homotopy_test) throw InconsistencyError("identity of a non-acyclic complex is nullhomotopic");
    r.contractible = r.acyclic && r.split_test;
    if (!r.acyclic) {
        r.reason = "not acyclic";
    } else if (r.contractible) {
        r.reason = "all syzygy sequences split and the identity is nullhomotopic";
    } else {
        r.reason = "some syzygy sequence does not split";
    }
    return r;
}

ClassOracle ClassOracle::parse(const std::string& name, const std::optional<GorensteinContext>& ctx) {
    if (name == "projective") return projective();
    if (name == "all") return all();
    if (name == "gorenstein-projective" || name == "finite-pd") {
        if (!ctx) throw InvalidArgument("class oracle " + name + " needs a Gorenstein context");
        return name == "finite-pd" ? finite_pd(*ctx) : gorenstein_projective(*ctx);
    }
    throw InvalidArgument("unknown class oracle: " + name);
}

std::string ClassOracle::name() const {
    switch (kind_) {
        case Kind::Projective: return "projective";
        case Kind::GorensteinProjective: return "gorenstein-projective(d=" + std::to_string(ctx_->d) + ")";
        case Kind::FinitePD: return "finite-pd(d=" + std::to_string(ctx_->d) + ")";
        case Kind::All: return "all";
    }
    return "all";
}

bool ClassOracle::operator()(const Module& m) const {
    switch (kind_) {
        case Kind::Projective: return is_projective(m).projective;
        case Kind::GorensteinProjective: return is_gorenstein_projective(*ctx_, m).gorenstein_projective;
        case Kind::FinitePD: return proj_dim_upto(m, ctx_->d).has_value();
        case Kind::All: return true;
    }
    return false;
}

bool class_membership(const ChainComplex& x, const ClassOracle& oracle, ClassKind which) {
    if (which == ClassKind::Degreewise) {
        for (int n = x.lo(); n <= x.hi(); ++n)
            if (!oracle(x.component(n))) return false;
        return true;
    }
    if (!is_acyclic(x)) return false;
    for (int n = x.lo(); n <= x.hi(); ++n)
        if (!oracle(cycles(x, n).module)) return false;
    return true;
}

HomotopyClassSpace homotopy_classes_on(const ChainComplex& x, const ChainComplex& y, int lo, int hi) {
    if (!(*x.algebra() == *y.algebra())) throw InvalidArgument("homotopy_classes: complexes over different algebras");
    const Field field = x.field();
    HomotopyClassSpace out;
    out.lo = lo;
    out.hi = hi;
    if (hi < lo) return out;
    HomotopyAssembly h = assemble(x, y, lo, hi);

    std::size_t unknowns = 0;
    std::vector<std::size_t> coord_offsets;
    for (const auto& b : h.map_bases) {
        coord_offsets.push_back(unknowns);
        unknowns += b.cols();
    }
    // commuting squares d_Y f^n = f^{n+1} d_X inside [lo, hi]
    std::vector<Matrix> rows;
    for (int n = lo; n < hi; ++n) {
        const std::size_t i = std::size_t(n - lo);
        Matrix dx = x.differential(n).matrix, dy = y.differential(n).matrix;
        const std::size_t len = x.component(n).dim() * y.component(n + 1).dim();
        Matrix row(field, len, unknowns);
        row.set_block(0, coord_offsets[i], left_compose(dy, x.component(n).dim()) * h.map_bases[i]);
        row.set_block(0, coord_offsets[i + 1], -(right_compose(dx, y.component(n + 1).dim()) * h.map_bases[i + 1]));
        rows.push_back(row);
    }
    Matrix constraints = vstack(rows, field, unknowns);
    Matrix coords = kernel_basis(constraints);

    Matrix embed(field, h.ambient, unknowns);
    for (std::size_t i = 0; i < h.map_bases.size(); ++i) embed.set_block(h.offsets[i], coord_offsets[i], h.map_bases[i]);
    Matrix chain = embed * coords;

    out.chain_maps = coords.cols();
    out.nullhomotopic = rank(h.homotopies);
    out.quotient = out.chain_maps - out.nullhomotopic;

    Matrix null_basis = h.homotopies.cols() == 0 ? Matrix(field, h.ambient, 0) : image_basis(h.homotopies);
    Echelon e = rref(hstack(null_basis, chain));
    for (auto c : e.pivots) {
        if (c < null_basis.cols()) continue;
        Matrix v = chain.column(c - null_basis.cols());
        std::vector<Matrix> f;
        for (int n = lo; n <= hi; ++n) {
            const std::size_t i = std::size_t(n - lo);
            const std::size_t xd = x.component(n).dim(), yd = y.component(n).dim();
            f.push_back(Matrix::unvec(v.block(h.offsets[i], 0, xd * yd, 1), yd, xd));
        }
        out.representatives.push_back(std::move(f));
    }
    if (out.representatives.size() != out.quotient) {
        throw InconsistencyError("nullhomotopic maps are not contained in the chain maps");
    }
    return out;
}

HomotopyClassSpace homotopy_classes(const ChainComplex& x, const ChainComplex& y) {
    if (x.empty() || y.empty()) return homotopy_classes_on(x, y, 0, -1);
    return homotopy_classes_on(x, y, std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

bool is_essential_chain_map(const ChainComplex& x, const ChainComplex& y, int lo, const std::vector<Matrix>& f) {
    const int hi = lo + int(f.size()) - 1;
    for (int n = lo; n <= hi; ++n) {
        const std::size_t i = std::size_t(n - lo);
        if (!ModuleHom{x.component(n), y.component(n), f[i]}.is_valid()) return false;
        if (n < hi && !(y.differential(n).matrix * f[i] == f[i + 1] * x.differential(n).matrix)) return false;
    }
    HomotopyAssembly h = assemble(x, y, lo, hi);
    return !solve_right(h.homotopies, stack_vec(f, x.field(), h.ambient)).solvable;
}

std::size_t ext1_dw(const ChainComplex& z, const ChainComplex& x) {
    return homotopy_classes(z, suspension(x)).quotient;
}

DgTestResult dg_test(const ChainComplex& x, const ClassOracle& left, const ClassOracle& right,
                     const std::vector<ChainComplex>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!class_membership(family[i], right, ClassKind::Tilde)) {
            throw InvalidArgument("test family member " + std::to_string(i) + " is not in tilde(" + right.name() + ")");
        }
    }
    DgTestResult r;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        if (!left(x.component(n))) {
            r.failing_degree = n;
            r.reason = "component in degree " + std::to_string(n) + " is not in " + left.name();
            return r;
        }
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        HomotopyClassSpace hc = homotopy_classes(x, family[i]);
        if (hc.quotient > 0) {
            r.witness = i;
            r.witness_lo = hc.lo;
            r.witness_map = hc.representatives.front();
            r.reason = "non-nullhomotopic chain map into family member " + std::to_string(i);
            return r;
        }
    }
    r.pass = true;
    r.reason = "passes relative to a family of " + std::to_string(family.size()) + " complexes";
    return r;
}

std::vector<ChainComplex> standard_family(const std::vector<Module>& modules,
                                          const std::vector<ChainComplex>& acyclic, int lo, int hi) {
    std::vector<ChainComplex> out;
    for (const auto& m : modules)
        for (int n = lo - 1; n <= hi; ++n) out.push_back(disk_complex(m, n));
    for (const auto& a : acyclic) {
        if (a.empty()) continue;
        for (int k = a.lo() - hi - 1; k <= a.hi() - lo + 1; ++k) out.push_back(shift(a, k));
    }
    return out;
}

bool is_chain_map(const ChainComplex& x, const ChainComplex& y, const ChainMap& f) {
    auto at = [&](int n) -> Matrix {
        if (n < f.lo || n >= f.lo + int(f.components.size())) {
            return Matrix(x.field(), y.component(n).dim(), x.component(n).dim());
        }
        return f.components[std::size_t(n - f.lo)];
    };
    const int lo = std::min({x.lo(), y.lo(), f.lo}) - 1;
    const int hi = std::max({x.hi(), y.hi(), f.lo + int(f.components.size())}) + 1;
    for (int n = lo; n <= hi; ++n) {
        Matrix fn = at(n);
        if (fn.rows() != y.component(n).dim() || fn.cols() != x.component(n).dim()) return false;
        if (!ModuleHom{x.component(n), y.component(n), fn}.is_valid()) return false;
        if (!(y.differential(n).matrix * fn == at(n + 1) * x.differential(n).matrix)) return false;
    }
    return true;
}

WeakTrivialityWitness witness_weak_triviality(const GorensteinContext& ctx, const ChainComplex& x) {
    if (!(*x.algebra() == *ctx.algebra)) throw InvalidArgument("witness_weak_triviality: complex is not over the context algebra");
    if (!is_acyclic(x)) throw PreconditionError("witness_weak_triviality requires an acyclic complex");
    const Field field = x.field();
    if (x.empty() || class_membership(x, ClassOracle::finite_pd(ctx), ClassKind::Tilde)) {
        std::vector<Matrix> ids, zeros;
        std::vector<Module> zero_comps;
        for (int n = x.lo(); n <= x.hi(); ++n) {
            ids.push_back(Matrix::identity(field, x.component(n).dim()));
            zeros.push_back(Matrix(field, 0, x.component(n).dim()));
        }
        ChainComplex zero = ChainComplex::zero(x.algebra());
        return {x, zero, {x.lo(), ids}, {x.lo(), zeros}};
    }

    const int lo = x.lo(), hi = x.hi();
    std::vector<Module> fs;
    std::vector<ModuleHom> x_to_f, h_to_f, f_to_h;

    Submodule z = cycles(x, lo);
    Module h = zero_module(x.algebra());
    ModuleHom z_in = zero_hom(z.module, h);
    for (int n = lo;; ++n) {
        if (n > hi + int(ctx.d) + 2) throw InconsistencyError("weak triviality construction did not terminate");
        Pushout po = pushout(z.inclusion, z_in);
        FpdHull hull = fpd_hull(ctx, po.module);
        ModuleHom xf = compose(hull.inclusion, po.from_first);
        ModuleHom hf = compose(hull.inclusion, po.from_second);
        QuotientModule next_h = cokernel(hf);

        Submodule z_next = cycles(x, n + 1);
        auto pre = solve_right(x.differential(n).matrix, z_next.inclusion.matrix);
        if (!pre.solvable) throw InconsistencyError("complex is not exact");
        z_in = ModuleHom{z_next.module, next_h.module, next_h.projection.matrix * xf.matrix * pre.solution};

        fs.push_back(hull.hull);
        x_to_f.push_back(xf);
        h_to_f.push_back(hf);
        f_to_h.push_back(next_h.projection);
        z = z_next;
        h = next_h.module;
        if (n >= hi && h.is_zero()) break;
    }

    const std::size_t len = fs.size();
    std::vector<Matrix> fd;
    for (std::size_t i = 0; i + 1 < len; ++i) fd.push_back(h_to_f[i + 1].matrix * f_to_h[i].matrix);
    ChainComplex f(x.algebra(), lo, fs, fd);

    std::vector<Module> cs;
    std::vector<Matrix> to_c, sections, inc;
    for (std::size_t i = 0; i < len; ++i) {
        QuotientModule q = cokernel(x_to_f[i]);
        cs.push_back(q.module);
        to_c.push_back(q.projection.matrix);
        sections.push_back(q.section);
        inc.push_back(x_to_f[i].matrix);
    }
    std::vector<Matrix> cd;
    for (std::size_t i = 0; i + 1 < len; ++i) cd.push_back(to_c[i + 1] * fd[i] * sections[i]);
    ChainComplex c(x.algebra(), lo, cs, cd);

    WeakTrivialityWitness w{f, c, {lo, inc}, {lo, to_c}};
    if (auto err = verify_weak_triviality(ctx, x, w)) throw CertificateError("weak triviality witness failed: " + *err);
    return w;
}

std::optional<std::string> verify_weak_triviality(const GorensteinContext& ctx, const ChainComplex& x,
                                                  const WeakTrivialityWitness& w) {
    if (auto err = validate_complex(w.f)) return "F: " + *err;
    if (auto err = validate_complex(w.c)) return "C: " + *err;
    if (!is_chain_map(x, w.f, w.inclusion)) return "X -> F is not a chain map";
    if (!is_chain_map(w.f, w.c, w.projection)) return "F -> C is not a chain map";
    const int lo = std::min({x.lo(), w.f.lo(), w.c.empty() ? w.f.lo() : w.c.lo()});
    const int hi = std::max({x.hi(), w.f.hi(), w.c.hi()});
    for (int n = lo; n <= hi; ++n) {
        const std::size_t xd = x.component(n).dim(), fd = w.f.component(n).dim(), cd = w.c.component(n).dim();
        if (xd + cd != fd) return "degree " + std::to_string(n) + ": dimensions do not add up";
        auto pick = [&](const ChainMap& m, std::size_t rows, std::size_t cols) {
            if (n < m.lo || n >= m.lo + int(m.components.size())) return Matrix(x.field(), rows, cols);
            return m.components[std::size_t(n - m.lo)];
        };
        Matrix i = pick(w.inclusion, fd, xd), p = pick(w.projection, cd, fd);
        if (rank(i) != xd) return "degree " + std::to_string(n) + ": X -> F not injective";
        if (rank(p) != cd) return "degree " + std::to_string(n) + ": F -> C not surjective";
        if (!(p * i).is_zero()) return "degree " + std::to_string(n) + ": composite not zero";
    }
    if (!class_membership(w.f, ClassOracle::finite_pd(ctx), ClassKind::Tilde)) return "F is not in tilde(finite pd)";
    if (!class_membership(w.c, ClassOracle::gorenstein_projective(ctx), ClassKind::Tilde)) return "C is not in tilde(GP)";
    return std::nullopt;
}

FreeReplacement free_replacement(const ChainComplex& x, int bottom) {
    const Field field = x.field();
    const AlgebraPtr& a = x.algebra();
    const int top = x.empty() ? bottom - 1 : x.hi();
    if (top < bottom) return {ChainComplex::zero(a), {bottom, {}}};

    // built downward; index 0 is degree top
    std::vector<Module> ps;
    std::vector<Matrix> dps;   // d_P^n : P^n -> P^{n+1}
    std::vector<Matrix> phis;  // phi^n : P^n -> X^n
    Module p1 = zero_module(a), p2 = zero_module(a);
    Matrix dp1(field, 0, 0), phi1(field, x.component(top + 1).dim(), 0);
    for (int n = top; n >= bottom; --n) {
        Module xn = x.component(n), xn1 = x.component(n + 1);
        Module v = direct_sum(p1, xn);
        Module w = direct_sum(p2, xn1);
        Matrix constraint(field, w.dim(), v.dim());
        constraint.set_block(0, 0, dp1);
        constraint.set_block(p2.dim(), 0, phi1);
        constraint.set_block(p2.dim(), p1.dim(), -x.differential(n).matrix);
        Submodule e = kernel(ModuleHom{v, w, constraint});
        FreeCover fc = free_cover(e.module);
        Matrix into_v = e.inclusion.matrix * fc.projection.matrix;
        Matrix dp = into_v.block(0, 0, p1.dim(), into_v.cols());
        Matrix phi = into_v.block(p1.dim(), 0, xn.dim(), into_v.cols());
        ps.push_back(fc.cover);
        dps.push_back(dp);
        phis.push_back(phi);
        p2 = p1;
        p1 = fc.cover;
        dp1 = dp;
        phi1 = phi;
    }
    std::reverse(ps.begin(), ps.end());
    std::reverse(dps.begin(), dps.end());
    std::reverse(phis.begin(), phis.end());
    dps.pop_back();  // the top one maps to the zero module above
    return {ChainComplex(a, bottom, ps, dps), {bottom, phis}};
}

StableObject realize_complex(const GorensteinContext& ctx, const ChainComplex& x, Stabilization variant,
                             std::size_t splice_offset) {
    if (!(*x.algebra() == *ctx.algebra)) throw InvalidArgument("realize_complex: complex is not over the context algebra");
    std::optional<int> lowest;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        if (homology(x, n) != 0) {
            lowest = n;
            break;
        }
    }
    if (!lowest) return {zero_module(ctx.algebra)};

    const bool right = variant == Stabilization::Right;
    const int pick = right ? 1 : 0;
    const int s = *lowest - int(ctx.d + splice_offset) - (right ? 1 : 0);
    const int bottom = std::min(s, pick) - 1;
    FreeReplacement fr = free_replacement(x, bottom);
    auto coker_at = [&](int n) { return quotient_module(fr.p.component(n), fr.p.differential(n - 1).matrix).module; };

    if (s > pick) return {coker_at(pick)};
    Module g = coker_at(s);
    if (!is_gorenstein_projective(ctx, g).gorenstein_projective) {
        throw CertificateError("splice module is not Gorenstein projective; declared Gorenstein dimension d = " +
                               std::to_string(ctx.d) + " is too small");
    }
    return {cosyzygy_power(ctx, g, std::size_t(pick - s))};
}

}  // namespace ghal
