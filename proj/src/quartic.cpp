#include "tmc/quartic.hpp"

#include <algorithm>

namespace tmc {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

const char* quartic_branch_name(QuarticBranch b) {
    switch (b) {
        case QuarticBranch::PureInterior: return "PureInterior";
        case QuarticBranch::SingularI: return "Singular-i";
        case QuarticBranch::SingularII: return "Singular-ii";
        case QuarticBranch::SingularIII: return "Singular-iii";
        case QuarticBranch::SingularIV: return "Singular-iv";
        case QuarticBranch::SingularV: return "Singular-v";
        case QuarticBranch::NoMeasure: return "NoMeasure";
        case QuarticBranch::NoMeasureFound: return "NoMeasureFound";
    }
    return "?";
}

namespace {

void require_quartic(const StrongSequence& gamma) {
    if (gamma.m != 4) throw Error(ErrorCode::WrongDegree, "quartic solver needs m = 4");
    if (gamma.parameter_count() != 3) throw Error(ErrorCode::InvalidInput, "expected three free moments");
}

template <typename T>
Sequence<T> at(const StrongSequence& gamma, const T& t1, const T& t2, const T& t3) {
    return evaluate<T>(gamma, {{1, t1}, {2, t2}, {3, t3}});
}

template <typename T>
Vector<T> slice(const Sequence<T>& s, int from, int to) {
    Vector<T> v;
    for (int k = from; k <= to; ++k) v.push_back(s[k]);
    return v;
}

}  // namespace

Matrix<Rational> quartic_core(const StrongSequence& gamma) {
    require_quartic(gamma);
    const int n = gamma.n;
    return assemble(at<Rational>(gamma, 0, 0, 0), -n + 1, 3 * n - 2).data;
}

template <typename T>
Matrix<T> quartic_f1(const StrongSequence& gamma, const T& t1) {
    require_quartic(gamma);
    const int n = gamma.n;
    return assemble(at<T>(gamma, t1, T(0), T(0)), -n + 1, 3 * n - 1).data;
}

template Matrix<Rational> quartic_f1(const StrongSequence&, const Rational&);
template Matrix<Real> quartic_f1(const StrongSequence&, const Real&);

F1Quadratic f1_quadratic(const StrongSequence& gamma) {
    F1Quadratic q;
    const Rational p0 = determinant(quartic_f1<Rational>(gamma, 0));
    const Rational p1 = determinant(quartic_f1<Rational>(gamma, 1));
    const Rational pm = determinant(quartic_f1<Rational>(gamma, -1));
    q.c0 = p0;
    q.c1 = (p1 - pm) / 2;
    q.c2 = (p1 + pm) / 2 - p0;
    if (q.c2 == 0) return q;
    const Rational disc = q.c1 * q.c1 - 4 * q.c2 * q.c0;
    if (disc < 0) return q;
    q.has_roots = true;
    Rational root;
    if (exact_square_root(disc, root)) {
        Rational a = (-q.c1 - root) / (2 * q.c2), b = (-q.c1 + root) / (2 * q.c2);
        if (a > b) std::swap(a, b);
        q.lo_exact = a;
        q.hi_exact = b;
        q.lo = to_real(a);
        q.hi = to_real(b);
    } else {
        const Real s = sqrt(to_real(disc));
        Real a = (-to_real(q.c1) - s) / (2 * to_real(q.c2)), b = (-to_real(q.c1) + s) / (2 * to_real(q.c2));
        if (a > b) std::swap(a, b);
        q.lo = a;
        q.hi = b;
    }
    return q;
}

QuarticSlacks quartic_slacks(const StrongSequence& gamma, const Real& t1, const Real& t2, const Real& t3) {
    require_quartic(gamma);
    const int n = gamma.n;
    const Sequence<Real> s = at<Real>(gamma, t1, t2, t3);
    const Matrix<Real> b = assemble(s, -n + 1, 3 * n - 1).data;
    const Vector<Real> z2 = slice(s, -2 * n + 1, 2 * n - 1);
    const Vector<Real> c2 = slice(s, 2 * n + 1, 6 * n - 1);
    auto u = solve(b, z2);
    auto v = solve(b, c2);
    if (!u || !v) throw Error(ErrorCode::NotPSD, "F1(t1) is singular");
    QuarticSlacks out;
    out.slack3 = t3 - dot(c2, *v);
    const Real p = dot(z2, *v) - s[2 * n];
    out.slack5 = s[-2 * n] - dot(z2, *u) - p * p / out.slack3;
    return out;
}

std::optional<ExactSlacks> quartic_slacks_exact(const StrongSequence& gamma, const Rational& t1, const Rational& t2,
                                                const Rational& t3) {
    require_quartic(gamma);
    const int n = gamma.n;
    const Sequence<Rational> s = at<Rational>(gamma, t1, t2, t3);
    const Vector<Rational> c2 = slice(s, 2 * n + 1, 6 * n - 1);
    auto x = solve_any(assemble(s, -n + 1, 3 * n - 1).data, c2);
    const Vector<Rational> y = slice(s, -2 * n + 1, 2 * n);
    auto x2 = solve_any(assemble(s, -n + 1, 3 * n).data, y);
    if (!x || !x2) return std::nullopt;
    return ExactSlacks{t3 - dot(c2, *x), s[-2 * n] - dot(y, *x2)};
}

namespace {

// Everything the closed-form inner maximization needs that does not depend on t1.
struct Context {
    const StrongSequence* gamma = nullptr;
    int n = 0;
    Real cc, dc, ec, kappa, root_kappa;
};

Context make_context(const StrongSequence& gamma) {
    Context ctx;
    ctx.gamma = &gamma;
    ctx.n = gamma.n;
    const AffineScalar& g = gamma[-2 * gamma.n];
    ctx.cc = to_real(g.constant());
    ctx.dc = to_real(g.coefficient(1));
    ctx.ec = to_real(g.coefficient(2));
    ctx.kappa = -to_real(g.coefficient(3));
    if (!(ctx.kappa > 0)) throw Error(ErrorCode::InvalidInput, "unexpected sign of the t3 coefficient in gamma_{-2n}");
    ctx.root_kappa = sqrt(ctx.kappa);
    return ctx;
}

// For fixed t1, with B = F1(t1):
//   S(t2) = c2' B^-1 c2          (lower bound for t3)
//   P(t2) = c2' B^-1 z2 - gamma_2n
//   K(t2) = gamma_{-2n}(t1, t2, S) - z2' B^-1 z2
// and with w2 = t3 - S > 0 the (ineq-5) slack is K - kappa w2 - P^2 / w2, maximized at
// w2 = |P| / sqrt(kappa) where it equals g(t2) = K - 2 sqrt(kappa) |P|, a concave function.
struct Inner {
    bool ok = false;
    Real g, t2, p, s;
};

struct Quadratics {
    Real s0, s1, s2;  // S = s0 + s1 t2 + s2 t2^2
    Real p0, p1;      // P = p0 + p1 t2
    Real k0, k1, k2;  // K = k0 + k1 t2 + k2 t2^2
};

std::optional<Quadratics> quadratics(const Context& ctx, const Real& t1) {
    const int n = ctx.n;
    const Sequence<Real> s = at<Real>(*ctx.gamma, t1, Real(0), Real(0));
    const Matrix<Real> b = assemble(s, -n + 1, 3 * n - 1).data;
    const int k = b.rows();
    Matrix<Real> rhs(k, 3);
    for (int i = 0; i < k; ++i) {
        rhs(i, 0) = s[-2 * n + 1 + i];  // z2
        rhs(i, 1) = s[2 * n + 1 + i];   // c2 with t2 = 0
    }
    rhs(k - 1, 2) = 1;
    auto x = solve(b, rhs);
    if (!x) return std::nullopt;
    Real zu = 0, cv = 0, cu = 0;
    for (int i = 0; i < k; ++i) {
        zu += rhs(i, 0) * (*x)(i, 0);
        cv += rhs(i, 1) * (*x)(i, 1);
        cu += rhs(i, 1) * (*x)(i, 0);
    }
    Quadratics q;
    q.s0 = cv;
    q.s1 = 2 * (*x)(k - 1, 1);
    q.s2 = (*x)(k - 1, 2);
    q.p0 = cu - s[2 * n];
    q.p1 = (*x)(k - 1, 0);
    q.k0 = ctx.cc + ctx.dc * t1 - ctx.kappa * q.s0 - zu;
    q.k1 = ctx.ec - ctx.kappa * q.s1;
    q.k2 = -ctx.kappa * q.s2;
    return q;
}

Inner inner_max(const Context& ctx, const Real& t1) {
    Inner best;
    auto q = quadratics(ctx, t1);
    if (!q || !(q->s2 > 0)) return best;
    auto g = [&](const Real& t2) {
        return q->k0 + q->k1 * t2 + q->k2 * t2 * t2 - 2 * ctx.root_kappa * abs(q->p0 + q->p1 * t2);
    };
    std::vector<Real> candidates;
    for (int sigma : {1, -1}) candidates.push_back((q->k1 - 2 * ctx.root_kappa * sigma * q->p1) / (-2 * q->k2));
    if (q->p1 != 0) candidates.push_back(-q->p0 / q->p1);
    for (const auto& t2 : candidates) {
        Real v = g(t2);
        if (!best.ok || v > best.g) {
            best.ok = true;
            best.g = v;
            best.t2 = t2;
        }
    }
    best.p = q->p0 + q->p1 * best.t2;
    best.s = q->s0 + q->s1 * best.t2 + q->s2 * best.t2 * best.t2;
    return best;
}

struct SearchResult {
    bool ok = false;
    Real t1;
    Inner inner;
};

SearchResult search(const Context& ctx, const Real& lo, const Real& hi, const QuarticOptions& opts) {
    SearchResult best;
    auto consider = [&](const Real& t1) {
        Inner in = inner_max(ctx, t1);
        if (in.ok && (!best.ok || in.g > best.inner.g)) {
            best.ok = true;
            best.t1 = t1;
            best.inner = in;
        }
        return in.ok ? in.g : Real(-std::numeric_limits<Real>::infinity());
    };
    const int grid = std::max(opts.grid, 3);
    const Real width = hi - lo;
    int best_j = -1;
    Real best_g;
    for (int j = 0; j < grid; ++j) {
        Real t1 = lo + width * (Real(j) + Real(0.5)) / grid;
        Real v = consider(t1);
        if (best_j < 0 || v > best_g) {
            best_j = j;
            best_g = v;
        }
    }
    if (!best.ok) return best;
    Real a = best_j == 0 ? lo : Real(lo + width * (Real(best_j) - Real(0.5)) / grid);
    Real b = best_j == grid - 1 ? hi : Real(lo + width * (Real(best_j) + Real(1.5)) / grid);
    const Real phi = (sqrt(Real(5)) - 1) / 2;
    Real c = b - phi * (b - a), d = a + phi * (b - a);
    Real fc = consider(c), fd = consider(d);
    for (int it = 0; it < opts.search_iters; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = consider(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = consider(d);
        }
    }
    return best;
}

void fill_triple(QuarticCertificate& cert, const std::map<int, Real>& a) {
    cert.t1 = a.at(1);
    cert.t2 = a.at(2);
    cert.t3 = a.at(3);
}

bool accept_real(QuarticResult& res, QuarticBranch branch, const StrongSequence& gamma, const KernelRelation<Real>& rel,
                 const std::map<int, Real>& known, const Real& tol, const std::string& label) {
    QuarticCertificate& cert = res.cert;
    PropagationResult<Real> prop = propagate_relation(gamma, rel, known, tol);
    if (!prop.consistent) {
        cert.attempts.push_back(label + ": " + prop.reason);
        return false;
    }
    const PsdReport psd = psd_status(assemble_full(prop.sequence).data, tol);
    if (psd.cls == PsdClass::Indefinite) {
        cert.attempts.push_back(label + ": completion is not positive semidefinite (min eigenvalue " +
                                to_string(psd.min_eigenvalue, 4) + ")");
        return false;
    }
    cert.attempts.push_back(label + ": consistent");
    cert.branch = branch;
    cert.reason.clear();
    cert.min_eig = psd.min_eigenvalue;
    fill_triple(cert, prop.assignment);
    res.completed = std::move(prop.sequence);
    res.relation = rel;
    return true;
}

bool accept_exact(QuarticResult& res, QuarticBranch branch, const StrongSequence& gamma, const KernelRelation<Rational>& rel,
                  const std::map<int, Rational>& known, const std::string& label) {
    QuarticCertificate& cert = res.cert;
    PropagationResult<Rational> prop = propagate_relation(gamma, rel, known, Rational(0));
    if (!prop.consistent) {
        cert.attempts.push_back(label + ": " + prop.reason);
        return false;
    }
    const Matrix<Rational> full = assemble_full(prop.sequence).data;
    if (psd_status(full).cls == PsdClass::Indefinite) {
        cert.attempts.push_back(label + ": completion is not positive semidefinite");
        return false;
    }
    cert.attempts.push_back(label + ": consistent");
    cert.branch = branch;
    cert.reason.clear();
    cert.min_eig = psd_status(to_real(full), Real(0)).min_eigenvalue;
    std::map<int, Real> a;
    for (const auto& [k, v] : prop.assignment) a[k] = to_real(v);
    fill_triple(cert, a);
    KernelRelation<Real> r{rel.i1, rel.i2, to_real(rel.a)};
    res.relation = r;
    res.completed = to_real(prop.sequence);
    res.completed_exact = std::move(prop.sequence);
    return true;
}

// Branch (i): the smallest singular leading block of the core gives the relation.
bool branch_i(QuarticResult& res, const StrongSequence& gamma, const Matrix<Rational>& core) {
    const int n = gamma.n;
    for (int k = 1; k <= core.rows(); ++k) {
        const Matrix<Rational> lead = core.block(0, 0, k, k);
        if (rank(lead) == k) continue;
        const Vector<Rational> v = kernel_basis(lead).front();
        KernelRelation<Rational> rel = trim(KernelRelation<Rational>{-n + 1, -n + k, v}, Rational(0));
        return accept_exact(res, QuarticBranch::SingularI, gamma, rel, {}, "branch (i)");
    }
    return false;
}

// Branches (ii)/(iii): at a root of det F1 the kernel of F1 is (C^-1 y, -1).
bool branch_root(QuarticResult& res, const StrongSequence& gamma, const Matrix<Rational>& core, const F1Quadratic& quad,
                 bool upper, const Real& tol) {
    const int n = gamma.n;
    const QuarticBranch branch = upper ? QuarticBranch::SingularIII : QuarticBranch::SingularII;
    const std::string label = upper ? "branch (iii)" : "branch (ii)";
    const int k = core.rows();
    const auto& exact_root = upper ? quad.hi_exact : quad.lo_exact;
    if (exact_root) {
        const Matrix<Rational> f1 = quartic_f1<Rational>(gamma, *exact_root);
        Vector<Rational> y(k);
        for (int i = 0; i < k; ++i) y[i] = f1(i, k);
        auto x = solve_any(core, y);
        if (!x) return false;
        x->push_back(-1);
        KernelRelation<Rational> rel = trim(KernelRelation<Rational>{-n + 1, 3 * n - 1, *x}, Rational(0));
        return accept_exact(res, branch, gamma, rel, {{1, *exact_root}}, label);
    }
    const Real t1 = upper ? quad.hi : quad.lo;
    const Matrix<Real> f1 = quartic_f1<Real>(gamma, t1);
    Vector<Real> y(k);
    for (int i = 0; i < k; ++i) y[i] = f1(i, k);
    auto x = solve(to_real(core), y);
    if (!x) return false;
    x->push_back(Real(-1));
    KernelRelation<Real> rel = trim(KernelRelation<Real>{-n + 1, 3 * n - 1, *x}, tol);
    return accept_real(res, branch, gamma, rel, {{1, t1}}, tol, label);
}

// Branch (iv): t3 on the (ineq-3) boundary; the kernel of F2 is (B^-1 c2, -1).
bool branch_iv(QuarticResult& res, const StrongSequence& gamma, const Real& t1, const Inner& in, const Real& tol) {
    const int n = gamma.n;
    const Sequence<Real> s = at<Real>(gamma, t1, in.t2, in.s);
    auto x = solve(assemble(s, -n + 1, 3 * n - 1).data, slice(s, 2 * n + 1, 6 * n - 1));
    if (!x) return false;
    x->push_back(Real(-1));
    KernelRelation<Real> rel = trim(KernelRelation<Real>{-n + 1, 3 * n, *x}, tol);
    return accept_real(res, QuarticBranch::SingularIV, gamma, rel, {{1, t1}, {2, in.t2}}, tol, "branch (iv)");
}

// Branch (v): gamma_{-2n} on the (ineq-5) boundary; the kernel of A is (1, -F2^-1 y) and must reach T^{3n}.
bool branch_v(QuarticResult& res, const StrongSequence& gamma, const Context& ctx, const Real& t1, const Inner& in,
              const Real& tol) {
    const int n = gamma.n;
    const Real w2 = in.p != 0 ? Real(abs(in.p) / ctx.root_kappa) : Real((std::max)(in.g, Real(0)) / (2 * ctx.kappa));
    const Real t3 = in.s + w2;
    const Sequence<Real> s = at<Real>(gamma, t1, in.t2, t3);
    auto x = solve(assemble(s, -n + 1, 3 * n).data, slice(s, -2 * n + 1, 2 * n));
    if (!x) return false;
    Vector<Real> a{Real(1)};
    for (const auto& v : *x) a.push_back(-v);
    Real top = 0;
    for (const auto& v : a) top = (std::max)(top, Real(abs(v)));
    if (abs(a.back()) <= tol * top) {
        res.cert.attempts.push_back("branch (v): relation does not reach T^{3n}");
        return false;
    }
    KernelRelation<Real> rel{-n, 3 * n, a};
    return accept_real(res, QuarticBranch::SingularV, gamma, rel, {{1, t1}, {2, in.t2}, {3, t3}}, tol, "branch (v)");
}

}  // namespace

QuarticResult quartic_pure_solve(const StrongSequence& gamma, const QuarticOptions& opts) {
    require_quartic(gamma);
    QuarticResult res;
    QuarticCertificate& cert = res.cert;
    const Matrix<Rational> core = quartic_core(gamma);
    const PsdClass core_cls = psd_status(core).cls;
    cert.core_pd = core_cls == PsdClass::PD;
    if (!cert.core_pd) {
        cert.branch = core_cls == PsdClass::Indefinite ? QuarticBranch::NoMeasure : QuarticBranch::NoMeasureFound;
        cert.reason = core_cls == PsdClass::Indefinite ? "core block is not positive semidefinite" : "core block is singular";
        return res;
    }
    const F1Quadratic quad = f1_quadratic(gamma);
    cert.quadratic = quad;
    if (!(quad.c2 < 0)) {
        cert.reason = "leading coefficient of det F1 is not negative";
        return res;
    }
    if (!quad.has_roots) {
        cert.branch = QuarticBranch::NoMeasure;
        cert.reason = "det F1(t1) has no real zero";
        return res;
    }
    if (!(quad.lo < quad.hi)) {
        cert.reason = "det F1(t1) has a double zero; no interior t1";
        return res;
    }
    const Context ctx = make_context(gamma);
    const SearchResult found = search(ctx, quad.lo, quad.hi, opts);
    if (!found.ok) {
        cert.reason = "F1(t1) could not be factored on the search interval";
        return res;
    }
    const Inner& in = found.inner;
    cert.search_value = in.g;
    cert.t1 = found.t1;
    cert.t2 = in.t2;
    // |P|/sqrt(kappa) maximizes the slack but sits on the F2 boundary when P = 0; moving by g/(4 kappa)
    // keeps both slacks at least g/(4 kappa) and 3g/4
    const Real w2 = abs(in.p) / ctx.root_kappa + (std::max)(in.g, Real(0)) / (4 * ctx.kappa);
    cert.t3 = in.s + w2;
    Sequence<Real> seq = at<Real>(gamma, cert.t1, cert.t2, cert.t3);
    const PsdReport psd = psd_status(assemble_full(seq).data, opts.tol);
    cert.min_eig = psd.min_eigenvalue;
    if (w2 > 0) cert.slacks = quartic_slacks(gamma, cert.t1, cert.t2, cert.t3);
    if (psd.cls == PsdClass::PD) {
        const bool slacks_agree = cert.slacks && cert.slacks->slack3 > 0 && cert.slacks->slack5 > 0;
        cert.attempts.push_back(std::string("pure search: positive definite completion") +
                                (slacks_agree ? "" : " (slack signs disagree)"));
        cert.branch = QuarticBranch::PureInterior;
        res.completed = std::move(seq);
    } else {
        cert.attempts.push_back("pure search: best slack " + to_string(in.g, 6) + ", min eigenvalue " +
                                to_string(psd.min_eigenvalue, 6));
        cert.reason = "no positive definite completion found";
    }
    return res;
}

QuarticResult quartic_singular_solve(const StrongSequence& gamma, const QuarticOptions& opts, const QuarticResult* pure) {
    require_quartic(gamma);
    QuarticResult res;
    if (pure) res.cert = pure->cert;
    QuarticCertificate& cert = res.cert;
    const Matrix<Rational> core = quartic_core(gamma);
    const PsdClass core_cls = psd_status(core).cls;
    cert.core_pd = core_cls == PsdClass::PD;
    if (core_cls == PsdClass::Indefinite) {
        cert.branch = QuarticBranch::NoMeasure;
        cert.reason = "core block is not positive semidefinite";
        return res;
    }
    if (core_cls == PsdClass::PSD) {
        if (branch_i(res, gamma, core)) return res;
        cert.branch = QuarticBranch::NoMeasure;
        cert.reason = "relation of the singular core does not propagate";
        return res;
    }
    const F1Quadratic quad = cert.quadratic ? *cert.quadratic : f1_quadratic(gamma);
    cert.quadratic = quad;
    if (!quad.has_roots) {
        cert.branch = QuarticBranch::NoMeasure;
        cert.reason = "det F1(t1) has no real zero";
        return res;
    }
    if (branch_root(res, gamma, core, quad, false, opts.tol)) return res;
    if (quad.lo < quad.hi && branch_root(res, gamma, core, quad, true, opts.tol)) return res;

    if (quad.lo < quad.hi) {
        const Context ctx = make_context(gamma);
        Real t1;
        Inner in;
        if (pure && pure->cert.quadratic) {
            t1 = pure->cert.t1;
            in = inner_max(ctx, t1);
        } else {
            SearchResult found = search(ctx, quad.lo, quad.hi, opts);
            t1 = found.t1;
            in = found.inner;
        }
        if (in.ok) {
            // the maximizer is only as good as the search, so these branches use a looser tolerance
            const Real loose = sqrt(opts.tol);
            if (branch_iv(res, gamma, t1, in, loose)) return res;
            if (branch_v(res, gamma, ctx, t1, in, loose)) return res;
        }
    }
    cert.branch = QuarticBranch::NoMeasureFound;
    cert.reason = "no positive definite completion found and no singular branch is consistent";
    return res;
}

QuarticResult quartic_solve(const StrongSequence& gamma, const QuarticOptions& opts) {
    QuarticResult pure = quartic_pure_solve(gamma, opts);
    if (pure.cert.branch == QuarticBranch::PureInterior || pure.cert.branch == QuarticBranch::NoMeasure) return pure;
    return quartic_singular_solve(gamma, opts, &pure);
}

}  // namespace tmc
