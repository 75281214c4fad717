#include "tmc/solver.hpp"

namespace tmc {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "Found";
        case SolveStatus::NoMeasure: return "NoMeasure";
        case SolveStatus::NoMeasureFound: return "NoMeasureFound";
    }
    return "?";
}

namespace {

std::optional<std::string> necessary_conditions(const MomentMatrix& mm, const CurveSpec& curve) {
    if (psd_status(mm.data).cls == PsdClass::Indefinite) return "M(n) is not positive semidefinite";
    if (mm.n >= curve.m && !is_column_relation(mm, curve.relation())) return "p(X, Y) = 0 is not a column relation of M(n)";
    const RgReport rg = is_recursively_generated(mm);
    if (!rg.ok) return "M(n) is not recursively generated: " + rg.relation.to_string() + " times x^" +
                       std::to_string(rg.multiplier.i) + " y^" + std::to_string(rg.multiplier.j);
    return std::nullopt;
}

void recover_and_verify(SolveOutcome& out, const MomentSequence2D& beta, const CurveSpec& curve, const SolveOptions& opts,
                        const Sequence<Real>& completed, const KernelRelation<Real>* relation) {
    AtomicMeasure mu;
    try {
        mu = relation ? recover_from_relation(completed, *relation, curve, out.n, opts.tol_rank)
                      : recover_from_sequence(completed, curve, out.n, opts.tol_rank);
    } catch (const Error& e) {
        out.status = SolveStatus::NoMeasureFound;
        out.reason = e.what();
        return;
    }
    VerifyReport rep = verify_measure(mu, beta, curve, opts.verify_tol, out.rank_m);
    if (!rep.ok()) {
        AtomicMeasure kept = drop_near_zero_atoms(mu, Real(1e-8), Real(1e-8));
        if (kept.atoms.size() < mu.atoms.size()) {
            VerifyReport again = verify_measure(kept, beta, curve, opts.verify_tol, out.rank_m);
            if (again.ok()) {
                mu = std::move(kept);
                rep = std::move(again);
                out.dropped_atoms = true;
            }
        }
    }
    out.measure = std::move(mu);
    out.status = rep.ok() ? SolveStatus::Found : SolveStatus::NoMeasureFound;
    if (!rep.ok()) out.reason = "recovered measure failed verification: " + rep.violations.front();
    out.report = std::move(rep);
}

void solve_cubic(SolveOutcome& out, const StrongSequence& gamma, const MomentSequence2D& beta, const CurveSpec& curve,
                 const SolveOptions& opts) {
    CubicResult res;
    if (out.rank_m < 3 * out.n) {
        res = cubic_singular_solve(gamma);
    } else {
        try {
            res = cubic_pure_solve(gamma, opts.root_choice, opts.tol_psd);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotPure) throw;
            res = cubic_singular_solve(gamma);
        }
    }
    out.cubic = res.cert;
    if (res.cert.branch == CubicBranch::NoMeasure || !res.completed) {
        out.status = SolveStatus::NoMeasure;
        out.reason = res.cert.reason;
        return;
    }
    recover_and_verify(out, beta, curve, opts, *res.completed, nullptr);
}

void solve_quartic(SolveOutcome& out, const StrongSequence& gamma, const MomentSequence2D& beta, const CurveSpec& curve,
                   const SolveOptions& opts) {
    QuarticOptions qo;
    qo.tol = opts.tol_psd;
    qo.search_iters = opts.search_iters;
    QuarticResult res = quartic_solve(gamma, qo);
    out.quartic = res.cert;
    if (res.cert.branch == QuarticBranch::NoMeasure || res.cert.branch == QuarticBranch::NoMeasureFound || !res.completed) {
        out.status = res.cert.branch == QuarticBranch::NoMeasure ? SolveStatus::NoMeasure : SolveStatus::NoMeasureFound;
        out.reason = res.cert.reason;
        return;
    }
    recover_and_verify(out, beta, curve, opts, *res.completed, res.relation ? &*res.relation : nullptr);
}

}  // namespace

SolveOutcome solve(const MomentSequence2D& beta, const CurveSpec& curve, const SolveOptions& opts) {
    curve.validate();
    if (curve.m != 3 && curve.m != 4) throw Error(ErrorCode::WrongDegree, "solve supports m = 3 and m = 4");
    if (beta.degree() % 2) throw Error(ErrorCode::InvalidInput, "moment degree must be even");
    SolveOutcome out;
    out.m = curve.m;
    out.n = beta.degree() / 2;
    if (out.n < 1) throw Error(ErrorCode::InvalidInput, "moment degree must be at least 2");
    const MomentMatrix mm = moment_matrix(beta);
    out.rank_m = rank(mm.data);
    if (auto why = necessary_conditions(mm, curve)) {
        out.status = SolveStatus::NoMeasure;
        out.reason = *why;
        return out;
    }
    const StrongSequence gamma = reduce(beta, curve);
    if (curve.m == 3)
        solve_cubic(out, gamma, beta, curve, opts);
    else
        solve_quartic(out, gamma, beta, curve, opts);
    return out;
}

}  // namespace tmc
