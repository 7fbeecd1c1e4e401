#include "quartix/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "quartix/errors.hpp"

namespace quartix {
namespace {

// Plain bisection on a piece where p is strictly monotone with a sign
// change across [lo, hi].
double bisect_monotone(const Poly& p, double lo, double hi) {
    double flo = p(lo);
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;
        const double fm = p(m);
        if (fm == 0.0) return m;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = m;
            flo = fm;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

RootRecord make_record(double v, int mult, double tol) {
    const double w =
        std::max(tol, 64.0 * std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(v));
    RootRecord rec;
    rec.value = v;
    rec.multiplicity = mult;
    rec.lo = v - w;
    rec.hi = v + w;
    return rec;
}

// Root recovery from the sign skeleton alone: every strict sign opposition
// between consecutive chain nodes brackets exactly one simple root on a
// monotone piece, and every Zero node is a tangency at the extremum itself.
RootSet roots_from_skeleton(const Poly& p, const Classification& cls, const ExtremaSet& ext,
                            double bound, double tol) {
    RootSet out;
    if (cls.regime == Regime::Theorem1) {
        out.roots.push_back(make_record(bisect_monotone(p, 0.0, bound), 1, tol));
        return out;
    }
    std::array<double, 6> node{0.0, 0.0, 0.0, 0.0, 0.0, bound};
    std::array<Sign, 6> sign{Sign::Neg, Sign::Zero, Sign::Zero, Sign::Zero, Sign::Zero, Sign::Pos};
    for (int i = 0; i < 4; ++i) {
        node[i + 1] = ext.lambda[i];
        sign[i + 1] = cls.pattern.s[i];
    }
    for (int i = 1; i <= 4; ++i) {
        if (sign[i] == Sign::Zero)
            out.roots.push_back(make_record(node[i], root_multiplicity(p, node[i]), tol));
    }
    for (int i = 0; i < 5; ++i) {
        const bool opposed = (sign[i] == Sign::Neg && sign[i + 1] == Sign::Pos) ||
                             (sign[i] == Sign::Pos && sign[i + 1] == Sign::Neg);
        if (opposed)
            out.roots.push_back(make_record(bisect_monotone(p, node[i], node[i + 1]), 1, tol));
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootRecord& a, const RootRecord& b) { return a.value < b.value; });
    return out;
}

}  // namespace

AnalysisReport count_fixed_points(const QuarticOperator& op, const AnalysisOptions& opt) {
    if (!opt.run_oracle && !opt.run_closed_form)
        throw std::invalid_argument(
            "count_fixed_points: at least one of oracle and closed form must be enabled");

    AnalysisReport rep;
    const Quintic q = build_quintic(op);
    const Poly p = q.poly();
    rep.mu = q.mu;
    rep.descartes_bound = descartes_bound(p);

    if (opt.run_closed_form) {
        rep.resolvent = resolvent(q);
        try {
            rep.extrema = ferrari_extrema(q, *rep.resolvent);
        } catch (const ClosedFormUnavailable&) {
        }
        if (rep.extrema) {
            std::array<double, 4> vals{};
            for (int i = 0; i < 4; ++i) vals[i] = p(rep.extrema->lambda[i]);
            rep.p5_at_lambda = vals;
        }
        rep.classification = classify(q, *rep.resolvent, rep.extrema, opt.zero_band_rel);
    } else {
        rep.classification.notes.push_back("closed-form analysis disabled");
    }

    const bool decisive =
        rep.classification.n_fix.has_value() && !rep.classification.pattern.ambiguous();

    if (opt.run_oracle) {
        rep.roots = isolate_real_roots(p, 0.0, cauchy_root_bound(p), opt.root_tol);
        rep.n_fix = rep.roots.distinct_count();
        if (decisive) {
            rep.consistent = (*rep.classification.n_fix == rep.n_fix);
            rep.method = rep.consistent ? Method::ClosedForm : Method::OracleFallback;
        } else {
            rep.consistent = true;
            rep.method = Method::OracleFallback;
        }
    } else {
        if (!decisive)
            throw ClosedFormUnavailable(
                "closed form is not decisive for this input; rerun with the oracle enabled");
        rep.roots = roots_from_skeleton(p, rep.classification, *rep.extrema, cauchy_root_bound(p),
                                        opt.root_tol);
        rep.n_fix = rep.roots.distinct_count();
        rep.method = Method::ClosedForm;
        rep.consistent = (rep.n_fix == *rep.classification.n_fix);
        if (!rep.consistent)
            throw CertificationError("skeleton-guided root recovery disagrees with the catalog count");
    }

    rep.fixed_points.reserve(rep.roots.roots.size());
    for (const RootRecord& r : rep.roots.roots) {
        FixedPoint fp = recover_fixed_point(op, r.value);
        fp.multiplicity = r.multiplicity;
        rep.fixed_points.push_back(fp);
    }
    return rep;
}

}  // namespace quartix
