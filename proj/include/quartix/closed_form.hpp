#pragma once

#include <array>
#include <optional>

#include "quartix/poly.hpp"

namespace quartix {

// Data of the depressed quartic w^4 + p w^2 + q w + r obtained from
// P5'(xi)/(5 mu0) by the shift xi = w - mu1/(5 mu0), together with its
// resolvent cubic z^3 + p z^2 + (p^2 - 4r)/4 z - q^2/8 in depressed form
// t^3 + a t + b  (z = t - p/3) and the discriminant quantity
// Q = (a/3)^3 + (b/2)^2.
//
// alpha and z0 are populated only in the casus irreducibilis (Q < 0, a < 0):
// alpha = arccos(-(b/2) (-3/a)^(3/2)) in [0, pi], and z0 = the least root of
// the resolvent cubic.  degenerate_cubic marks |a| underflow while Q < 0.
struct ResolventData {
    double p = 0.0, q = 0.0, r = 0.0;
    double a = 0.0, b = 0.0;
    double Q = 0.0;
    std::optional<double> alpha;
    std::optional<double> z0;
    bool degenerate_cubic = false;
};

// Throws std::invalid_argument when mu0 <= 0.
ResolventData resolvent(const Quintic& quintic);

// Real roots of t^3 + a t + b = 0 in the casus irreducibilis, indexed so
// that eta3 < eta1 < eta2.  Throws std::domain_error when Q >= 0 (three real
// roots unavailable) or when |a| underflows (degenerate depressed cubic).
struct CardanoRoots {
    double eta1 = 0.0, eta2 = 0.0, eta3 = 0.0;
};
CardanoRoots cardano_real_roots(double a, double b);

// The four real critical points of P5.
struct ExtremaSet {
    std::array<double, 4> xi_ext{};  // Ferrari branch order (unsorted)
    std::array<double, 4> lambda{};  // ascending

    double xi_min() const { return lambda[0]; }
    double xi_max() const { return lambda[3]; }
};

// Ferrari extrema of P5 via the resolvent data.  Every returned lambda is
// certified against P5' within 1e-9 * scale, the lambdas are pairwise
// separated, and the second derivative alternates (-,+,-,+), i.e. local
// maxima at lambda1, lambda3 and local minima at lambda2, lambda4.
//
// |q| below tolerance takes the biquadratic route w^2 = (-p +- sqrt(p^2-4r))/2
// (the resolvent has a zero root there and z0 is unusable).  Throws
// ClosedFormUnavailable when the extrema are not four distinct reals.
ExtremaSet ferrari_extrema(const Quintic& quintic, const ResolventData& rd);

}  // namespace quartix
