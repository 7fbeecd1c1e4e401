#include "quartix/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quartix/errors.hpp"

namespace quartix {
namespace {

constexpr double kPi = 3.14159265358979323846;

// natural length scale of the depressed quartic, for dimensionally sane
// tolerances: p ~ L^2, q ~ L^3, r ~ L^4
double length_scale(double p, double q, double r) {
    double L = 1.0;
    L = std::max(L, std::sqrt(std::abs(p)));
    L = std::max(L, std::cbrt(std::abs(q)));
    L = std::max(L, std::pow(std::abs(r), 0.25));
    return L;
}

// In the casus irreducibilis |b/2| < (-a/3)^(3/2), so cbrt(b^2) bounds the
// natural magnitude of a; underflow of a means a (near-)triple cubic root.
bool cubic_is_degenerate(double a, double b) {
    return std::abs(a) <= 1e-12 * std::max(1.0, std::cbrt(b * b));
}

}  // namespace

ResolventData resolvent(const Quintic& quintic) {
    const double mu0 = quintic.mu[0];
    if (!(mu0 > 0.0)) throw std::invalid_argument("resolvent: mu0 must be positive");

    // monic quartic P5'/(5 mu0) = xi^4 + A xi^3 + B xi^2 + C xi + D
    const double A = 4.0 * quintic.mu[1] / (5.0 * mu0);
    const double B = 3.0 * quintic.mu[2] / (5.0 * mu0);
    const double C = 2.0 * quintic.mu[3] / (5.0 * mu0);
    const double D = quintic.mu[4] / (5.0 * mu0);

    ResolventData rd;
    rd.p = B - 3.0 * A * A / 8.0;
    rd.q = C - A * B / 2.0 + A * A * A / 8.0;
    rd.r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * A * A * A * A / 256.0;

    rd.a = -rd.p * rd.p / 12.0 - rd.r;
    rd.b = -rd.p * rd.p * rd.p / 108.0 + rd.p * rd.r / 3.0 - rd.q * rd.q / 8.0;
    rd.Q = std::pow(rd.a / 3.0, 3) + (rd.b / 2.0) * (rd.b / 2.0);

    if (rd.Q < 0.0) {
        if (cubic_is_degenerate(rd.a, rd.b)) {
            rd.degenerate_cubic = true;
        } else {
            const CardanoRoots eta = cardano_real_roots(rd.a, rd.b);
            const double m = -rd.b / 2.0 * std::pow(-3.0 / rd.a, 1.5);
            rd.alpha = std::acos(std::clamp(m, -1.0, 1.0));
            rd.z0 = eta.eta3 - rd.p / 3.0;
        }
    }
    return rd;
}

CardanoRoots cardano_real_roots(double a, double b) {
    const double Q = std::pow(a / 3.0, 3) + (b / 2.0) * (b / 2.0);
    if (!(Q < 0.0)) throw std::domain_error("cardano: Q >= 0, three real roots unavailable");
    if (cubic_is_degenerate(a, b)) throw std::domain_error("cardano: degenerate depressed cubic");

    // Q < 0 forces a < 0; clamp guards roundoff at |cos| ~ 1 (within ~1e-12)
    const double m = -b / 2.0 * std::pow(-3.0 / a, 1.5);
    const double alpha = std::acos(std::clamp(m, -1.0, 1.0));
    const double rho = 2.0 * std::sqrt(-a / 3.0);

    CardanoRoots out;
    out.eta2 = rho * std::cos(alpha / 3.0);
    out.eta1 = rho * std::cos((alpha - 2.0 * kPi) / 3.0);
    out.eta3 = rho * std::cos((alpha + 2.0 * kPi) / 3.0);
    return out;
}

ExtremaSet ferrari_extrema(const Quintic& quintic, const ResolventData& rd) {
    const double mu0 = quintic.mu[0];
    if (!(mu0 > 0.0)) throw std::invalid_argument("ferrari_extrema: mu0 must be positive");
    const double shift = quintic.mu[1] / (5.0 * mu0);
    const double p = rd.p, q = rd.q, r = rd.r;
    const double L = length_scale(p, q, r);

    ExtremaSet ext;
    if (std::abs(q) <= 1e-12 * L * L * L) {
        // biquadratic: w^4 + p w^2 + r
        double disc = p * p - 4.0 * r;
        if (disc < 0.0) {
            if (disc < -1e-12 * L * L * L * L) throw ClosedFormUnavailable("ferrari: complex extrema");
            disc = 0.0;
        }
        const double sq = std::sqrt(disc);
        double w2a = (-p + sq) / 2.0, w2b = (-p - sq) / 2.0;
        for (double* w2 : {&w2a, &w2b}) {
            if (*w2 < 0.0) {
                if (*w2 < -1e-12 * L * L) throw ClosedFormUnavailable("ferrari: complex extrema");
                *w2 = 0.0;
            }
        }
        ext.xi_ext = {std::sqrt(w2a) - shift, -std::sqrt(w2a) - shift,
                      std::sqrt(w2b) - shift, -std::sqrt(w2b) - shift};
    } else {
        if (!rd.z0 || !(*rd.z0 > 0.0))
            throw ClosedFormUnavailable("ferrari: resolvent least root not positive");
        const double z0 = *rd.z0;
        const double s = std::sqrt(2.0 * z0);
        double t1 = 2.0 * z0 - 4.0 * (p / 2.0 + z0 + q / (2.0 * s));
        double t2 = 2.0 * z0 - 4.0 * (p / 2.0 + z0 - q / (2.0 * s));
        for (double* t : {&t1, &t2}) {
            if (*t < 0.0) {
                if (*t < -1e-10 * L * L) throw ClosedFormUnavailable("ferrari: complex extrema");
                *t = 0.0;
            }
        }
        ext.xi_ext = {0.5 * (s + std::sqrt(t1)) - shift, 0.5 * (s - std::sqrt(t1)) - shift,
                      0.5 * (-s + std::sqrt(t2)) - shift, 0.5 * (-s - std::sqrt(t2)) - shift};
    }

    ext.lambda = ext.xi_ext;
    std::sort(ext.lambda.begin(), ext.lambda.end());

    for (int i = 0; i < 3; ++i) {
        const double sep = 1e-9 * std::max({1.0, std::abs(ext.lambda[static_cast<std::size_t>(i)]),
                                            std::abs(ext.lambda[static_cast<std::size_t>(i) + 1])});
        if (ext.lambda[static_cast<std::size_t>(i) + 1] - ext.lambda[static_cast<std::size_t>(i)] <= sep)
            throw ClosedFormUnavailable("ferrari: coincident extrema");
    }

    // certify each extremum against P5' and the max/min alternation
    const Poly dp = quintic.poly().derivative();
    const Poly ddp = dp.derivative();
    for (int i = 0; i < 4; ++i) {
        const double li = ext.lambda[static_cast<std::size_t>(i)];
        if (std::abs(dp(li)) > 1e-9 * eval_scale(dp, li))
            throw ClosedFormUnavailable("ferrari: extremum certification failed");
        const double curv = ddp(li);
        if ((i % 2 == 0 && !(curv < 0.0)) || (i % 2 == 1 && !(curv > 0.0)))
            throw ClosedFormUnavailable("ferrari: extremum alternation failed");
    }
    return ext;
}

}  // namespace quartix
