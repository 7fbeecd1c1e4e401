#include "quartix/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quartix/errors.hpp"

namespace quartix {
namespace {

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Strict positivity on the 1001-point grid, except that a zero exactly at
// an endpoint is tolerated (monomial potentials like t are useful inputs).
void check_positive_on_grid(const Poly& p, const char* name) {
    for (int i = 0; i <= 1000; ++i) {
        const double t = i / 1000.0;
        const double v = p(t);
        const bool ok = (i == 0 || i == 1000) ? v >= 0.0 : v > 0.0;
        if (!ok)
            throw std::invalid_argument(std::string("potential ") + name +
                                        " is not positive on [0,1] (t = " + std::to_string(t) +
                                        ")");
    }
}

}  // namespace

void validate_potential_set(const PotentialSet& ps) {
    check_positive_on_grid(ps.phi1, "phi1");
    check_positive_on_grid(ps.phi2, "phi2");
    check_positive_on_grid(ps.psi1, "psi1");
    check_positive_on_grid(ps.psi2, "psi2");
    if (!(ps.phi1(0.0) > 0.0) && !(ps.phi2(0.0) > 0.0))
        throw std::invalid_argument(
            "potentials phi1 and phi2 both vanish at t = 0; the f(0) = 1 normalization is undefined");
    if (ps.J == 0.0) throw std::invalid_argument("coupling J must be nonzero");
    if (!(ps.beta > 0.0)) throw std::invalid_argument("inverse temperature beta must be positive");
}

double kernel(const PotentialSet& ps, double t, double u) {
    return ps.phi1(t) * ps.psi1(u) + ps.phi2(t) * ps.psi2(u);
}

double kernel_diagnostic(const PotentialSet& ps, double t, double u) {
    const double w = kernel(ps, t, u);
    if (!(w > 0.0))
        throw std::domain_error("kernel is not positive at (" + std::to_string(t) + ", " +
                                std::to_string(u) + "); no exponential form exists");
    const double jb = ps.J * ps.beta;
    return std::exp(jb * (std::log(w) / jb));
}

QuarticOperator compute_coefficients(const PotentialSet& ps, const QuadratureConfig& cfg) {
    validate_potential_set(ps);
    std::array<double, 5> a{}, b{};
    for (int i = 0; i <= 4; ++i) {
        const auto moment = [&ps, i](const Poly& psi) {
            return [&ps, &psi, i](double u) {
                return psi(u) * ipow(ps.phi1(u), 4 - i) * ipow(ps.phi2(u), i);
            };
        };
        a[static_cast<std::size_t>(i)] = integrate(moment(ps.psi1), cfg);
        b[static_cast<std::size_t>(i)] = integrate(moment(ps.psi2), cfg);
    }
    return QuarticOperator::from_reduced(a, b);
}

HammersteinCertificate certify_hammerstein(const PotentialSet& ps, const FixedPoint& fp,
                                           const QuadratureConfig& user_cfg) {
    // integration error must sit well below the certification band
    QuadratureConfig cfg = user_cfg;
    cfg.refinement_rel = std::min(cfg.refinement_rel, 1e-11);

    const auto g = [&ps, &fp](double t) { return fp.x * ps.phi1(t) + fp.y * ps.phi2(t); };

    HammersteinCertificate cert;
    cert.g_at_0 = g(0.0);

    double sup_g = 0.0, sup_f = 0.0;
    const double g0_4 = ipow(cert.g_at_0, 4);
    const auto f = [&g, g0_4](double t) { return ipow(g(t), 4) / g0_4; };

    const double denom = integrate([&ps, &f](double u) { return kernel(ps, 0.0, u) * f(u); }, cfg);
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        const double hg =
            integrate([&ps, &g, t](double u) { return kernel(ps, t, u) * ipow(g(u), 4); }, cfg);
        cert.residual_h = std::max(cert.residual_h, std::abs(hg - g(t)));

        const double num =
            integrate([&ps, &f, t](double u) { return kernel(ps, t, u) * f(u); }, cfg);
        cert.residual_r = std::max(cert.residual_r, std::abs(ipow(num / denom, 4) - f(t)));

        sup_g = std::max(sup_g, std::abs(g(t)));
        sup_f = std::max(sup_f, std::abs(f(t)));
    }
    cert.certified = cert.residual_h <= 1e-9 * std::max(1.0, sup_g) &&
                     cert.residual_r <= 1e-9 * std::max(1.0, sup_f);
    return cert;
}

GibbsReport count_gibbs_measures(const PotentialSet& ps, const QuadratureConfig& cfg,
                                 const AnalysisOptions& opt) {
    GibbsReport rep;
    rep.op = compute_coefficients(ps, cfg);
    rep.analysis = count_fixed_points(rep.op, opt);
    rep.n_measures = rep.analysis.n_fix;
    rep.consistent = rep.analysis.consistent;
    rep.certificates.reserve(rep.analysis.fixed_points.size());
    for (const FixedPoint& fp : rep.analysis.fixed_points) {
        rep.certificates.push_back(certify_hammerstein(ps, fp, cfg));
        if (!rep.certificates.back().certified) rep.consistent = false;
    }
    return rep;
}

}  // namespace quartix
