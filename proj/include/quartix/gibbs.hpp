#pragma once

#include <vector>

#include "quartix/analysis.hpp"
#include "quartix/poly.hpp"
#include "quartix/quadrature.hpp"
#include "quartix/quartic_operator.hpp"

namespace quartix {

// Degenerate two-term kernel K(t, u) = phi1(t) psi1(u) + phi2(t) psi2(u) on
// [0,1]^2, standing in for exp(J beta xi(t,u)).  All four potentials must be
// strictly positive on [0, 1]; J nonzero, beta positive.
struct PotentialSet {
    Poly phi1, phi2, psi1, psi2;
    double J = 1.0;
    double beta = 1.0;
};

// Throws std::invalid_argument naming the offending field: a potential that
// fails strict positivity on a 1001-point grid, J == 0, or beta <= 0.
void validate_potential_set(const PotentialSet& ps);

double kernel(const PotentialSet& ps, double t, double u);

// Round trip through the exponential form: exp(J beta * (1/(J beta)) ln K).
// Agrees with kernel() up to roundoff; throws std::domain_error when the
// kernel is not positive at (t, u).
double kernel_diagnostic(const PotentialSet& ps, double t, double u);

// The ten moment integrals a_i = int psi1 phi1^(4-i) phi2^i,
// b_i = int psi2 phi1^(4-i) phi2^i, assembled into the operator.
QuarticOperator compute_coefficients(const PotentialSet& ps, const QuadratureConfig& cfg);

// Numeric certificate that g = x phi1 + y phi2 solves the Hammerstein
// equation g = int K(.,u) g(u)^4 du and that f = (g/g(0))^4 is fixed by the
// normalized response map R f = (int K(.,u) f / int K(0,u) f)^4.  Residuals
// are sup-norms over a 101-point grid with every integral done by honest
// pointwise-kernel quadrature.
struct HammersteinCertificate {
    double residual_h = 0.0;  // max |H g - g|
    double residual_r = 0.0;  // max |R f - f|
    double g_at_0 = 0.0;
    bool certified = false;   // both residuals within 1e-9 * max(1, sup-norm)
};

HammersteinCertificate certify_hammerstein(const PotentialSet& ps, const FixedPoint& fp,
                                           const QuadratureConfig& cfg);

struct GibbsReport {
    QuarticOperator op;
    AnalysisReport analysis;
    std::vector<HammersteinCertificate> certificates;  // one per fixed point
    int n_measures = 0;
    bool consistent = true;  // analysis consistent and every certificate holds
};

// Translation-invariant Gibbs measure count for the degenerate-kernel model:
// each strictly positive fixed point of the moment operator corresponds to
// exactly one measure, and each is certified back in function space.
GibbsReport count_gibbs_measures(const PotentialSet& ps, const QuadratureConfig& cfg,
                                 const AnalysisOptions& opt = {});

}  // namespace quartix
