#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace quartix {

enum class QuadRule { GaussLegendre, Simpson };

struct QuadratureConfig {
    QuadRule rule = QuadRule::GaussLegendre;
    int panels_or_nodes = 32;      // GL node count or Simpson subinterval count, >= 8
    double refinement_rel = 1e-10; // grid-doubling stop: |I2 - I1| <= rel * max(1, |I2|)
};

// Gauss-Legendre nodes and weights on [0, 1], ascending nodes.  Exact for
// polynomials of degree <= 2n - 1.
std::vector<std::pair<double, double>> gauss_legendre(int n);

// Composite Simpson on [0, 1] with the given (even) number of subintervals.
double simpson(const std::function<double(double)>& f, int subintervals);

// Single-pass quadrature at the given resolution.
double quad_once(const std::function<double(double)>& f, QuadRule rule, int n);

// Grid-doubling quadrature of f over [0, 1] to the configured relative
// agreement.  Throws std::invalid_argument on a bad config and
// CertificationError when doubling fails to converge.
double integrate(const std::function<double(double)>& f, const QuadratureConfig& cfg);

}  // namespace quartix
