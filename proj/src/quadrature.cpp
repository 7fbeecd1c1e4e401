#include "quartix/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quartix/errors.hpp"

namespace quartix {

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: node count must be positive");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int i = 1; i <= n; ++i) {
        // Newton on P_n over [-1, 1] from the Chebyshev-like initial guess
        double x = std::cos(pi * (i - 0.25) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.emplace_back(0.5 * (x + 1.0), 0.5 * w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double simpson(const std::function<double(double)>& f, int subintervals) {
    if (subintervals < 2 || subintervals % 2 != 0)
        throw std::invalid_argument("simpson: subinterval count must be even and >= 2");
    const double h = 1.0 / subintervals;
    double sum = f(0.0) + f(1.0);
    for (int i = 1; i < subintervals; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
    return sum * h / 3.0;
}

double quad_once(const std::function<double(double)>& f, QuadRule rule, int n) {
    if (rule == QuadRule::Simpson) return simpson(f, n);
    double sum = 0.0;
    for (const auto& [x, w] : gauss_legendre(n)) sum += w * f(x);
    return sum;
}

double integrate(const std::function<double(double)>& f, const QuadratureConfig& cfg) {
    if (cfg.panels_or_nodes < 8)
        throw std::invalid_argument("integrate: panels_or_nodes must be at least 8");
    if (!(cfg.refinement_rel > 0.0))
        throw std::invalid_argument("integrate: refinement_rel must be positive");

    const int cap = cfg.rule == QuadRule::GaussLegendre ? 8192 : (1 << 20);
    int n = cfg.panels_or_nodes;
    if (cfg.rule == QuadRule::Simpson && n % 2 != 0) ++n;
    double prev = quad_once(f, cfg.rule, n);
    while (n <= cap) {
        n *= 2;
        const double cur = quad_once(f, cfg.rule, n);
        if (std::abs(cur - prev) <= cfg.refinement_rel * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw CertificationError("integrate: grid doubling did not reach the requested agreement");
}

}  // namespace quartix
