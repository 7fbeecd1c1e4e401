#include "quartix/quartic_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "quartix/errors.hpp"

namespace quartix {

QuarticOperator QuarticOperator::from_reduced(const std::array<double, 5>& a,
                                              const std::array<double, 5>& b) {
    for (int i = 0; i < 5; ++i) {
        if (!(a[static_cast<std::size_t>(i)] > 0.0))
            throw std::invalid_argument("operator coefficient a" + std::to_string(i) +
                                        " must be strictly positive");
        if (!(b[static_cast<std::size_t>(i)] > 0.0))
            throw std::invalid_argument("operator coefficient b" + std::to_string(i) +
                                        " must be strictly positive");
    }
    return QuarticOperator{a, b};
}

QuarticOperator QuarticOperator::from_expanded(const std::array<double, 5>& A,
                                               const std::array<double, 5>& B) {
    std::array<double, 5> a{}, b{};
    for (std::size_t i = 0; i < 5; ++i) {
        a[i] = A[i] / kBinom4[i];
        b[i] = B[i] / kBinom4[i];
    }
    return from_reduced(a, b);
}

std::pair<double, double> apply(const QuarticOperator& op, double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0))
        throw std::domain_error("apply: operator domain is the closed positive quadrant");
    double u = 0.0, v = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        const double m = kBinom4[i] * std::pow(x, 4.0 - static_cast<double>(i)) *
                         std::pow(y, static_cast<double>(i));
        u += op.a[i] * m;
        v += op.b[i] * m;
    }
    return {u, v};
}

Quintic build_quintic(const QuarticOperator& op) {
    Quintic q;
    q.mu[0] = op.a[4];
    q.mu[1] = 4.0 * op.a[3] - op.b[4];
    q.mu[2] = 6.0 * op.a[2] - 4.0 * op.b[3];
    q.mu[3] = 4.0 * op.a[1] - 6.0 * op.b[2];
    q.mu[4] = op.a[0] - 4.0 * op.b[1];
    q.mu[5] = op.b[0];
    return q;
}

FixedPoint recover_fixed_point(const QuarticOperator& op, double xi) {
    if (!(xi > 0.0)) throw std::domain_error("recover_fixed_point: xi must be positive");

    double sa = 0.0, pw = 1.0;
    for (std::size_t i = 0; i < 5; ++i) {
        sa += kBinom4[i] * op.a[i] * pw;
        pw *= xi;
    }
    FixedPoint fp;
    fp.xi = xi;
    fp.x = 1.0 / std::cbrt(sa);
    fp.y = xi * fp.x;

    const auto [u, v] = apply(op, fp.x, fp.y);
    fp.residual = std::max(std::abs(u - fp.x), std::abs(v - fp.y));
    if (fp.residual > 1e-9 * (fp.x + fp.y))
        throw CertificationError("recover_fixed_point: image does not return to the point; "
                                 "xi is not a ratio root");
    return fp;
}

}  // namespace quartix
