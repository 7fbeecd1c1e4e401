#pragma once

#include <array>
#include <utility>

#include "quartix/poly.hpp"

namespace quartix {

// binomial weights of degree 4, applied at evaluation time
inline constexpr std::array<double, 5> kBinom4{1.0, 4.0, 6.0, 4.0, 1.0};

// V(x, y) = ( sum_i C4_i a_i x^(4-i) y^i , sum_i C4_i b_i x^(4-i) y^i )
// on the closed positive quadrant.  Reduced coefficients a_i, b_i are
// strictly positive; the binomial weights are never folded into them.
struct QuarticOperator {
    std::array<double, 5> a{}, b{};

    // validates positivity, naming the offending coefficient
    static QuarticOperator from_reduced(const std::array<double, 5>& a,
                                        const std::array<double, 5>& b);
    // expanded coefficients have the binomial weights folded in; they are
    // divided out here
    static QuarticOperator from_expanded(const std::array<double, 5>& A,
                                         const std::array<double, 5>& B);
};

// Image of (x, y).  Throws std::domain_error off the closed quadrant.
std::pair<double, double> apply(const QuarticOperator& op, double x, double y);

// Reduced quintic whose positive roots are the ratios y/x of the strictly
// positive fixed points of V:
//   mu0 = a4, mu1 = 4 a3 - b4, mu2 = 6 a2 - 4 b3,
//   mu3 = 4 a1 - 6 b2, mu4 = a0 - 4 b1, mu5 = b0.
Quintic build_quintic(const QuarticOperator& op);

struct FixedPoint {
    double xi = 0.0;        // ratio y/x
    double x = 0.0, y = 0.0;
    int multiplicity = 1;   // of xi as a root of the reduced quintic
    double residual = 0.0;  // max component of |V(x,y) - (x,y)|
};

// Reconstructs the fixed point with ratio xi: x = S_a(xi)^(-1/3) where
// S_a(xi) = sum_i C4_i a_i xi^i, y = xi x.  Requires xi > 0 (domain error)
// and certifies the result: residual must not exceed 1e-9 * (x + y), else a
// CertificationError is thrown (xi was not a root of the reduced quintic).
FixedPoint recover_fixed_point(const QuarticOperator& op, double xi);

}  // namespace quartix
