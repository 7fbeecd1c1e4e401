#pragma once

#include <array>
#include <utility>
#include <vector>

namespace quartix {

// Dense univariate polynomial over double.  Coefficients are stored in
// descending degree order: coeffs()[0] is the leading coefficient.
// Construction trims leading coefficients with |c| <= 1e-14 * max|c|;
// the zero polynomial is stored as the single coefficient {0}.
class Poly {
public:
    Poly() : c_{0.0} {}
    explicit Poly(std::vector<double> descending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
    double leading() const { return c_.front(); }
    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double x) const;  // Horner evaluation
    Poly derivative() const;            // derivative of a constant is {0}
    Poly antiderivative() const;        // constant of integration 0

    static Poly from_roots(const std::vector<double>& roots, double lead = 1.0);

private:
    std::vector<double> c_;
};

Poly operator*(const Poly& a, const Poly& b);
Poly operator*(double s, const Poly& a);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);

// Euclidean division: a = q*b + r with deg r < deg b.  Throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Magnitude scale of p near x: (sum |c_i|) * max(1,|x|)^deg.  All relative
// tolerances in the library are multiples of this.
double eval_scale(const Poly& p, double x);

// Upper bound on the number of positive real roots (sign changes in the
// coefficient sequence, zeros skipped).
int descartes_bound(const Poly& p);

// Cauchy bound: every real root lies in (-B, B), B = 1 + max|c_i|/|c_0|.
double cauchy_root_bound(const Poly& p);

// Coefficients mu0..mu5 of the reduced quintic
//   P5(xi) = mu0*xi^5 + mu1*xi^4 + mu2*xi^3 + mu3*xi^2 + mu4*xi - mu5.
// Note the sign convention: the constant term of the polynomial is -mu5.
struct Quintic {
    std::array<double, 6> mu{};

    // From a plain descending coefficient list (constant term = -mu5).
    static Quintic from_coeffs(const std::array<double, 6>& c);

    Poly poly() const;
    double eval(double xi) const { return poly()(xi); }
};

struct RootRecord {
    double value = 0.0;
    int multiplicity = 1;
    double lo = 0.0, hi = 0.0;  // isolating interval, lo < value < hi
};

// Distinct real roots in ascending order.
struct RootSet {
    std::vector<RootRecord> roots;

    int distinct_count() const { return static_cast<int>(roots.size()); }
    int weighted_count() const;
};

// Sturm sequence of p over floating point.  Elements are sup-norm normalized;
// the chain is truncated (flag set) when a remainder underflows before the
// sequence reaches a constant, which happens exactly when p has a root of
// multiplicity > 1 up to roundoff.
struct SturmChain {
    std::vector<Poly> seq;
    bool truncated = false;

    // Sign variation count at x; ambiguous (near-zero) evaluations are
    // resolved by nudging x slightly to the right.
    int variations(double x) const;
    // Number of distinct real roots in (lo, hi), valid only if !truncated.
    int count_distinct(double lo, double hi) const;
};

SturmChain sturm_chain(const Poly& p);

// Multiplicity certification at r: the largest m such that p, p', ...,
// p^(m-1) all vanish at r within band_rel * eval_scale.  Returns 0 when r is
// not a root at that tolerance.
int root_multiplicity(const Poly& p, double r, double band_rel = 1e-9);

// Square-free decomposition via repeated GCD: returns (factor, multiplicity)
// pairs whose product (with powers) reconstructs p up to scaling.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p);

// All distinct real roots of p in the open interval (lo, hi), each with a
// certified multiplicity and an isolating interval.  Roots are refined by
// bisection to width <= tol (tangential roots are Newton-polished on the
// derivative chain instead).  Isolating intervals are pairwise disjoint and
// straddle a sign change whenever the multiplicity is odd.
//
// Primary method: Sturm bisection.  When the chain truncates (multiple
// roots), falls back to recursive isolation on the derivative chain: the
// critical points of p partition (lo, hi) into monotone pieces, tangencies
// are detected at critical points by the certification band, and crossings
// are bisected between them.
//
// Throws std::invalid_argument on a zero polynomial, lo >= hi, or tol <= 0.
RootSet isolate_real_roots(const Poly& p, double lo, double hi, double tol);

}  // namespace quartix
