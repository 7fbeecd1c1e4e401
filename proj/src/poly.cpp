#include "quartix/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace quartix {
namespace {

constexpr double kTrimRel = 1e-14;       // leading-coefficient trim
constexpr double kCertBandRel = 1e-9;    // root/tangency certification band
constexpr double kSturmUnderflow = 1e-11;
constexpr double kAmbiguousRel = 1e-13;  // sign of an evaluation is untrusted below this
constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double sup_norm(const Poly& p) { return max_abs(p.coeffs()); }

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Sign with the certification band treated as zero.
int banded_sign(const Poly& p, double x, double band_rel = kCertBandRel) {
    const double v = p(x);
    if (std::abs(v) <= band_rel * eval_scale(p, x)) return 0;
    return sign_of(v);
}

}  // namespace

Poly::Poly(std::vector<double> descending) : c_(std::move(descending)) {
    if (c_.empty()) {
        c_ = {0.0};
        return;
    }
    const double tol = kTrimRel * max_abs(c_);
    std::size_t lead = 0;
    while (lead + 1 < c_.size() && std::abs(c_[lead]) <= tol) ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    if (c_.size() == 1 && std::abs(c_[0]) <= tol) c_[0] = 0.0;
}

double Poly::operator()(double x) const {
    double acc = 0.0;
    for (double ci : c_) acc = acc * x + ci;
    return acc;
}

Poly Poly::derivative() const {
    const int n = degree();
    if (n <= 0) return Poly{};
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * (n - i);
    return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly{};
    const int n = degree();
    std::vector<double> a(static_cast<std::size_t>(n) + 2, 0.0);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] / (n + 1 - i);
    return Poly(std::move(a));
}

Poly Poly::from_roots(const std::vector<double>& roots, double lead) {
    std::vector<double> c{lead};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= r * c[j - 1];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<double> c(ac.size() + bc.size() - 1, 0.0);
    for (std::size_t i = 0; i < ac.size(); ++i)
        for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
    return Poly(std::move(c));
}

Poly operator*(double s, const Poly& a) {
    std::vector<double> c = a.coeffs();
    for (double& ci : c) ci *= s;
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<double> c(std::max(ac.size(), bc.size()), 0.0);
    // constant terms align at the back
    for (std::size_t i = 0; i < ac.size(); ++i) c[c.size() - ac.size() + i] += ac[i];
    for (std::size_t i = 0; i < bc.size(); ++i) c[c.size() - bc.size() + i] += bc[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0 * b); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    const int da = a.degree(), db = b.degree();
    if (da < db) return {Poly{}, a};
    const auto& bc = b.coeffs();
    std::vector<double> r = a.coeffs();
    std::vector<double> q(static_cast<std::size_t>(da - db) + 1, 0.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double f = r[i] / bc[0];
        q[i] = f;
        for (std::size_t j = 0; j < bc.size(); ++j) r[i + j] -= f * bc[j];
    }
    std::vector<double> rem(r.begin() + static_cast<std::ptrdiff_t>(q.size()), r.end());
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

double eval_scale(const Poly& p, double x) {
    double s = 0.0;
    for (double c : p.coeffs()) s += std::abs(c);
    return s * std::pow(std::max(1.0, std::abs(x)), p.degree());
}

int descartes_bound(const Poly& p) {
    int count = 0, prev = 0;
    for (double c : p.coeffs()) {
        const int sg = sign_of(c);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

double cauchy_root_bound(const Poly& p) {
    if (p.degree() <= 0) return 1.0;
    const auto& c = p.coeffs();
    double m = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) m = std::max(m, std::abs(c[i]));
    return 1.0 + m / std::abs(c[0]);
}

Quintic Quintic::from_coeffs(const std::array<double, 6>& c) {
    Quintic q;
    for (int i = 0; i < 5; ++i) q.mu[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    q.mu[5] = -c[5];
    return q;
}

Poly Quintic::poly() const {
    return Poly({mu[0], mu[1], mu[2], mu[3], mu[4], -mu[5]});
}

int RootSet::weighted_count() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

SturmChain sturm_chain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    SturmChain ch;
    ch.seq.push_back((1.0 / sup_norm(p)) * p);
    if (p.degree() == 0) return ch;
    Poly d = p.derivative();
    ch.seq.push_back((1.0 / sup_norm(d)) * d);
    while (ch.seq.back().degree() > 0) {
        const Poly& s0 = ch.seq[ch.seq.size() - 2];
        const Poly& s1 = ch.seq.back();
        auto [q, r] = divmod(s0, s1);
        const double rn = sup_norm(r);
        if (r.is_zero() || rn <= kSturmUnderflow * (1.0 + sup_norm(q))) {
            // remainder vanished before reaching a constant: gcd(p, p') is
            // nontrivial, i.e. p has a multiple root
            ch.truncated = true;
            break;
        }
        ch.seq.push_back((-1.0 / rn) * r);
    }
    return ch;
}

namespace {

// Sign variation count at x, or -1 when some chain element evaluates too
// close to zero for its sign to be trusted.
int raw_variations(const SturmChain& ch, double x) {
    int count = 0, prev = 0;
    for (const Poly& s : ch.seq) {
        const double v = s(x);
        if (std::abs(v) <= kAmbiguousRel * eval_scale(s, x)) return -1;
        const int sg = sign_of(v);
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

// Nearest point to x (searching both directions) where every chain element
// has a trustworthy sign.
double clean_point(const SturmChain& ch, double x, double lo, double hi) {
    if (raw_variations(ch, x) >= 0) return x;
    double step = std::max(64.0 * kEps * std::max(1.0, std::abs(x)), 1e-15 * (hi - lo));
    for (int k = 0; k < 60; ++k) {
        for (double cand : {x + step, x - step}) {
            if (cand <= lo || cand >= hi) continue;
            if (raw_variations(ch, cand) >= 0) return cand;
        }
        step *= 4.0;
    }
    throw std::runtime_error("sturm: no sign-definite evaluation point found");
}

struct FoundRoot {
    double v = 0.0;
    double bl = 0.0, bh = 0.0;  // sign-true bracket when bracketed
    bool bracketed = false;
};

// Bisect a sign change of p in [l, h] down to width <= wtgt, then keep going
// (up to the iteration cap) until the midpoint residual drops inside the
// certification band.
FoundRoot bisect_root(const Poly& p, double l, double h, double wtgt) {
    double fl = p(l);
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (l + h);
        if (m <= l || m >= h) break;  // interval collapsed to adjacent doubles
        const double fm = p(m);
        const bool width_ok = h - l <= std::max(wtgt, 8.0 * kEps * std::max(1.0, std::abs(m)));
        if (width_ok && std::abs(fm) <= 0.1 * kCertBandRel * eval_scale(p, m)) break;
        if (fm == 0.0) {
            // exact hit: report a thin sign-true window around m
            const double d = std::max(0.5 * wtgt, 8.0 * kEps * std::max(1.0, std::abs(m)));
            l = std::max(l, m - d);
            h = std::min(h, m + d);
            break;
        }
        if (sign_of(fm) == sign_of(fl)) {
            l = m;
            fl = fm;
        } else {
            h = m;
        }
    }
    FoundRoot r;
    r.v = 0.5 * (l + h);
    r.bl = l;
    r.bh = h;
    r.bracketed = true;
    return r;
}

// A couple of guarded Newton steps to polish a simple root of p inside
// [lo, hi]; used on the derivative chain for tangential roots.
double newton_polish(const Poly& p, double x, double lo, double hi) {
    const Poly d = p.derivative();
    for (int it = 0; it < 4; ++it) {
        const double dv = d(x);
        if (dv == 0.0) break;
        const double step = p(x) / dv;
        const double nx = x - step;
        if (!(nx > lo && nx < hi)) break;
        x = nx;
        if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

// Sturm-count bisection: isolate the distinct (simple) roots of a square-free
// p in (lo, hi), then refine each by sign bisection.
std::vector<FoundRoot> sturm_isolate(const Poly& p, const SturmChain& ch, double lo, double hi,
                                     double wtgt) {
    std::vector<FoundRoot> out;
    const double clo = clean_point(ch, lo, lo - 1.0, hi);
    const double chi = clean_point(ch, hi, lo, hi + 1.0);
    struct Seg {
        double l, h;
        int vl, vh;
    };
    std::vector<Seg> stack{{clo, chi, raw_variations(ch, clo), raw_variations(ch, chi)}};
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const int n = s.vl - s.vh;
        if (n <= 0) continue;
        if (n == 1) {
            // exactly one simple root: endpoints have opposite signs
            out.push_back(bisect_root(p, s.l, s.h, wtgt));
            continue;
        }
        if (s.h - s.l <= 16.0 * kEps * std::max(1.0, std::abs(s.l))) {
            // unresolvable cluster: report the midpoint once
            FoundRoot r;
            r.v = 0.5 * (s.l + s.h);
            r.bl = s.l;
            r.bh = s.h;
            out.push_back(r);
            continue;
        }
        const double m = clean_point(ch, 0.5 * (s.l + s.h), s.l, s.h);
        const int vm = raw_variations(ch, m);
        stack.push_back({s.l, m, s.vl, vm});
        stack.push_back({m, s.h, vm, s.vh});
    }
    return out;
}

// Recursive isolation on the derivative chain: critical points of p split
// (lo, hi) into monotone pieces; a critical point inside the certification
// band is a (tangential) root, and each monotone piece with a sign change
// holds exactly one crossing.
std::vector<FoundRoot> derivative_chain_roots(const Poly& p, double lo, double hi, double wtgt) {
    if (p.degree() <= 0) return {};
    if (p.degree() == 1) {
        const double r = -p.coeffs()[1] / p.coeffs()[0];
        if (r > lo && r < hi) {
            FoundRoot f;
            f.v = r;
            f.bl = r - std::max(wtgt, 8.0 * kEps * std::max(1.0, std::abs(r)));
            f.bh = r + std::max(wtgt, 8.0 * kEps * std::max(1.0, std::abs(r)));
            f.bracketed = sign_of(p(f.bl)) * sign_of(p(f.bh)) < 0;
            return {f};
        }
        return {};
    }
    const std::vector<FoundRoot> crit = derivative_chain_roots(p.derivative(), lo, hi, wtgt);

    std::vector<double> nodes{lo};
    for (const auto& c : crit) nodes.push_back(c.v);
    nodes.push_back(hi);

    std::vector<FoundRoot> out;
    // tangencies at critical points
    for (const auto& c : crit) {
        if (banded_sign(p, c.v) == 0) {
            FoundRoot f;
            f.v = newton_polish(p.derivative(), c.v, lo, hi);
            if (banded_sign(p, f.v) != 0) f.v = c.v;  // polish drifted; keep original
            out.push_back(f);                          // bracket assigned later
        }
    }
    // crossings on monotone pieces
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const int s0 = banded_sign(p, nodes[i]);
        const int s1 = banded_sign(p, nodes[i + 1]);
        if (s0 * s1 < 0) out.push_back(bisect_root(p, nodes[i], nodes[i + 1], wtgt));
    }
    std::sort(out.begin(), out.end(), [](const FoundRoot& a, const FoundRoot& b) { return a.v < b.v; });
    return out;
}

// Merge values closer than the separation tolerance (keeps the first).
void merge_close(std::vector<FoundRoot>& v) {
    std::vector<FoundRoot> out;
    for (const auto& f : v) {
        if (!out.empty() && f.v - out.back().v <= 1e-9 * std::max(1.0, std::abs(f.v)))
            continue;
        out.push_back(f);
    }
    v = std::move(out);
}

}  // namespace

int root_multiplicity(const Poly& p, double r, double band_rel) {
    int m = 0;
    Poly d = p;
    while (m <= p.degree()) {
        if (std::abs(d(r)) > band_rel * eval_scale(d, r)) break;
        ++m;
        d = d.derivative();
    }
    return m;
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_decomposition: zero polynomial");
    if (p.degree() == 0) return {};

    // numeric Euclid with underflow truncation, sup-norm normalized
    auto gcd = [](Poly a, Poly b) {
        a = (1.0 / sup_norm(a)) * a;
        b = (1.0 / sup_norm(b)) * b;
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            const double rn = sup_norm(r);
            a = b;
            if (r.is_zero() || rn <= kSturmUnderflow * (1.0 + sup_norm(q))) break;
            b = (1.0 / rn) * r;
            if (b.degree() == 0) return Poly({1.0});
        }
        return a;
    };
    auto quot = [](const Poly& a, const Poly& b) { return divmod(a, b).first; };

    // Yun's algorithm
    std::vector<std::pair<Poly, int>> out;
    const Poly dp = p.derivative();
    Poly d = gcd(p, dp);
    if (d.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    Poly b = quot(p, d);
    Poly c = quot(dp, d);
    Poly z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0 && i <= p.degree() + 1) {
        // z vanishing (relative to what produced it) means b itself is the
        // remaining factor, all of multiplicity i
        const double zscale = sup_norm(c) + sup_norm(b.derivative());
        if (z.is_zero() || sup_norm(z) <= 1e-10 * zscale) {
            out.emplace_back(b, i);
            break;
        }
        Poly a = gcd(b, z);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = quot(b, a);
        c = quot(z, a);
        z = c - b.derivative();
        ++i;
    }
    return out;
}

int SturmChain::variations(double x) const {
    int v = raw_variations(*this, x);
    if (v >= 0) return v;
    double step = 64.0 * kEps * std::max(1.0, std::abs(x));
    for (int k = 0; k < 60; ++k) {
        v = raw_variations(*this, x + step);
        if (v >= 0) return v;
        step *= 4.0;
    }
    throw std::runtime_error("sturm: no sign-definite evaluation point found");
}

int SturmChain::count_distinct(double lo, double hi) const {
    return variations(lo) - variations(hi);
}

RootSet isolate_real_roots(const Poly& p, double lo, double hi, double tol) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: degenerate polynomial");
    if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots: invalid interval");
    if (!(tol > 0.0)) throw std::invalid_argument("isolate_real_roots: invalid tolerance");
    if (p.degree() == 0) return {};

    // bisection width target: well below tol so simple-root residuals clear
    // the certification band with margin
    const double wtgt = tol / 64.0;

    SturmChain ch = sturm_chain(p);
    std::vector<FoundRoot> found = ch.truncated ? derivative_chain_roots(p, lo, hi, wtgt)
                                                : sturm_isolate(p, ch, lo, hi, wtgt);
    std::sort(found.begin(), found.end(),
              [](const FoundRoot& a, const FoundRoot& b) { return a.v < b.v; });
    merge_close(found);

    RootSet rs;
    for (std::size_t i = 0; i < found.size(); ++i) {
        RootRecord rec;
        rec.value = found[i].v;
        rec.multiplicity = std::max(1, root_multiplicity(p, rec.value));

        const double left_lim = i == 0 ? lo : 0.5 * (found[i - 1].v + rec.value);
        const double right_lim =
            i + 1 == found.size() ? hi : 0.5 * (rec.value + found[i + 1].v);

        if (found[i].bracketed) {
            rec.lo = std::max(found[i].bl, left_lim);
            rec.hi = std::min(found[i].bh, right_lim);
        } else {
            // tangential root: pick a symmetric window; for odd multiplicity
            // grow it until the sign change is visible above roundoff
            double w = std::max(tol, 64.0 * kEps * std::max(1.0, std::abs(rec.value)));
            const double wmax =
                std::min(rec.value - left_lim, right_lim - rec.value) * 0.9;
            if (rec.multiplicity % 2 == 1) {
                while (w < wmax) {
                    const double vl = p(rec.value - w), vr = p(rec.value + w);
                    const double floor_l = 1e-12 * eval_scale(p, rec.value - w);
                    const double floor_r = 1e-12 * eval_scale(p, rec.value + w);
                    if (std::abs(vl) > floor_l && std::abs(vr) > floor_r &&
                        sign_of(vl) * sign_of(vr) < 0)
                        break;
                    w *= 4.0;
                }
            }
            w = std::min(w, std::max(wmax, tol));
            rec.lo = rec.value - w;
            rec.hi = rec.value + w;
        }
        // keep intervals disjoint, inside the search interval, and strictly
        // around the value
        rec.lo = std::max(rec.lo, left_lim);
        rec.hi = std::min(rec.hi, right_lim);
        if (rec.lo >= rec.value) rec.lo = std::nextafter(rec.value, -1e308);
        if (rec.hi <= rec.value) rec.hi = std::nextafter(rec.value, 1e308);
        rs.roots.push_back(rec);
    }
    return rs;
}

}  // namespace quartix
