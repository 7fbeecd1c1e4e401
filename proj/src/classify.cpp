#include "quartix/classify.hpp"

#include <cmath>

namespace quartix {
namespace {

int as_int(Sign s) { return s == Sign::Neg ? -1 : (s == Sign::Pos ? 1 : 0); }

struct Row {
    int num;
    std::array<std::optional<Sign>, 4> cond;  // nullopt = unconstrained
    int count;
};

// Catalog of sign patterns at (lambda1..lambda4); first match wins.  Rows 4
// and 6 carry identical conditions, so row 6 can never label (noted by the
// classifier when row 4 fires).
const Row kCatalog[] = {
    {1, {Sign::Neg, std::nullopt, Sign::Neg, std::nullopt}, 1},
    {2, {Sign::Zero, std::nullopt, Sign::Neg, std::nullopt}, 2},
    {3, {Sign::Neg, std::nullopt, Sign::Zero, std::nullopt}, 2},
    {4, {std::nullopt, Sign::Pos, std::nullopt, Sign::Zero}, 2},
    {5, {std::nullopt, Sign::Zero, std::nullopt, Sign::Pos}, 2},
    {6, {std::nullopt, Sign::Pos, std::nullopt, Sign::Zero}, 2},
    {7, {Sign::Zero, std::nullopt, Sign::Zero, std::nullopt}, 3},
    {8, {Sign::Zero, std::nullopt, std::nullopt, Sign::Zero}, 3},
    {9, {std::nullopt, Sign::Zero, std::nullopt, Sign::Zero}, 3},
    {10, {std::nullopt, Sign::Pos, std::nullopt, Sign::Neg}, 3},
    {11, {Sign::Neg, std::nullopt, Sign::Pos, Sign::Neg}, 3},
    {12, {Sign::Pos, Sign::Neg, std::nullopt, Sign::Pos}, 3},
    {13, {Sign::Zero, std::nullopt, Sign::Pos, Sign::Neg}, 4},
    {14, {Sign::Pos, std::nullopt, Sign::Zero, std::nullopt}, 4},
    {15, {std::nullopt, Sign::Zero, std::nullopt, Sign::Neg}, 4},
    {16, {Sign::Pos, Sign::Neg, std::nullopt, Sign::Zero}, 4},
    {17, {Sign::Pos, Sign::Neg, Sign::Pos, Sign::Neg}, 5},
};

}  // namespace

int skeleton_count(const std::array<Sign, 4>& s) {
    // node chain: P5(0) < 0, the four extremum signs, P5(+inf) > 0
    const int chain[6] = {-1, as_int(s[0]), as_int(s[1]), as_int(s[2]), as_int(s[3]), 1};
    int count = 0;
    for (int i = 0; i < 4; ++i)
        if (s[static_cast<std::size_t>(i)] == Sign::Zero) ++count;  // tangency
    for (int i = 0; i + 1 < 6; ++i)
        if (chain[i] * chain[i + 1] < 0) ++count;  // one crossing per monotone piece
    return count;
}

Classification classify(const Quintic& quintic, const ResolventData& rd,
                        const std::optional<ExtremaSet>& ext, double zero_band_rel) {
    Classification cls;
    if (!(quintic.mu[5] > 0.0)) {
        cls.notes.push_back("constant term of P5 is not negative; skeleton premise fails");
        return cls;
    }
    if (!(rd.Q < 0.0) || !rd.z0 || !(*rd.z0 > 0.0)) {
        cls.notes.push_back("resolvent not in the casus-irreducibilis regime with positive "
                            "least root");
        return cls;
    }
    if (!ext) {
        cls.notes.push_back("extrema unavailable");
        return cls;
    }

    if (ext->xi_max() < 0.0) {
        cls.regime = Regime::Theorem1;
        cls.n_fix = 1;
        cls.notes.push_back("all extrema negative: P5 strictly increasing on the positive "
                            "axis, exactly one positive root");
        return cls;
    }
    if (!(ext->xi_min() > 0.0)) {
        cls.notes.push_back("extrema straddle zero; catalog does not apply");
        return cls;
    }

    const Poly p = quintic.poly();
    for (std::size_t i = 0; i < 4; ++i) {
        const double v = p(ext->lambda[i]);
        const double band = zero_band_rel * eval_scale(p, ext->lambda[i]);
        const double av = std::abs(v);
        cls.pattern.s[i] = av <= band ? Sign::Zero : (v > 0.0 ? Sign::Pos : Sign::Neg);
        cls.pattern.boundary[i] = av > band / 10.0 && av <= 10.0 * band;
    }

    cls.regime = Regime::Table2;
    cls.n_fix = skeleton_count(cls.pattern.s);

    for (const Row& row : kCatalog) {
        bool match = true;
        for (std::size_t i = 0; i < 4; ++i)
            if (row.cond[i] && *row.cond[i] != cls.pattern.s[i]) match = false;
        if (!match) continue;
        cls.table_row = row.num;
        if (row.num == 4) cls.notes.push_back("rows 4 and 6 carry identical conditions");
        if (row.count != *cls.n_fix)
            cls.notes.push_back("catalog count disagrees with the monotonicity skeleton");
        break;
    }

    // theorem-style guarantees from the boundary extrema alone
    const Sign s0 = cls.pattern.s[0], s3 = cls.pattern.s[3];
    if (s0 == Sign::Zero || s3 == Sign::Zero) {
        cls.lower_bound = 2;
        cls.notes.push_back(s0 == Sign::Zero
                                ? "tangency at the least extremum guarantees at least 2 roots"
                                : "tangency at the greatest extremum guarantees at least 2 roots");
    }
    if (s0 == Sign::Pos && s3 == Sign::Neg) {
        cls.lower_bound = 3;
        cls.notes.push_back("P5 positive at the least and negative at the greatest extremum "
                            "guarantees at least 3 roots");
    }
    if (cls.pattern.ambiguous())
        cls.notes.push_back("sign pattern near the zero-band boundary; oracle adjudicates");
    return cls;
}

}  // namespace quartix
