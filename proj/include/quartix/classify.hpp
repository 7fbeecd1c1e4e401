#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quartix/closed_form.hpp"
#include "quartix/poly.hpp"

namespace quartix {

enum class Sign { Neg, Zero, Pos };

// Signs of P5 at the sorted extrema.  A value inside the zero band counts as
// Zero; the boundary flag marks the gray zone around the band edge
// (band/10 < |P5(lambda_i)| <= 10 * band) where the discrete sign is not
// trustworthy and the oracle should adjudicate.
struct SignPattern {
    std::array<Sign, 4> s{};
    std::array<bool, 4> boundary{};

    bool ambiguous() const {
        for (bool f : boundary)
            if (f) return true;
        return false;
    }
};

enum class Regime {
    Theorem1,    // all extrema negative: exactly one positive fixed ratio
    Table2,      // all extrema positive: catalog + skeleton count applies
    OracleOnly,  // closed form not decisive for this input
};

struct Classification {
    Regime regime = Regime::OracleOnly;
    std::optional<int> n_fix;        // exact root count, when the regime decides it
    std::optional<int> lower_bound;  // theorem-style guarantee, when one applies
    std::optional<int> table_row;    // first matching catalog row
    SignPattern pattern{};           // meaningful only for Table2
    std::vector<std::string> notes;
};

// Monotonicity-skeleton count: with P5(0) < 0, P5(+inf) = +inf and strict
// alternation (up, down, up, down, up) across the four extrema, the number
// of distinct positive roots equals the number of tangencies (Zero signs)
// plus the number of strict sign oppositions between consecutive nodes of
// the chain  (0, lambda1..lambda4, +inf).
int skeleton_count(const std::array<Sign, 4>& s);

// Classifies the positive-root count of P5 from the closed-form extremum
// data.  Decisive only when the casus-irreducibilis route was fully valid
// (Q < 0, z0 > 0, four certified extrema) and the extrema all lie on one
// side of zero; anything else yields Regime::OracleOnly with a note.
Classification classify(const Quintic& quintic, const ResolventData& rd,
                        const std::optional<ExtremaSet>& ext, double zero_band_rel = 1e-9);

}  // namespace quartix
