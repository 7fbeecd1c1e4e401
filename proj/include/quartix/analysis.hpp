#pragma once

#include <array>
#include <optional>
#include <vector>

#include "quartix/classify.hpp"
#include "quartix/closed_form.hpp"
#include "quartix/poly.hpp"
#include "quartix/quartic_operator.hpp"

namespace quartix {

enum class Method { ClosedForm, OracleFallback };

struct AnalysisOptions {
    double zero_band_rel = 1e-9;
    double root_tol = 1e-12;
    bool run_oracle = true;
    bool run_closed_form = true;
};

struct AnalysisReport {
    std::array<double, 6> mu{};
    int descartes_bound = 0;
    std::optional<ResolventData> resolvent;
    std::optional<ExtremaSet> extrema;
    std::optional<std::array<double, 4>> p5_at_lambda;
    Classification classification;
    RootSet roots;             // positive roots of the quintic
    std::vector<FixedPoint> fixed_points;
    Method method = Method::OracleFallback;
    int n_fix = 0;             // distinct strictly positive fixed points
    bool consistent = true;    // closed-form count agreed with the oracle
};

// Full pipeline: reduce the operator to its ratio quintic, classify the root
// count in closed form where the extremum catalog applies, confirm against
// the numeric root isolator, and recover certified fixed points.
AnalysisReport count_fixed_points(const QuarticOperator& op,
                                  const AnalysisOptions& opt = {});

}  // namespace quartix
