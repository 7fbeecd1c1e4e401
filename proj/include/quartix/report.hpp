#pragma once

#include <string>

#include "quartix/analysis.hpp"
#include "quartix/config.hpp"
#include "quartix/gibbs.hpp"

namespace quartix {

// Deterministic report rendering: fixed field order, floats printed with 17
// significant digits, so identical inputs produce byte-identical output.
// `gibbs` is null in operator mode; in gibbs mode `rep` is gibbs->analysis.
std::string render_json(const Config& cfg, const AnalysisReport& rep, const GibbsReport* gibbs);
std::string render_text(const Config& cfg, const AnalysisReport& rep, const GibbsReport* gibbs);

}  // namespace quartix
