#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quartix/gibbs.hpp"
#include "quartix/quadrature.hpp"
#include "quartix/quartic_operator.hpp"

namespace quartix {

// Parsed "quartix/1" config document.  Exactly one of op / gibbs is set,
// matching the "mode" field.  Raw input arrays are kept for echoing into
// reports (potentials are ascending-coefficient lists, as in the file).
struct OperatorConfig {
    std::string coeff_form;  // "reduced" | "expanded"
    std::array<double, 5> a_in{}, b_in{};
    QuarticOperator op;
};

struct GibbsConfig {
    std::vector<double> phi1, phi2, psi1, psi2;  // ascending coefficients
    PotentialSet ps;
    QuadratureConfig quad;
};

struct Config {
    std::string mode;  // "operator" | "gibbs"
    std::optional<OperatorConfig> op;
    std::optional<GibbsConfig> gibbs;
};

// Parses and validates a config document.  Throws std::invalid_argument
// naming the offending field on any schema violation.
Config parse_config(const std::string& json_text);

// Reads the file and parses it.  Throws std::invalid_argument on a missing
// or unreadable file as well.
Config load_config(const std::string& path);

}  // namespace quartix
