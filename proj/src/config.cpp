#include "quartix/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quartix {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw std::invalid_argument("config: field \"" + field + "\" " + what);
}

double get_number(const json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "is missing");
    if (!j[field].is_number()) fail(field, "must be a number");
    return j[field].get<double>();
}

std::array<double, 5> get_array5(const json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "is missing");
    const json& arr = j[field];
    if (!arr.is_array() || arr.size() != 5) fail(field, "must be an array of 5 numbers");
    std::array<double, 5> out{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (!arr[i].is_number()) fail(field, "must contain only numbers");
        out[i] = arr[i].get<double>();
    }
    return out;
}

std::vector<double> get_poly_array(const json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "is missing");
    const json& arr = j[field];
    if (!arr.is_array() || arr.empty()) fail(field, "must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) fail(field, "must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

// config polynomials are ascending; Poly stores descending
Poly poly_from_ascending(std::vector<double> asc) {
    std::reverse(asc.begin(), asc.end());
    return Poly(std::move(asc));
}

OperatorConfig parse_operator(const json& j) {
    OperatorConfig oc;
    oc.coeff_form = j.value("coeff_form", std::string("reduced"));
    if (oc.coeff_form != "reduced" && oc.coeff_form != "expanded")
        fail("coeff_form", "must be \"reduced\" or \"expanded\"");
    oc.a_in = get_array5(j, "a");
    oc.b_in = get_array5(j, "b");
    oc.op = oc.coeff_form == "reduced" ? QuarticOperator::from_reduced(oc.a_in, oc.b_in)
                                       : QuarticOperator::from_expanded(oc.a_in, oc.b_in);
    return oc;
}

GibbsConfig parse_gibbs(const json& j) {
    GibbsConfig gc;
    gc.phi1 = get_poly_array(j, "phi1");
    gc.phi2 = get_poly_array(j, "phi2");
    gc.psi1 = get_poly_array(j, "psi1");
    gc.psi2 = get_poly_array(j, "psi2");
    gc.ps.phi1 = poly_from_ascending(gc.phi1);
    gc.ps.phi2 = poly_from_ascending(gc.phi2);
    gc.ps.psi1 = poly_from_ascending(gc.psi1);
    gc.ps.psi2 = poly_from_ascending(gc.psi2);
    gc.ps.J = get_number(j, "J");
    gc.ps.beta = get_number(j, "beta");

    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        if (!q.is_object()) fail("quadrature", "must be an object");
        const std::string rule = q.value("rule", std::string("gauss_legendre"));
        if (rule == "gauss_legendre")
            gc.quad.rule = QuadRule::GaussLegendre;
        else if (rule == "simpson")
            gc.quad.rule = QuadRule::Simpson;
        else
            fail("quadrature.rule", "must be \"gauss_legendre\" or \"simpson\"");
        if (q.contains("panels_or_nodes")) {
            if (!q["panels_or_nodes"].is_number_integer())
                fail("quadrature.panels_or_nodes", "must be an integer");
            gc.quad.panels_or_nodes = q["panels_or_nodes"].get<int>();
            if (gc.quad.panels_or_nodes < 8) fail("quadrature.panels_or_nodes", "must be at least 8");
        }
        if (q.contains("refinement_rel")) {
            gc.quad.refinement_rel = q["refinement_rel"].get<double>();
            if (!(gc.quad.refinement_rel > 0.0)) fail("quadrature.refinement_rel", "must be positive");
        }
    }
    validate_potential_set(gc.ps);
    return gc;
}

}  // namespace

Config parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: document must be a JSON object");
    const std::string schema = j.value("schema", std::string());
    if (schema != "quartix/1") fail("schema", "must be \"quartix/1\"");
    if (!j.contains("mode") || !j["mode"].is_string()) fail("mode", "must be a string");

    Config cfg;
    cfg.mode = j["mode"].get<std::string>();
    if (cfg.mode == "operator")
        cfg.op = parse_operator(j);
    else if (cfg.mode == "gibbs")
        cfg.gibbs = parse_gibbs(j);
    else
        fail("mode", "must be \"operator\" or \"gibbs\"");
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace quartix
