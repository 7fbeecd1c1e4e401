#include "quartix/report.hpp"

#include <cstdio>
#include <sstream>

namespace quartix {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

template <typename It>
std::string num_list(It begin, It end) {
    std::string out = "[";
    for (It it = begin; it != end; ++it) {
        if (it != begin) out += ", ";
        out += fmt(*it);
    }
    return out + "]";
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Theorem1: return "theorem_1";
        case Regime::Table2: return "table_2";
        default: return "oracle_only";
    }
}

std::string input_echo_json(const Config& cfg) {
    std::ostringstream o;
    if (cfg.op) {
        const OperatorConfig& oc = *cfg.op;
        o << "{\"mode\": \"operator\", \"coeff_form\": \"" << oc.coeff_form << "\", \"a\": "
          << num_list(oc.a_in.begin(), oc.a_in.end()) << ", \"b\": "
          << num_list(oc.b_in.begin(), oc.b_in.end()) << "}";
    } else {
        const GibbsConfig& gc = *cfg.gibbs;
        o << "{\"mode\": \"gibbs\", \"phi1\": " << num_list(gc.phi1.begin(), gc.phi1.end())
          << ", \"phi2\": " << num_list(gc.phi2.begin(), gc.phi2.end())
          << ", \"psi1\": " << num_list(gc.psi1.begin(), gc.psi1.end())
          << ", \"psi2\": " << num_list(gc.psi2.begin(), gc.psi2.end())
          << ", \"J\": " << fmt(gc.ps.J) << ", \"beta\": " << fmt(gc.ps.beta)
          << ", \"quadrature\": {\"rule\": \""
          << (gc.quad.rule == QuadRule::GaussLegendre ? "gauss_legendre" : "simpson")
          << "\", \"panels_or_nodes\": " << gc.quad.panels_or_nodes
          << ", \"refinement_rel\": " << fmt(gc.quad.refinement_rel) << "}}";
    }
    return o.str();
}

}  // namespace

std::string render_json(const Config& cfg, const AnalysisReport& rep, const GibbsReport* gibbs) {
    std::ostringstream o;
    o << "{\n";
    o << "  \"schema\": \"quartix/1-report\",\n";
    o << "  \"input\": " << input_echo_json(cfg) << ",\n";
    o << "  \"mu\": " << num_list(rep.mu.begin(), rep.mu.end()) << ",\n";
    o << "  \"descartes_bound\": " << rep.descartes_bound << ",\n";

    o << "  \"resolvent\": ";
    if (rep.resolvent) {
        const ResolventData& rd = *rep.resolvent;
        o << "{\"p\": " << fmt(rd.p) << ", \"q\": " << fmt(rd.q) << ", \"r\": " << fmt(rd.r)
          << ", \"a\": " << fmt(rd.a) << ", \"b\": " << fmt(rd.b) << ", \"Q\": " << fmt(rd.Q);
        if (rd.z0) o << ", \"z0\": " << fmt(*rd.z0);
        if (rd.alpha) o << ", \"alpha\": " << fmt(*rd.alpha);
        o << "}";
    } else {
        o << "null";
    }
    o << ",\n";

    o << "  \"lambdas\": ";
    if (rep.extrema)
        o << num_list(rep.extrema->lambda.begin(), rep.extrema->lambda.end());
    else
        o << "null";
    o << ",\n";

    o << "  \"p5_at_lambdas\": ";
    if (rep.p5_at_lambda)
        o << num_list(rep.p5_at_lambda->begin(), rep.p5_at_lambda->end());
    else
        o << "null";
    o << ",\n";

    const Classification& cls = rep.classification;
    o << "  \"classification\": {\n";
    o << "    \"regime\": \"" << regime_name(cls.regime) << "\",\n";
    o << "    \"table_row\": " << (cls.table_row ? std::to_string(*cls.table_row) : "null") << ",\n";
    o << "    \"n_fix\": " << (cls.n_fix ? std::to_string(*cls.n_fix) : "null") << ",\n";
    o << "    \"lower_bound\": " << (cls.lower_bound ? std::to_string(*cls.lower_bound) : "null")
      << ",\n";
    o << "    \"boundary_flags\": [";
    for (int i = 0; i < 4; ++i)
        o << (i ? ", " : "") << (cls.pattern.boundary[static_cast<std::size_t>(i)] ? "true" : "false");
    o << "],\n";
    o << "    \"notes\": [";
    for (std::size_t i = 0; i < cls.notes.size(); ++i)
        o << (i ? ", " : "") << "\"" << escape(cls.notes[i]) << "\"";
    o << "]\n  },\n";

    o << "  \"n_fix\": " << rep.n_fix << ",\n";
    o << "  \"fixed_points\": [";
    for (std::size_t i = 0; i < rep.fixed_points.size(); ++i) {
        const FixedPoint& fp = rep.fixed_points[i];
        o << (i ? "," : "") << "\n    {\"xi\": " << fmt(fp.xi) << ", \"x\": " << fmt(fp.x)
          << ", \"y\": " << fmt(fp.y) << ", \"residual\": " << fmt(fp.residual)
          << ", \"multiplicity\": " << fp.multiplicity << "}";
    }
    o << (rep.fixed_points.empty() ? "]" : "\n  ]") << ",\n";

    o << "  \"method\": \""
      << (rep.method == Method::ClosedForm ? "closed_form" : "oracle_fallback") << "\",\n";
    o << "  \"consistent\": " << (rep.consistent && (!gibbs || gibbs->consistent) ? "true" : "false");

    if (gibbs) {
        o << ",\n  \"gibbs\": {\n";
        o << "    \"a\": " << num_list(gibbs->op.a.begin(), gibbs->op.a.end()) << ",\n";
        o << "    \"b\": " << num_list(gibbs->op.b.begin(), gibbs->op.b.end()) << ",\n";
        o << "    \"n_measures\": " << gibbs->n_measures << ",\n";
        o << "    \"certificates\": [";
        for (std::size_t i = 0; i < gibbs->certificates.size(); ++i) {
            const HammersteinCertificate& c = gibbs->certificates[i];
            o << (i ? "," : "") << "\n      {\"residual_h\": " << fmt(c.residual_h)
              << ", \"residual_r\": " << fmt(c.residual_r) << ", \"g_at_0\": " << fmt(c.g_at_0)
              << ", \"certified\": " << (c.certified ? "true" : "false") << "}";
        }
        o << (gibbs->certificates.empty() ? "]" : "\n    ]") << "\n  }";
    }
    o << "\n}\n";
    return o.str();
}

std::string render_text(const Config& cfg, const AnalysisReport& rep, const GibbsReport* gibbs) {
    std::ostringstream o;
    o << "quartix report\n";
    o << "mode: " << cfg.mode << "\n";
    o << "mu:";
    for (double m : rep.mu) o << " " << fmt(m);
    o << "\ndescartes bound: " << rep.descartes_bound << "\n";
    if (rep.resolvent) {
        const ResolventData& rd = *rep.resolvent;
        o << "resolvent: p=" << fmt(rd.p) << " q=" << fmt(rd.q) << " r=" << fmt(rd.r)
          << " a=" << fmt(rd.a) << " b=" << fmt(rd.b) << " Q=" << fmt(rd.Q);
        if (rd.z0) o << " z0=" << fmt(*rd.z0);
        o << "\n";
    }
    if (rep.extrema) {
        o << "lambdas:";
        for (double l : rep.extrema->lambda) o << " " << fmt(l);
        o << "\nP5 at lambdas:";
        for (double v : *rep.p5_at_lambda) o << " " << fmt(v);
        o << "\n";
    }
    o << "regime: " << regime_name(rep.classification.regime);
    if (rep.classification.table_row) o << " (row " << *rep.classification.table_row << ")";
    o << "\n";
    if (rep.classification.lower_bound)
        o << "guaranteed at least: " << *rep.classification.lower_bound << "\n";
    for (const std::string& n : rep.classification.notes) o << "note: " << n << "\n";
    o << "n_fix: " << rep.n_fix << "\n";
    for (const FixedPoint& fp : rep.fixed_points)
        o << "  xi=" << fmt(fp.xi) << " x=" << fmt(fp.x) << " y=" << fmt(fp.y)
          << " residual=" << fmt(fp.residual) << " multiplicity=" << fp.multiplicity << "\n";
    o << "method: " << (rep.method == Method::ClosedForm ? "closed_form" : "oracle_fallback")
      << "\n";
    o << "consistent: " << (rep.consistent && (!gibbs || gibbs->consistent) ? "yes" : "no") << "\n";
    if (gibbs) {
        o << "gibbs a:";
        for (double v : gibbs->op.a) o << " " << fmt(v);
        o << "\ngibbs b:";
        for (double v : gibbs->op.b) o << " " << fmt(v);
        o << "\nmeasures: " << gibbs->n_measures << "\n";
        for (std::size_t i = 0; i < gibbs->certificates.size(); ++i) {
            const HammersteinCertificate& c = gibbs->certificates[i];
            o << "  certificate " << i + 1 << ": residual_h=" << fmt(c.residual_h)
              << " residual_r=" << fmt(c.residual_r) << " g(0)=" << fmt(c.g_at_0)
              << " certified=" << (c.certified ? "yes" : "no") << "\n";
        }
    }
    return o.str();
}

}  // namespace quartix
