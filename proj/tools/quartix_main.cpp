#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "quartix/analysis.hpp"
#include "quartix/config.hpp"
#include "quartix/errors.hpp"
#include "quartix/gibbs.hpp"
#include "quartix/report.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format = "json";
    double tol = 1e-9;
    bool oracle_only = false;
    bool no_oracle = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("config", f.config_path, "path to a quartix/1 config file")->required();
    cmd->add_option("--out", f.out_path, "write the report to this path instead of stdout");
    cmd->add_option("--format", f.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--tol", f.tol, "zero-band relative tolerance for sign classification")
        ->check(CLI::PositiveNumber);
    auto* oracle_only =
        cmd->add_flag("--oracle-only", f.oracle_only, "numeric root isolation only");
    cmd->add_flag("--no-oracle", f.no_oracle, "closed form only; refuses indecisive inputs")
        ->excludes(oracle_only);
}

quartix::AnalysisOptions options_from(const CommonFlags& f) {
    quartix::AnalysisOptions opt;
    opt.zero_band_rel = f.tol;
    opt.run_oracle = !f.no_oracle;
    opt.run_closed_form = !f.oracle_only;
    return opt;
}

// returns 0 on success, 1 when the target cannot be written
int emit(const std::string& text, const CommonFlags& f) {
    if (f.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(f.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << f.out_path << "\n";
        return 1;
    }
    out << text;
    return 0;
}

int run_analyze(const CommonFlags& f) {
    const quartix::Config cfg = quartix::load_config(f.config_path);
    if (!cfg.op)
        throw std::invalid_argument("config: mode is \"gibbs\"; use the gibbs subcommand");
    const quartix::AnalysisReport rep = quartix::count_fixed_points(cfg.op->op, options_from(f));
    const std::string text =
        f.format == "text" ? render_text(cfg, rep, nullptr) : render_json(cfg, rep, nullptr);
    if (const int rc = emit(text, f); rc != 0) return rc;
    return rep.consistent ? 0 : 2;
}

int run_gibbs(const CommonFlags& f) {
    const quartix::Config cfg = quartix::load_config(f.config_path);
    if (!cfg.gibbs)
        throw std::invalid_argument("config: mode is \"operator\"; use the analyze subcommand");
    const quartix::GibbsReport rep =
        quartix::count_gibbs_measures(cfg.gibbs->ps, cfg.gibbs->quad, options_from(f));
    const std::string text = f.format == "text" ? render_text(cfg, rep.analysis, &rep)
                                                : render_json(cfg, rep.analysis, &rep);
    if (const int rc = emit(text, f); rc != 0) return rc;
    return rep.consistent ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive fixed points of planar quartic operators"};
    app.require_subcommand(1);

    CommonFlags fa, fg;
    CLI::App* analyze =
        app.add_subcommand("analyze", "count the fixed points of an operator config");
    add_common(analyze, fa);
    CLI::App* gibbs =
        app.add_subcommand("gibbs", "count the Gibbs measures of a potential config");
    add_common(gibbs, fg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        return analyze->parsed() ? run_analyze(fa) : run_gibbs(fg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // closed-form refusal, certification failure, non-convergence
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
