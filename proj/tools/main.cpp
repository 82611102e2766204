#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "config.hpp"
#include "runners.hpp"

namespace {

void add_common_flags(CLI::App* cmd, qwcli::ExperimentConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    cmd->add_option("--theta", cfg.theta, "coin angle in radians");
    cmd->add_option("--alpha-re", cfg.alpha_re, "Re alpha");
    cmd->add_option("--alpha-im", cfg.alpha_im, "Im alpha");
    cmd->add_option("--beta-re", cfg.beta_re, "Re beta");
    cmd->add_option("--beta-im", cfg.beta_im, "Im beta");
    cmd->add_option("--weight", cfg.weight,
                    "weight kind: unit|semicircle|arcsine|gaussian|uniform|tabulated");
    cmd->add_option("--sigma", cfg.sigma, "gaussian weight sigma (0 = 0.25|c|)");
    cmd->add_option("--weight-csv", cfg.weight_csv, "two-column CSV (k, w) for tabulated");
    cmd->add_option("--t", cfg.t_list, "step counts, ascending");
    cmd->add_option("--r-max", cfg.r_max, "largest moment order");
    cmd->add_option("--grid-size", cfg.grid_size, "k-grid size (power of two)");
    cmd->add_option("--tail-tol", cfg.tail_tol, "synthesis tail tolerance");
    cmd->add_option("--out", cfg.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-state quantum walk laboratory: simulation, limit laws, moment pipelines"};
    app.require_subcommand(1);

    qwcli::ExperimentConfig cfg;
    std::string config_path;

    CLI::App* simulate = app.add_subcommand("simulate", "evolve the walk, write (x, prob) CSVs");
    CLI::App* density = app.add_subcommand("density", "evaluate the limit density curve");
    CLI::App* moments = app.add_subcommand("moments", "simulated / x-space / k-space moments");
    CLI::App* figure1 = app.add_subcommand(
        "figure1", "four-panel overlay with the caption coin (defaults t = 5000)");
    for (CLI::App* cmd : {simulate, density, moments, figure1})
        add_common_flags(cmd, cfg, config_path);

    try {
        app.parse(argc, argv);
        CLI::App* cmd = app.get_subcommands().front();

        if (!config_path.empty()) {
            // file as base, explicit flags override
            qwcli::ExperimentConfig base = qwcli::load_config_file(config_path);
            const auto keep = [&](const char* name) { return cmd->count(name) > 0; };
            if (!keep("--theta")) cfg.theta = base.theta;
            if (!keep("--alpha-re")) cfg.alpha_re = base.alpha_re;
            if (!keep("--alpha-im")) cfg.alpha_im = base.alpha_im;
            if (!keep("--beta-re")) cfg.beta_re = base.beta_re;
            if (!keep("--beta-im")) cfg.beta_im = base.beta_im;
            if (!keep("--weight")) cfg.weight = base.weight;
            if (!keep("--sigma")) cfg.sigma = base.sigma;
            if (!keep("--weight-csv")) cfg.weight_csv = base.weight_csv;
            if (!keep("--t")) cfg.t_list = base.t_list;
            if (!keep("--r-max")) cfg.r_max = base.r_max;
            if (!keep("--grid-size")) cfg.grid_size = base.grid_size;
            if (!keep("--tail-tol")) cfg.tail_tol = base.tail_tol;
            if (!keep("--out")) cfg.out = base.out;
        }
        if (cmd == figure1 && cmd->count("--t") == 0) cfg.t_list = {5000};

        const qwcli::ResolvedConfig rc = qwcli::resolve(cfg);
        qwcli::RunSummary summary;
        if (cmd == simulate) summary = qwcli::run_simulate(rc);
        else if (cmd == density) summary = qwcli::run_density(rc);
        else if (cmd == moments) summary = qwcli::run_moments(rc);
        else summary = qwcli::run_figure1(rc);
        for (const auto& f : summary.files) std::cout << f.string() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << std::endl;
        return 1;
    }
}
