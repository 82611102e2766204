#include "config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwcli {

using nlohmann::json;

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path.string());
    json j = json::parse(in);

    ExperimentConfig cfg;
    cfg.theta = j.value("theta", cfg.theta);
    if (j.contains("alpha")) {
        cfg.alpha_re = j["alpha"].at(0).get<double>();
        cfg.alpha_im = j["alpha"].at(1).get<double>();
    }
    if (j.contains("beta")) {
        cfg.beta_re = j["beta"].at(0).get<double>();
        cfg.beta_im = j["beta"].at(1).get<double>();
    }
    if (j.contains("weight")) {
        const json& w = j["weight"];
        if (w.is_string()) {
            cfg.weight = w.get<std::string>();
        } else {
            cfg.weight = w.value("kind", cfg.weight);
            cfg.sigma = w.value("sigma", cfg.sigma);
            cfg.weight_csv = w.value("csv", cfg.weight_csv);
        }
    }
    if (j.contains("t_list")) cfg.t_list = j["t_list"].get<std::vector<std::int64_t>>();
    cfg.r_max = j.value("r_max", cfg.r_max);
    cfg.grid_size = j.value("grid_size", cfg.grid_size);
    cfg.tail_tol = j.value("tail_tol", cfg.tail_tol);
    cfg.out = j.value("out", cfg.out);
    return cfg;
}

qwalk::WeightSpec load_weight_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("weight csv: cannot open " + path.string());
    std::vector<double> ks, ws;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;  // header row
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
            throw std::runtime_error("weight csv: expected two comma-separated columns");
        ks.push_back(std::stod(a));
        ws.push_back(std::stod(b));
    }
    if (ks.size() < 16) throw std::runtime_error("weight csv: needs >= 16 samples");

    const double dk = 2.0 * std::numbers::pi / static_cast<double>(ks.size());
    if (std::abs(ks.front() + std::numbers::pi) > 1e-9)
        throw std::runtime_error("weight csv: grid must start at -pi");
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (std::abs(ks[i] - (-std::numbers::pi + dk * static_cast<double>(i))) > 1e-9)
            throw std::runtime_error("weight csv: grid must be uniform over [-pi, pi)");
    return qwalk::WeightSpec::tabulated(std::move(ws));
}

ResolvedConfig resolve(const ExperimentConfig& cfg) {
    ResolvedConfig rc;
    rc.raw = cfg;
    rc.theta = qwalk::CoinAngle{cfg.theta};

    const double norm = cfg.alpha_re * cfg.alpha_re + cfg.alpha_im * cfg.alpha_im +
                        cfg.beta_re * cfg.beta_re + cfg.beta_im * cfg.beta_im;
    if (std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("config: |alpha|^2 + |beta|^2 must be 1 within 1e-9");
    const double rescale = 1.0 / std::sqrt(norm);
    rc.alpha = qwalk::cd{cfg.alpha_re, cfg.alpha_im} * rescale;
    rc.beta = qwalk::cd{cfg.beta_re, cfg.beta_im} * rescale;

    if (cfg.t_list.empty()) throw std::invalid_argument("config: t_list must be non-empty");
    if (!std::is_sorted(cfg.t_list.begin(), cfg.t_list.end()) ||
        std::adjacent_find(cfg.t_list.begin(), cfg.t_list.end()) != cfg.t_list.end())
        throw std::invalid_argument("config: t_list must be strictly ascending");
    if (cfg.t_list.front() < 1) throw std::invalid_argument("config: t values must be >= 1");
    if (cfg.r_max < 0) throw std::invalid_argument("config: r_max must be >= 0");

    const double abs_c = std::abs(std::cos(cfg.theta));
    double sigma = cfg.sigma;
    if (cfg.weight == "gaussian" && sigma == 0.0) sigma = 0.25 * abs_c;
    rc.raw.sigma = sigma;

    if (cfg.weight == "unit") {
        rc.weight = qwalk::WeightSpec::unit();
        rc.closed_form = qwalk::DensityKind::Konno;
    } else if (cfg.weight == "semicircle") {
        rc.weight = qwalk::WeightSpec::semicircle(rc.theta);
        rc.closed_form = qwalk::DensityKind::Semicircle;
    } else if (cfg.weight == "arcsine") {
        rc.weight = qwalk::WeightSpec::arcsine(rc.theta);
        rc.closed_form = qwalk::DensityKind::Arcsine;
    } else if (cfg.weight == "gaussian") {
        rc.weight = qwalk::WeightSpec::gaussian(rc.theta, sigma);
        rc.closed_form = qwalk::DensityKind::TruncatedGaussian;
    } else if (cfg.weight == "uniform") {
        rc.weight = qwalk::WeightSpec::uniform(rc.theta);
        rc.closed_form = qwalk::DensityKind::Uniform;
    } else if (cfg.weight == "tabulated") {
        if (cfg.weight_csv.empty())
            throw std::invalid_argument("config: tabulated weight needs a csv path");
        rc.weight = load_weight_csv(cfg.weight_csv);
        rc.closed_form = std::nullopt;
    } else {
        throw std::invalid_argument("config: unknown weight kind '" + cfg.weight + "'");
    }

    rc.out_dir = cfg.out;
    return rc;
}

}  // namespace qwcli
