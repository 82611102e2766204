#pragma once

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/qwalk.hpp"

namespace qwcli {

/// Raw experiment options as parsed from the JSON config and flag overrides.
struct ExperimentConfig {
    double theta = std::numbers::pi / 4.0;
    double alpha_re = 1.0 / std::numbers::sqrt2;
    double alpha_im = 0.0;
    double beta_re = 0.0;
    double beta_im = 1.0 / std::numbers::sqrt2;
    std::string weight = "unit";
    double sigma = 0.0;  // 0 = auto (0.25 |c|) for the gaussian weight
    std::string weight_csv;
    std::vector<std::int64_t> t_list = {1000};
    int r_max = 8;
    std::uint64_t grid_size = 1u << 18;
    double tail_tol = 1e-10;
    std::string out = "out";
};

/// Load config JSON (all keys optional) into defaults.
ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Fully validated, ready-to-run form. The coin is renormalized to an exact
/// unit vector after the 1e-9 acceptance window.
struct ResolvedConfig {
    ExperimentConfig raw;  // with defaults and the resolved sigma filled in
    qwalk::CoinAngle theta;
    qwalk::cd alpha;
    qwalk::cd beta;
    qwalk::WeightSpec weight = qwalk::WeightSpec::unit();
    std::optional<qwalk::DensityKind> closed_form;  // set for the built-in kinds
    std::filesystem::path out_dir;
};

ResolvedConfig resolve(const ExperimentConfig& cfg);

/// Two-column CSV (k, w(k)) on a uniform grid starting at -pi; >= 16 rows.
qwalk::WeightSpec load_weight_csv(const std::filesystem::path& path);

}  // namespace qwcli
