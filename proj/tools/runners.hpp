#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace qwcli {

/// Fixed 17-significant-digit formatting, locale independent.
std::string fmt17(double v);

struct RunSummary {
    std::vector<std::filesystem::path> files;
};

/// One distribution CSV (x, prob) plus JSON sidecar per t in t_list.
RunSummary run_simulate(const ResolvedConfig& rc);

/// Density curve CSV on a 2001-point grid over [-0.999|c|, 0.999|c|]; emits a
/// closed-form column next to the general evaluation for the built-in seeds.
RunSummary run_density(const ResolvedConfig& rc);

/// Moment table CSV (one row per t, r) plus a convergence report when t_list
/// has at least three entries.
RunSummary run_moments(const ResolvedConfig& rc);

/// Four overlay CSVs (semicircle, arcsine, gaussian, uniform) with the
/// caption coin alpha = 1/sqrt(2), beta = i/sqrt(2), plus a gnuplot script.
RunSummary run_figure1(const ResolvedConfig& rc);

}  // namespace qwcli
