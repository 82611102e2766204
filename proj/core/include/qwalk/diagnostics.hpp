#pragma once

#include <vector>

#include "qwalk/density.hpp"
#include "qwalk/moments.hpp"

namespace qwalk {

/// Sup over lattice points of |empirical CDF of X_t/t - limit CDF|, the
/// empirical CDF taken right-continuous at its step points.
double ks_distance(const ProbabilityDistribution& dist, const TiltedDensity& density);

/// Atom-wise comparison against the theta = 0 two-point law: the larger of the
/// mass errors at x = -t and x = +t, plus any stray mass elsewhere.
double atom_distance(const ProbabilityDistribution& dist, const TwoPointLaw& law);

struct OverlayRow {
    double x;          // rescaled position
    double simulated;  // parity-normalized density estimate
    double limit;      // limit density at x
};

struct OverlayCurve {
    std::vector<OverlayRow> rows;
    double bin_width = 0.0;
    bool single_parity = false;

    /// integral of the simulated estimate (should be the retained mass, ~1)
    double simulated_integral() const;
};

/// Rescaled histogram of the distribution against the limit density.
/// bin_width = 0 selects per-occupied-site rows: estimates P(x) * t/2 on a
/// single-parity walk (site spacing 2/t) and P(x) * t otherwise, parity
/// occupancy detected by per-class mass with threshold 1e-6. A positive
/// bin_width (>= 2/t) aggregates sites into bins centered on multiples of it.
OverlayCurve density_overlay(const ProbabilityDistribution& dist, const TiltedDensity& density,
                             double bin_width = 0.0);

struct ConvergenceReport {
    std::vector<std::int64_t> t_values;
    std::vector<double> ks;                            // per t
    std::vector<int> r_values;
    std::vector<std::vector<double>> moment_errors;    // [t index][r index], |empirical - xspace|
};

struct RateFit {
    double slope = 0.0;
    double residual = 0.0;  // rms residual of the log-log fit
    bool degenerate = false;
};

/// Least-squares slope of log(moment error at r = 2) against log t.
RateFit rate_fit(const ConvergenceReport& report);

}  // namespace qwalk
