#pragma once

#include <vector>

#include "qwalk/density.hpp"

namespace qwalk {

/// sum_x (x/t)^r P(X_t = x); the pre-limit moment.
double empirical_moment(const ProbabilityDistribution& dist, int r);

/// integral of x^r times the density, adaptive quadrature under x = |c| sin u.
double xspace_moment(const TiltedDensity& density, int r, double abs_tol = 1e-10);

/// The k-space limit-moment integral over [0, pi]: (1/2pi) h(k)^r applied to
/// the eigenprojection brackets of F(k)(alpha,beta), trapezoid on the grid
/// split at pi/2, Richardson-refined. grid_size = total panels over [0, pi].
double kspace_moment(const WeightSpec& w, const SpectralContext& ctx, const InitCoin& coin,
                     int r, std::size_t grid_size = (1u << 16));

/// All orders 0..r_max in one pass over the grid.
std::vector<double> kspace_moments(const WeightSpec& w, const SpectralContext& ctx,
                                   const InitCoin& coin, int r_max,
                                   std::size_t grid_size = (1u << 16));

struct MomentReport {
    int r = 0;
    std::int64_t t = 0;
    double simulated = 0.0;
    double xspace = 0.0;
    double kspace = 0.0;

    double diff_sim_x() const { return std::abs(simulated - xspace); }
    double diff_sim_k() const { return std::abs(simulated - kspace); }
    double diff_x_k() const { return std::abs(xspace - kspace); }
};

}  // namespace qwalk
