#pragma once

#include <string>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

enum class WeightKind {
    Unit,        // w(k) = 1, the localized walk
    Semicircle,  // w(k) = sin k / (1 - c^2 sin^2 k)
    Arcsine,     // w(k) = 1 / sqrt(1 - c^2 sin^2 k)
    Gaussian,    // w(k) = sqrt(|sin k| / (1 - c^2 sin^2 k)^{3/2}) exp{-c^2 cos^2 k / (4 s^2_g (1 - c^2 sin^2 k))}
    Uniform,     // w(k) = sqrt(|sin k| / (1 - c^2 sin^2 k)^{3/2})
    Tabulated,   // linear interpolation of uniform samples over [-pi, pi)
};

std::string weight_kind_name(WeightKind kind);

/// Descriptor of a 2pi-periodic square-integrable weight function.
/// The seed kinds depend on the coin angle through c and s.
class WeightSpec {
  public:
    static WeightSpec unit();
    static WeightSpec semicircle(CoinAngle theta);
    static WeightSpec arcsine(CoinAngle theta);
    static WeightSpec gaussian(CoinAngle theta, double sigma);
    static WeightSpec uniform(CoinAngle theta);
    /// samples[i] = w(-pi + 2*pi*i/n), n >= 16.
    static WeightSpec tabulated(std::vector<double> samples);

    WeightKind kind() const { return kind_; }
    CoinAngle theta() const { return theta_; }
    double sigma() const { return sigma_; }
    const std::vector<double>& table() const { return table_; }

  private:
    WeightSpec() = default;

    WeightKind kind_ = WeightKind::Unit;
    CoinAngle theta_{};
    double sigma_ = 0.0;
    std::vector<double> table_;
};

/// w(k) with k reduced mod 2pi into [-pi, pi).
double weight_eval(const WeightSpec& w, double k);

/// W(w) = integral of w(k)^2 over [-pi, pi], by uniform-grid trapezoid split at
/// the kink points {-pi, -pi/2, 0, pi/2, pi}, Richardson-refined from grid_size
/// and 2*grid_size panels. Tabulated specs integrate their interpolant exactly.
/// Throws if W underflows or the grid-doubling consistency check fails.
double weight_norm(const WeightSpec& w, std::size_t grid_size = (1u << 18));

}  // namespace qwalk
