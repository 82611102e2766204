#include "qwalk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwalk {

double ks_distance(const ProbabilityDistribution& dist, const TiltedDensity& density) {
    if (dist.time < 1) throw std::invalid_argument("ks_distance: distribution time must be >= 1");
    const double t = static_cast<double>(dist.time);
    const double ac = density.support();

    double emp = 0.0;
    double lim_prev_y = -ac;  // limit CDF accumulated up to this rescaled point
    double lim = 0.0;
    double sup = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        emp += dist.probs[i];
        const double y = static_cast<double>(dist.origin + static_cast<std::int64_t>(i)) / t;
        if (y <= -ac) {
            sup = std::max(sup, emp);  // limit CDF is 0 here
            continue;
        }
        if (y < ac) {
            lim += density_mass_between(density, lim_prev_y, y, 1e-12);
            lim_prev_y = y;
            sup = std::max(sup, std::abs(emp - std::min(lim, 1.0)));
        } else {
            sup = std::max(sup, std::abs(emp - 1.0));
        }
    }
    return sup;
}

double atom_distance(const ProbabilityDistribution& dist, const TwoPointLaw& law) {
    const std::int64_t t = dist.time;
    double err = std::max(std::abs(dist.at(-t) - law.p_minus), std::abs(dist.at(t) - law.p_plus));
    double stray = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const std::int64_t x = dist.origin + static_cast<std::int64_t>(i);
        if (x != -t && x != t) stray += dist.probs[i];
    }
    return std::max(err, stray);
}

double OverlayCurve::simulated_integral() const {
    double sum = 0.0;
    for (const OverlayRow& row : rows) sum += row.simulated * bin_width;
    return sum;
}

OverlayCurve density_overlay(const ProbabilityDistribution& dist, const TiltedDensity& density,
                             double bin_width) {
    if (dist.time < 1)
        throw std::invalid_argument("density_overlay: distribution time must be >= 1");
    const double t = static_cast<double>(dist.time);
    if (bin_width != 0.0 && bin_width < 2.0 / t)
        throw std::invalid_argument("density_overlay: bin_width must be 0 (auto) or >= 2/t");

    // parity occupancy: mass on even and odd sites
    double mass_even = 0.0;
    double mass_odd = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const std::int64_t x = dist.origin + static_cast<std::int64_t>(i);
        (x % 2 == 0 ? mass_even : mass_odd) += dist.probs[i];
    }
    const bool single_parity = std::min(mass_even, mass_odd) < 1e-6;
    const int occupied_parity = mass_even >= mass_odd ? 0 : 1;

    OverlayCurve curve;
    curve.single_parity = single_parity;

    if (bin_width == 0.0) {
        // per-site estimate at the occupied-site spacing
        curve.bin_width = single_parity ? 2.0 / t : 1.0 / t;
        for (std::size_t i = 0; i < dist.probs.size(); ++i) {
            const std::int64_t x = dist.origin + static_cast<std::int64_t>(i);
            if (single_parity && ((x % 2 + 2) % 2) != occupied_parity) continue;
            const double y = static_cast<double>(x) / t;
            curve.rows.push_back({y, dist.probs[i] / curve.bin_width, density.pdf(y)});
        }
        return curve;
    }

    // aggregate into bins centered on multiples of bin_width; positions ascend,
    // so bin indices are non-decreasing
    curve.bin_width = bin_width;
    std::vector<std::pair<std::int64_t, double>> mass_by_bin;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double y = static_cast<double>(dist.origin + static_cast<std::int64_t>(i)) / t;
        const std::int64_t bin = static_cast<std::int64_t>(std::llround(y / bin_width));
        if (!mass_by_bin.empty() && mass_by_bin.back().first == bin)
            mass_by_bin.back().second += dist.probs[i];
        else
            mass_by_bin.push_back({bin, dist.probs[i]});
    }
    for (const auto& [bin, mass] : mass_by_bin) {
        const double y = static_cast<double>(bin) * bin_width;
        curve.rows.push_back({y, mass / bin_width, density.pdf(y)});
    }
    return curve;
}

RateFit rate_fit(const ConvergenceReport& report) {
    const auto r2 = std::find(report.r_values.begin(), report.r_values.end(), 2);
    if (r2 == report.r_values.end())
        throw std::invalid_argument("rate_fit: report carries no r = 2 errors");
    const std::size_t rcol = static_cast<std::size_t>(r2 - report.r_values.begin());
    const std::size_t n = report.t_values.size();
    if (n < 3) throw std::invalid_argument("rate_fit: needs at least 3 t values");

    RateFit fit;
    std::vector<double> lt(n), le(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double err = report.moment_errors[i][rcol];
        if (!(err > 0.0)) {
            fit.degenerate = true;
            return fit;
        }
        lt[i] = std::log(static_cast<double>(report.t_values[i]));
        le[i] = std::log(err);
    }

    double mt = 0.0, me = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mt += lt[i];
        me += le[i];
    }
    mt /= static_cast<double>(n);
    me /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lt[i] - mt) * (lt[i] - mt);
        sxy += (lt[i] - mt) * (le[i] - me);
    }
    fit.slope = sxy / sxx;
    const double intercept = me - fit.slope * mt;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double resid = le[i] - (intercept + fit.slope * lt[i]);
        ss += resid * resid;
    }
    fit.residual = std::sqrt(ss / static_cast<double>(n));
    return fit;
}

}  // namespace qwalk
