#include "qwalk/initial_state.hpp"

#include "qwalk/fourier.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::vector<cd> fourier_profile(const WeightSpec& w, std::size_t n) {
    if (!is_pow2(n)) throw std::invalid_argument("fourier_profile: n must be a power of two");

    std::vector<cd> data(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double k = -kPi + kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        data[j] = cd{weight_eval(w, k), 0.0};
    }
    // sum_j w_j e^{+2pi i j x / n}; with k_j = -pi + 2pi j/n this equals
    // e^{+i pi x} * sum_j w_j e^{i k_j x}, so g(x) = (2pi/n) (-1)^x S_x.
    fft_pow2(data, +1);

    std::vector<cd> g(n);
    const double scale = kTwoPi / static_cast<double>(n);
    const std::int64_t half = static_cast<std::int64_t>(n) / 2;
    for (std::int64_t x = -half; x < half; ++x) {
        const std::size_t bin = static_cast<std::size_t>(x < 0 ? x + static_cast<std::int64_t>(n) : x);
        const double sign = (x % 2 == 0) ? 1.0 : -1.0;
        g[static_cast<std::size_t>(x + half)] = scale * sign * data[bin];
    }
    return g;
}

double grid_weight_norm(const WeightSpec& w, std::size_t n) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double k = -kPi + kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        const double v = weight_eval(w, k);
        sum += v * v;
    }
    return sum * kTwoPi / static_cast<double>(n);
}

SynthesisResult synthesize_initial(const WeightSpec& w, const InitCoin& coin,
                                   std::size_t grid_size, double tail_tol) {
    if (grid_size < 256 || !is_pow2(grid_size))
        throw std::invalid_argument("synthesize_initial: grid_size must be a power of two >= 256");
    if (!(tail_tol > 0.0) || tail_tol > 1e-4)
        throw std::invalid_argument("synthesize_initial: tail_tol must be in (0, 1e-4]");

    if (w.kind() == WeightKind::Unit) {
        SynthesisResult r;
        r.state = localized_state(0, coin.alpha, coin.beta);
        r.report = {0, 0.0, grid_size, false};
        return r;
    }

    const double wdisc = grid_weight_norm(w, grid_size);
    if (wdisc <= 1e-14)
        throw std::runtime_error("synthesize_initial: degenerate weight, W(w) <= 1e-14");

    const std::vector<cd> g = fourier_profile(w, grid_size);
    const std::int64_t half = static_cast<std::int64_t>(grid_size) / 2;
    const double norm2 = kTwoPi * wdisc;  // |psi(x)|^2 = |g(x)|^2 / (2 pi W)

    const auto mass_at = [&](std::int64_t x) {
        return std::norm(g[static_cast<std::size_t>(x + half)]) / norm2;
    };

    // Discrete Parseval makes the mass over all grid_size sites exactly one,
    // so the deficit of [-X0, X0] is one minus the window mass.
    double window_mass = mass_at(0);
    std::int64_t cutoff = 0;
    while (1.0 - window_mass >= tail_tol && cutoff < half - 1) {
        ++cutoff;
        window_mass += mass_at(cutoff) + mass_at(-cutoff);
    }
    const double deficit = std::max(0.0, 1.0 - window_mass);
    if (deficit >= tail_tol)
        throw SynthesisError(
            "synthesize_initial: tail tolerance unreachable within grid_size/2 (achievable "
            "deficit " + std::to_string(deficit) + ")",
            deficit);

    WalkState state;
    state.time = 0;
    state.origin = -cutoff;
    state.amps.resize(static_cast<std::size_t>(2 * cutoff + 1));
    const double amp_scale = 1.0 / std::sqrt(norm2);
    for (std::int64_t x = -cutoff; x <= cutoff; ++x) {
        const cd gx = g[static_cast<std::size_t>(x + half)] * amp_scale;
        state.amps[static_cast<std::size_t>(x + cutoff)] = {gx * coin.alpha, gx * coin.beta};
    }

    // renormalize the retained window to total mass one
    const double mass = state.total_mass();
    const double renorm = 1.0 / std::sqrt(mass);
    for (Spinor& p : state.amps) {
        p.a0 *= renorm;
        p.a1 *= renorm;
    }

    SynthesisResult r;
    r.state = std::move(state);
    r.report = {cutoff, deficit, grid_size, true};
    return r;
}

}  // namespace qwalk
