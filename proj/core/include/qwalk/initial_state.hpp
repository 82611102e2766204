#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwalk/walk.hpp"
#include "qwalk/weight.hpp"

namespace qwalk {

/// Coin-space factor (alpha|0> + beta|1>) of the product initial state.
struct InitCoin {
    cd alpha;
    cd beta;

    InitCoin(cd a, cd b) : alpha(a), beta(b) {
        const double n = std::norm(a) + std::norm(b);
        if (std::abs(n - 1.0) > 1e-12)
            throw std::invalid_argument("InitCoin: |alpha|^2 + |beta|^2 must be 1 within 1e-12");
    }
};

struct TruncationReport {
    std::int64_t cutoff = 0;      // synthesis window is [-cutoff, cutoff]
    double deficit = 0.0;         // mass outside the window before renormalization
    std::size_t grid_size = 0;    // k-grid size used
    bool renormalized = false;
};

struct SynthesisError : std::runtime_error {
    double achievable_deficit;
    SynthesisError(const std::string& msg, double deficit)
        : std::runtime_error(msg), achievable_deficit(deficit) {}
};

/// Scalar Fourier profile g(x) = integral of w(k) e^{ikx} dk over [-pi, pi],
/// x = -n/2 .. n/2-1, by the uniform n-point grid k_j = -pi + 2*pi*j/n
/// (the grid contains the kink points 0, +-pi/2, -pi). Index i holds x = i - n/2.
std::vector<cd> fourier_profile(const WeightSpec& w, std::size_t n);

/// W estimate on the same grid, (2*pi/n) * sum w(k_j)^2. Using this constant in
/// the synthesis normalizer makes the discrete total mass exactly one.
double grid_weight_norm(const WeightSpec& w, std::size_t n);

struct SynthesisResult {
    WalkState state;
    TruncationReport report;
};

/// Initial state psi_0(x) = g(x) (alpha|0> + beta|1>) / sqrt(2*pi*W(w)) on the
/// smallest window [-X0, X0] whose outside mass is below tail_tol, then
/// renormalized to total mass one. Unit weights produce the exact localized
/// state. grid_size must be a power of two >= 256; tail_tol in (0, 1e-4].
SynthesisResult synthesize_initial(const WeightSpec& w, const InitCoin& coin,
                                   std::size_t grid_size = (1u << 18), double tail_tol = 1e-10);

}  // namespace qwalk
