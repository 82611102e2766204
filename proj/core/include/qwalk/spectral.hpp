#pragma once

#include "qwalk/initial_state.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Coin angle with the trivial multiples of pi/2 excluded; limit-law territory.
struct SpectralContext {
    CoinAngle theta;

    explicit SpectralContext(CoinAngle t) : theta(t) {
        if (std::min(std::abs(theta.c()), std::abs(theta.s())) < 1e-6)
            throw std::invalid_argument(
                "SpectralContext: walk is trivial at multiples of pi/2; min(|c|,|s|) >= 1e-6 "
                "required");
    }

    double c() const { return theta.c(); }
    double s() const { return theta.s(); }
    double abs_c() const { return std::abs(theta.c()); }
    double abs_s() const { return std::abs(theta.s()); }
};

/// lambda = |alpha|^2 - |beta|^2 + 2 s Re(alpha conj(beta)) / c.
/// Skews every limit density by the bracket [1 - lambda x]; |lambda| <= 1/|c|.
double tilt_coefficient(const SpectralContext& ctx, const InitCoin& coin);

/// Group velocity h(k) = c cos k / sqrt(1 - c^2 sin^2 k); range [-|c|, |c|].
double dispersion_h(const SpectralContext& ctx, double k);

/// Inverse of the dispersion on [0, pi]:
/// kappa(x) = arccos(|s| x / (c sqrt(1 - x^2))), argument clamped to [-1, 1]
/// with 1e-12 slack. Requires |x| < |c|.
double kappa(const SpectralContext& ctx, double x);

/// N(k) = 1 + s^2 + c^2 cos 2k + 2 c cos k sqrt(1 - c^2 sin^2 k).
double norm_N(const SpectralContext& ctx, double k);

/// Unit eigenvector of U_hat(k) = diag(e^{ik}, e^{-ik}) U:
/// v(k) = (e^{ik} s, -(c cos k + sqrt(1 - c^2 sin^2 k))) / sqrt(N(k)).
Spinor eigenvector_v(const SpectralContext& ctx, double k);

/// <a|b> with the first argument conjugated.
inline cd inner(const Spinor& a, const Spinor& b) {
    return std::conj(a.a0) * b.a0 + std::conj(a.a1) * b.a1;
}

/// U_hat(k) applied to a spinor.
Spinor apply_u_hat(const SpectralContext& ctx, double k, const Spinor& p);

}  // namespace qwalk
