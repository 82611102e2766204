#include "qwalk/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

double tilt_coefficient(const SpectralContext& ctx, const InitCoin& coin) {
    const double pop = std::norm(coin.alpha) - std::norm(coin.beta);
    const double cross = std::real(coin.alpha * std::conj(coin.beta));
    return pop + 2.0 * ctx.s() * cross / ctx.c();
}

double dispersion_h(const SpectralContext& ctx, double k) {
    const double c = ctx.c();
    const double sk = std::sin(k);
    return c * std::cos(k) / std::sqrt(1.0 - c * c * sk * sk);
}

double kappa(const SpectralContext& ctx, double x) {
    if (!(std::abs(x) < ctx.abs_c()))
        throw std::domain_error("kappa: x must lie in the open support (-|c|, |c|)");
    double arg = ctx.abs_s() * x / (ctx.c() * std::sqrt(1.0 - x * x));
    if (arg > 1.0) {
        if (arg > 1.0 + 1e-12) throw std::domain_error("kappa: arccos argument out of range");
        arg = 1.0;
    } else if (arg < -1.0) {
        if (arg < -1.0 - 1e-12) throw std::domain_error("kappa: arccos argument out of range");
        arg = -1.0;
    }
    return std::acos(arg);
}

double norm_N(const SpectralContext& ctx, double k) {
    const double c = ctx.c();
    const double s = ctx.s();
    const double sk = std::sin(k);
    return 1.0 + s * s + c * c * std::cos(2.0 * k) +
           2.0 * c * std::cos(k) * std::sqrt(1.0 - c * c * sk * sk);
}

Spinor eigenvector_v(const SpectralContext& ctx, double k) {
    const double n = norm_N(ctx, k);
    if (!(n > 1e-14))
        throw std::runtime_error("eigenvector_v: N(k) underflow at k = " + std::to_string(k));
    const double c = ctx.c();
    const double s = ctx.s();
    const double sk = std::sin(k);
    const double root = std::sqrt(1.0 - c * c * sk * sk);
    const double inv = 1.0 / std::sqrt(n);
    const cd phase{std::cos(k), std::sin(k)};
    return {phase * (s * inv), cd{-(c * std::cos(k) + root) * inv, 0.0}};
}

Spinor apply_u_hat(const SpectralContext& ctx, double k, const Spinor& p) {
    const double c = ctx.c();
    const double s = ctx.s();
    const cd up = std::polar(1.0, k);
    const cd dn = std::polar(1.0, -k);
    return {up * (c * p.a0 + s * p.a1), dn * (s * p.a0 - c * p.a1)};
}

}  // namespace qwalk
