#include "qwalk/density.hpp"

#include "qwalk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::string density_kind_name(DensityKind kind) {
    switch (kind) {
        case DensityKind::Konno: return "konno";
        case DensityKind::Semicircle: return "semicircle";
        case DensityKind::Arcsine: return "arcsine";
        case DensityKind::TruncatedGaussian: return "truncated_gaussian";
        case DensityKind::Uniform: return "uniform";
        case DensityKind::General: return "general";
    }
    return "unknown";
}

TiltedDensity::TiltedDensity(DensityKind kind, const SpectralContext& ctx, const InitCoin& coin)
    : kind_(kind), ctx_(ctx), coin_(coin), lambda_(tilt_coefficient(ctx, coin)) {
    // |lambda| <= 1/|c| holds for every unit coin; reject anything beyond slack
    if (std::abs(lambda_) * ctx_.abs_c() > 1.0 + 1e-12)
        throw std::invalid_argument("TiltedDensity: tilt exceeds the non-negativity bound");
}

TiltedDensity TiltedDensity::konno(const SpectralContext& ctx, const InitCoin& coin) {
    return TiltedDensity(DensityKind::Konno, ctx, coin);
}

TiltedDensity TiltedDensity::semicircle(const SpectralContext& ctx, const InitCoin& coin) {
    return TiltedDensity(DensityKind::Semicircle, ctx, coin);
}

TiltedDensity TiltedDensity::arcsine(const SpectralContext& ctx, const InitCoin& coin) {
    return TiltedDensity(DensityKind::Arcsine, ctx, coin);
}

TiltedDensity TiltedDensity::truncated_gaussian(const SpectralContext& ctx, const InitCoin& coin,
                                                double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("TiltedDensity: gaussian sigma must be > 0");
    TiltedDensity d(DensityKind::TruncatedGaussian, ctx, coin);
    d.sigma_ = sigma;
    return d;
}

TiltedDensity TiltedDensity::uniform(const SpectralContext& ctx, const InitCoin& coin) {
    return TiltedDensity(DensityKind::Uniform, ctx, coin);
}

TiltedDensity TiltedDensity::general(WeightSpec w, const SpectralContext& ctx,
                                     const InitCoin& coin, std::size_t grid_size) {
    TiltedDensity d(DensityKind::General, ctx, coin);
    // W is a global normalizer; resolve it on a grid fine enough for the
    // kinked seeds whatever the caller asked for.
    const std::size_t grid = std::max<std::size_t>(grid_size, 1u << 16);
    d.wnorm_ = weight_norm(w, grid);
    // Normalization condition: int F^2 dk = 2 pi for F = sqrt(2 pi / W) w, cross-checked
    // against the plain grid estimate of W.
    const double walt = (w.kind() == WeightKind::Tabulated) ? d.wnorm_
                                                            : grid_weight_norm(w, grid);
    if (std::abs(kTwoPi * (walt / d.wnorm_ - 1.0)) > 1e-6)
        throw std::runtime_error("TiltedDensity: int F(k)^2 dk deviates from 2 pi beyond 1e-6");
    d.weight_ = std::move(w);
    d.sigma_ = d.weight_.kind() == WeightKind::Gaussian ? d.weight_.sigma() : 0.0;
    return d;
}

double TiltedDensity::pdf(double x) const {
    if (!(std::abs(x) < ctx_.abs_c())) return 0.0;
    return evaluate(x);
}

double TiltedDensity::evaluate(double x) const {
    const double ac = ctx_.abs_c();
    if (!(std::abs(x) < ac))
        throw std::domain_error("TiltedDensity: x outside the open support (-|c|, |c|)");

    const double bracket = 1.0 - lambda_ * x;
    const double c2 = ctx_.c() * ctx_.c();

    switch (kind_) {
        case DensityKind::Konno:
            return ctx_.abs_s() / (kPi * (1.0 - x * x) * std::sqrt(c2 - x * x)) * bracket;
        case DensityKind::Semicircle:
            return 2.0 / (kPi * c2) * std::sqrt(c2 - x * x) * bracket;
        case DensityKind::Arcsine:
            return 1.0 / (kPi * std::sqrt(c2 - x * x)) * bracket;
        case DensityKind::TruncatedGaussian: {
            const double denom =
                std::sqrt(kTwoPi) * sigma_ * std::erf(ac / (std::sqrt(2.0) * sigma_));
            return std::exp(-x * x / (2.0 * sigma_ * sigma_)) / denom * bracket;
        }
        case DensityKind::Uniform:
            return 1.0 / (2.0 * ac) * bracket;
        case DensityKind::General: {
            const double kap = kappa(ctx_, x);
            const double scale = kTwoPi / wnorm_;
            const auto f_sq = [&](double q) {
                const double v = weight_eval(weight_, q);
                return scale * v * v;
            };
            const double fp = f_sq(kap);
            const double fm = f_sq(-kap);
            const double fps = f_sq(kap - kPi);
            const double fms = f_sq(kPi - kap);
            const double eta1 = 0.25 * (fp + fm + fps + fms);
            const double eta2 = 0.5 * (fp - fm + fps - fms);
            const double f1 = ctx_.abs_s() * bracket / (kPi * (1.0 - x * x) * std::sqrt(c2 - x * x));
            const double f2 = -ctx_.s() * std::imag(coin_.alpha * std::conj(coin_.beta)) /
                              (ac * kPi * (1.0 - x * x));
            return f1 * eta1 + f2 * eta2;
        }
    }
    throw std::logic_error("TiltedDensity: unreachable");
}

TiltedDensity general_density(const WeightSpec& w, const SpectralContext& ctx,
                              const InitCoin& coin, std::size_t grid_size) {
    return TiltedDensity::general(w, ctx, coin, grid_size);
}

TiltedDensity closed_form_density(DensityKind kind, const SpectralContext& ctx,
                                  const InitCoin& coin, double sigma) {
    switch (kind) {
        case DensityKind::Konno: return TiltedDensity::konno(ctx, coin);
        case DensityKind::Semicircle: return TiltedDensity::semicircle(ctx, coin);
        case DensityKind::Arcsine: return TiltedDensity::arcsine(ctx, coin);
        case DensityKind::TruncatedGaussian:
            return TiltedDensity::truncated_gaussian(ctx, coin, sigma);
        case DensityKind::Uniform: return TiltedDensity::uniform(ctx, coin);
        case DensityKind::General:
            throw std::invalid_argument("closed_form_density: General has no closed form");
    }
    throw std::logic_error("closed_form_density: unreachable");
}

double density_mass_between(const TiltedDensity& density, double x_lo, double x_hi,
                            double abs_tol) {
    const double ac = density.support();
    x_lo = std::clamp(x_lo, -ac, ac);
    x_hi = std::clamp(x_hi, -ac, ac);
    if (x_hi <= x_lo) return 0.0;

    // x = |c| sin u removes the inverse square-root endpoint factor
    const double u_lo = std::asin(x_lo / ac);
    const double u_hi = std::asin(x_hi / ac);
    const auto f = [&](double u) { return density.pdf(ac * std::sin(u)) * ac * std::cos(u); };
    const QuadResult r = integrate_adaptive(f, u_lo, u_hi, abs_tol);
    if (!r.converged)
        throw std::runtime_error("density_mass_between: quadrature not converged, error ~" +
                                 std::to_string(r.error));
    return r.value;
}

double density_cdf(const TiltedDensity& density, double x) {
    const double ac = density.support();
    if (x <= -ac) return 0.0;
    if (x >= ac) return 1.0;
    const double v = density_mass_between(density, -ac, x, 1e-10);
    return std::clamp(v, 0.0, 1.0);
}

TwoPointLaw boolean_law(const InitCoin& coin) {
    return {std::norm(coin.alpha), std::norm(coin.beta)};
}

}  // namespace qwalk
