#pragma once

#include "qwalk/initial_state.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/weight.hpp"

namespace qwalk {

enum class DensityKind {
    Konno,              // |s| / (pi (1-x^2) sqrt(c^2-x^2)), the localized walk
    Semicircle,         // 2 sqrt(c^2-x^2) / (pi c^2)
    Arcsine,            // 1 / (pi sqrt(c^2-x^2))
    TruncatedGaussian,  // exp(-x^2/2s_g^2) / (sqrt(2 pi) s_g erf(|c|/sqrt(2) s_g))
    Uniform,            // 1 / (2|c|)
    General,            // f1 eta1 + f2 eta2 from a weight-derived F
};

std::string density_kind_name(DensityKind kind);

/// A limit density on (-|c|, |c|): base shape times the tilt bracket
/// [1 - lambda x], zero outside the open support.
class TiltedDensity {
  public:
    static TiltedDensity konno(const SpectralContext& ctx, const InitCoin& coin);
    static TiltedDensity semicircle(const SpectralContext& ctx, const InitCoin& coin);
    static TiltedDensity arcsine(const SpectralContext& ctx, const InitCoin& coin);
    static TiltedDensity truncated_gaussian(const SpectralContext& ctx, const InitCoin& coin,
                                            double sigma);
    static TiltedDensity uniform(const SpectralContext& ctx, const InitCoin& coin);
    /// Full two-branch density f1 eta1 + f2 eta2 with F = sqrt(2 pi / W(w)) w.
    /// Checks F's periodic normalization, int F^2 = 2 pi, to 1e-6.
    static TiltedDensity general(WeightSpec w, const SpectralContext& ctx, const InitCoin& coin,
                                 std::size_t grid_size = (1u << 18));

    DensityKind kind() const { return kind_; }
    const SpectralContext& context() const { return ctx_; }
    const InitCoin& coin() const { return coin_; }
    double lambda() const { return lambda_; }
    double sigma() const { return sigma_; }
    /// Support half-width |c|.
    double support() const { return ctx_.abs_c(); }

    /// Density with the indicator: zero outside (-|c|, |c|).
    double pdf(double x) const;
    /// Throwing variant: domain error at or outside the support endpoints.
    double evaluate(double x) const;

  private:
    TiltedDensity(DensityKind kind, const SpectralContext& ctx, const InitCoin& coin);

    DensityKind kind_;
    SpectralContext ctx_;
    InitCoin coin_;
    double lambda_;
    double sigma_ = 0.0;
    WeightSpec weight_ = WeightSpec::unit();
    double wnorm_ = 0.0;  // cached W(w) for General
};

/// General density evaluator for the weight w, through the spectral split.
TiltedDensity general_density(const WeightSpec& w, const SpectralContext& ctx,
                              const InitCoin& coin, std::size_t grid_size = (1u << 18));

/// Closed-form evaluator for the named kinds (sigma only for TruncatedGaussian).
TiltedDensity closed_form_density(DensityKind kind, const SpectralContext& ctx,
                                  const InitCoin& coin, double sigma = 0.0);

/// Integral of the density over (x_lo, x_hi) with the x = |c| sin u endpoint
/// substitution; clamps the bounds to the support.
double density_mass_between(const TiltedDensity& density, double x_lo, double x_hi,
                            double abs_tol = 1e-12);

/// CDF by adaptive quadrature from -|c|; 0 and 1 outside the support.
double density_cdf(const TiltedDensity& density, double x);

/// The theta = 0 walk's limit law: atoms at -1 and +1 after rescaling by t.
struct TwoPointLaw {
    double p_minus;
    double p_plus;
};

TwoPointLaw boolean_law(const InitCoin& coin);

}  // namespace qwalk
