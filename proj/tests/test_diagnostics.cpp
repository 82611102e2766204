#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/diagnostics.hpp"
#include "qwalk/initial_state.hpp"

using namespace qwalk;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const SpectralContext kCtx45{CoinAngle{kPi / 4.0}};
const InitCoin kSymCoin{cd{kInvSqrt2, 0.0}, cd{0.0, kInvSqrt2}};
}  // namespace

TEST_CASE("ks distance vanishes for a distribution sampled from the limit CDF") {
    const TiltedDensity d = TiltedDensity::semicircle(kCtx45, kSymCoin);
    const std::int64_t t = 500;
    ProbabilityDistribution dist;
    dist.time = t;
    dist.origin = -t;
    dist.probs.resize(static_cast<std::size_t>(2 * t) + 1, 0.0);
    // mass on even sites equal to the CDF increment over (x-2, x]
    for (std::int64_t x = -t; x <= t; x += 2) {
        const double hi = density_cdf(d, static_cast<double>(x) / static_cast<double>(t));
        const double lo = density_cdf(d, static_cast<double>(x - 2) / static_cast<double>(t));
        dist.probs[static_cast<std::size_t>(x + t)] = hi - lo;
    }
    // discretization bound: the empirical CDF is flat across each lattice cell
    CHECK(ks_distance(dist, d) <= 1.0 / static_cast<double>(t) + 1e-8);

    // shifting the same mass one cell to the right bounds KS by one CDF cell
    ProbabilityDistribution shifted = dist;
    shifted.origin += 1;
    CHECK(ks_distance(shifted, d) < 2.0 / static_cast<double>(t) + 1e-8);
}

TEST_CASE("ks distance is invariant under exact-zero margin padding") {
    const TiltedDensity d = TiltedDensity::uniform(kCtx45, kSymCoin);
    const WalkState st = evolve(localized_state(0, kSymCoin.alpha, kSymCoin.beta),
                                kCtx45.theta, 64);
    const ProbabilityDistribution dist = distribution(st);
    ProbabilityDistribution padded = dist;
    padded.origin -= 7;
    padded.probs.insert(padded.probs.begin(), 7, 0.0);
    padded.probs.insert(padded.probs.end(), 5, 0.0);
    CHECK(ks_distance(padded, d) == doctest::Approx(ks_distance(dist, d)).epsilon(1e-14));
}

TEST_CASE("theta = 0 walk matches the two-point law atom-wise") {
    const WalkState st = evolve(localized_state(0, kSymCoin.alpha, kSymCoin.beta), {0.0}, 50);
    const TwoPointLaw law = boolean_law(kSymCoin);
    CHECK(atom_distance(distribution(st), law) < 1e-15);
}

TEST_CASE("overlay on a localized walk: single parity, unit integral") {
    const WalkState st = evolve(localized_state(0, kSymCoin.alpha, kSymCoin.beta),
                                kCtx45.theta, 200);
    const TiltedDensity d = TiltedDensity::konno(kCtx45, kSymCoin);
    const OverlayCurve curve = density_overlay(distribution(st), d);
    CHECK(curve.single_parity);
    CHECK(curve.bin_width == doctest::Approx(2.0 / 200.0).epsilon(1e-15));
    CHECK(curve.simulated_integral() == doctest::Approx(1.0).epsilon(1e-9));
    for (const OverlayRow& row : curve.rows) {
        const std::int64_t x = std::llround(row.x * 200.0);
        CHECK((x + 200) % 2 == 0);  // only occupied-parity sites reported
    }
}

TEST_CASE("overlay with explicit bins conserves mass") {
    const WalkState st = evolve(localized_state(0, kSymCoin.alpha, kSymCoin.beta),
                                kCtx45.theta, 150);
    const TiltedDensity d = TiltedDensity::konno(kCtx45, kSymCoin);
    const OverlayCurve curve = density_overlay(distribution(st), d, 0.05);
    CHECK(curve.simulated_integral() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(density_overlay(distribution(st), d, 0.001), std::invalid_argument);
}

TEST_CASE("the seed weights are pi-periodic up to sign, so their profiles are single-parity") {
    const auto synth =
        synthesize_initial(WeightSpec::arcsine(kCtx45.theta), kSymCoin, 1 << 12, 1e-8);
    const ProbabilityDistribution d0 = distribution(synth.state);
    double odd_mass = 0.0;
    for (std::int64_t x = d0.left(); x <= d0.right(); ++x)
        if (((x % 2) + 2) % 2 == 1) odd_mass += d0.at(x);
    CHECK(odd_mass < 1e-20);
}

TEST_CASE("overlay detects a two-parity profile from an asymmetric weight") {
    std::vector<double> table(512);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double k = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) / 512.0;
        table[i] = 1.0 + 0.5 * std::sin(k);
    }
    const auto synth = synthesize_initial(WeightSpec::tabulated(table), kSymCoin, 1 << 12, 1e-8);
    const WalkState st = evolve(synth.state, kCtx45.theta, 120);
    const TiltedDensity d = general_density(WeightSpec::tabulated(table), kCtx45, kSymCoin);
    const OverlayCurve curve = density_overlay(distribution(st), d);
    CHECK_FALSE(curve.single_parity);
    CHECK(curve.bin_width == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
    CHECK(curve.simulated_integral() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("uniform-seed walk at t = 2000 tracks the flat density") {
    const auto synth =
        synthesize_initial(WeightSpec::uniform(kCtx45.theta), kSymCoin, 1 << 18, 1e-10);
    const WalkState st = evolve(synth.state, kCtx45.theta, 2000);
    const ProbabilityDistribution dist = distribution(st);
    const TiltedDensity d = TiltedDensity::uniform(kCtx45, kSymCoin);
    // site-level rescaled probabilities oscillate around the limit curve;
    // 0.04-wide bins average roughly forty occupied sites each
    const OverlayCurve curve = density_overlay(dist, d, 0.04);

    const double ac = kCtx45.abs_c();
    double worst = 0.0;
    double outside_mass = 0.0;
    for (const OverlayRow& row : curve.rows) {
        if (std::abs(row.x) < ac - 0.05)
            worst = std::max(worst, std::abs(row.simulated - row.limit));
        if (std::abs(row.x) > ac + 0.05) outside_mass += row.simulated * curve.bin_width;
    }
    CHECK(worst < 0.05);
    CHECK(outside_mass < 1e-3);
    CHECK(ks_distance(dist, d) < 0.01);
}

TEST_CASE("rate fit recovers synthetic power laws") {
    ConvergenceReport report;
    report.t_values = {500, 1000, 2000, 4000};
    report.r_values = {0, 1, 2};
    for (const std::int64_t t : report.t_values) {
        const double td = static_cast<double>(t);
        report.ks.push_back(0.0);
        report.moment_errors.push_back({0.0, 0.0, 3.7 / td});
    }
    const RateFit one_over_t = rate_fit(report);
    CHECK_FALSE(one_over_t.degenerate);
    CHECK(one_over_t.slope == doctest::Approx(-1.0).epsilon(0.01));
    CHECK(one_over_t.residual < 1e-12);

    for (std::size_t i = 0; i < report.t_values.size(); ++i)
        report.moment_errors[i][2] = 0.4 / std::sqrt(static_cast<double>(report.t_values[i]));
    const RateFit inv_sqrt = rate_fit(report);
    CHECK(inv_sqrt.slope == doctest::Approx(-0.5).epsilon(0.01));

    for (std::size_t i = 0; i < report.t_values.size(); ++i) report.moment_errors[i][2] = 0.0;
    CHECK(rate_fit(report).degenerate);
}
