#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qwalk/moments.hpp"

using namespace qwalk;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const SpectralContext kCtx45{CoinAngle{kPi / 4.0}};
const InitCoin kSymCoin{cd{kInvSqrt2, 0.0}, cd{0.0, kInvSqrt2}};
const InitCoin kUpCoin{cd{1.0, 0.0}, cd{0.0, 0.0}};

InitCoin random_coin(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    cd a{g(rng), g(rng)};
    cd b{g(rng), g(rng)};
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return InitCoin{a / n, b / n};
}

}  // namespace

TEST_CASE("empirical moments: order zero, theta = 0 spread, one-step mean") {
    const WalkState walked = evolve(localized_state(0, kSymCoin.alpha, kSymCoin.beta), {0.0}, 40);
    const ProbabilityDistribution d0 = distribution(walked);
    CHECK(empirical_moment(d0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(empirical_moment(d0, 2) == doctest::Approx(1.0).epsilon(1e-14));

    const ProbabilityDistribution d1 =
        distribution(step(localized_state(0, 1.0, 0.0), {kPi / 4.0}));
    CHECK(empirical_moment(d1, 1) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(empirical_moment(d1, -1), std::invalid_argument);
    ProbabilityDistribution fresh;
    fresh.time = 0;
    CHECK_THROWS_AS(empirical_moment(fresh, 0), std::invalid_argument);
}

TEST_CASE("x-space moments against brute-force Riemann sums and closed values") {
    const double c2 = 0.5;
    const double ac = kCtx45.abs_c();

    const TiltedDensity semi = TiltedDensity::semicircle(kCtx45, kSymCoin);
    CHECK(xspace_moment(semi, 0) == doctest::Approx(1.0).epsilon(1e-9));
    // independent Riemann oracle for the r = 2 semicircle moment
    const double riemann = oracles::riemann_midpoint(
        [&](double x) { return x * x * 2.0 / (kPi * c2) * std::sqrt(c2 - x * x); }, -ac, ac,
        2000000);
    CHECK(riemann == doctest::Approx(c2 / 4.0).epsilon(1e-7));
    CHECK(xspace_moment(semi, 2) == doctest::Approx(c2 / 4.0).epsilon(1e-9));
    CHECK(xspace_moment(semi, 2) == doctest::Approx(0.125).epsilon(1e-9));

    CHECK(xspace_moment(TiltedDensity::arcsine(kCtx45, kSymCoin), 2) ==
          doctest::Approx(c2 / 2.0).epsilon(1e-9));
    CHECK(xspace_moment(TiltedDensity::uniform(kCtx45, kSymCoin), 2) ==
          doctest::Approx(c2 / 3.0).epsilon(1e-9));

    // Konno mean: -lambda (1 - |s|)
    const TiltedDensity konno_up = TiltedDensity::konno(kCtx45, kUpCoin);
    CHECK(xspace_moment(konno_up, 1) ==
          doctest::Approx(-(1.0 - kInvSqrt2)).epsilon(1e-9));
    const TiltedDensity konno_sym = TiltedDensity::konno(kCtx45, kSymCoin);
    CHECK(xspace_moment(konno_sym, 1) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("k-space moment: order zero normalizes for every seed") {
    const double sigma = 0.25 * kCtx45.abs_c();
    for (const WeightSpec& w :
         {WeightSpec::unit(), WeightSpec::semicircle(kCtx45.theta),
          WeightSpec::arcsine(kCtx45.theta), WeightSpec::gaussian(kCtx45.theta, sigma),
          WeightSpec::uniform(kCtx45.theta)}) {
        CHECK(kspace_moment(w, kCtx45, kSymCoin, 0) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(kspace_moment(w, kCtx45, kUpCoin, 0) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("k-space vs x-space: the change of variables holds to 1e-7") {
    std::mt19937_64 rng(83);
    for (double theta : {kPi / 4.0, kPi / 3.0}) {
        const SpectralContext ctx{CoinAngle{theta}};
        const double sigma = 0.25 * ctx.abs_c();
        const InitCoin coins[] = {kUpCoin, kSymCoin, random_coin(rng)};
        struct Case {
            WeightSpec w;
            DensityKind kind;
        };
        const Case cases[] = {
            {WeightSpec::unit(), DensityKind::Konno},
            {WeightSpec::semicircle(ctx.theta), DensityKind::Semicircle},
            {WeightSpec::arcsine(ctx.theta), DensityKind::Arcsine},
            {WeightSpec::gaussian(ctx.theta, sigma), DensityKind::TruncatedGaussian},
            {WeightSpec::uniform(ctx.theta), DensityKind::Uniform},
        };
        for (const Case& cs : cases) {
            for (const InitCoin& coin : coins) {
                const TiltedDensity density = closed_form_density(cs.kind, ctx, coin, sigma);
                const std::vector<double> kms = kspace_moments(cs.w, ctx, coin, 8, 1 << 14);
                for (int r = 0; r <= 8; ++r) {
                    const double xm = xspace_moment(density, r);
                    CHECK(std::abs(kms[static_cast<std::size_t>(r)] - xm) < 1e-7);
                }
            }
        }
    }
}

TEST_CASE("k-space vs general-route x-space for an asymmetric weight") {
    // exercises the (-1)^r branch pairing together with the f2 eta2 term
    std::vector<double> table(4096);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double k = -kPi + 2.0 * kPi * static_cast<double>(i) / 4096.0;
        table[i] = 1.0 + 0.5 * std::sin(k);
    }
    const WeightSpec w = WeightSpec::tabulated(table);
    std::mt19937_64 rng(89);
    for (const InitCoin& coin : {kSymCoin, kUpCoin, random_coin(rng)}) {
        const TiltedDensity density = general_density(w, kCtx45, coin);
        const std::vector<double> kms = kspace_moments(w, kCtx45, coin, 6, 1 << 14);
        for (int r = 0; r <= 6; ++r)
            CHECK(std::abs(kms[static_cast<std::size_t>(r)] - xspace_moment(density, r)) < 1e-7);
    }
}

TEST_CASE("odd moments vanish for symmetric seeds at zero tilt") {
    const double sigma = 0.25 * kCtx45.abs_c();
    for (const WeightSpec& w :
         {WeightSpec::unit(), WeightSpec::semicircle(kCtx45.theta),
          WeightSpec::arcsine(kCtx45.theta), WeightSpec::gaussian(kCtx45.theta, sigma),
          WeightSpec::uniform(kCtx45.theta)}) {
        const std::vector<double> kms = kspace_moments(w, kCtx45, kSymCoin, 7, 1 << 14);
        for (int r = 1; r <= 7; r += 2) CHECK(std::abs(kms[static_cast<std::size_t>(r)]) < 1e-9);
    }
    for (const TiltedDensity& d :
         {TiltedDensity::konno(kCtx45, kSymCoin), TiltedDensity::semicircle(kCtx45, kSymCoin),
          TiltedDensity::uniform(kCtx45, kSymCoin)}) {
        for (int r = 1; r <= 7; r += 2)
            CHECK(std::abs(xspace_moment(d, r)) < 1e-9);
    }
}

TEST_CASE("k-space Konno mean matches the closed value") {
    CHECK(kspace_moment(WeightSpec::unit(), kCtx45, kUpCoin, 1) ==
          doctest::Approx(-(1.0 - kInvSqrt2)).epsilon(1e-9));
    CHECK(std::abs(kspace_moment(WeightSpec::unit(), kCtx45, kSymCoin, 1)) < 1e-9);
}

TEST_CASE("empirical moments approach the x-space values along t") {
    // semicircle seed: analytic decay makes the synthesis window small
    const auto synth =
        synthesize_initial(WeightSpec::semicircle(kCtx45.theta), kSymCoin, 1 << 14, 1e-10);
    const TiltedDensity density = TiltedDensity::semicircle(kCtx45, kSymCoin);
    double xs[5];
    for (int r = 1; r <= 4; ++r) xs[r] = xspace_moment(density, r);

    WalkState state = synth.state;
    std::int64_t reached = 0;
    std::vector<double> err_r2;
    for (const std::int64_t t : {500, 1000, 2000, 4000}) {
        state = evolve(state, kCtx45.theta, t - reached);
        reached = t;
        const ProbabilityDistribution dist = distribution(state);
        double worst = 0.0;
        for (int r = 1; r <= 4; ++r)
            worst = std::max(worst, std::abs(empirical_moment(dist, r) - xs[r]));
        if (t == 4000) CHECK(worst < 5e-3);
        err_r2.push_back(std::abs(empirical_moment(dist, 2) - xs[2]));
    }
    // non-increasing within noise: allow a factor of 1.5 of slack per doubling
    for (std::size_t i = 1; i < err_r2.size(); ++i) CHECK(err_r2[i] < 1.5 * err_r2[i - 1]);
}

TEST_CASE("moment report diffs") {
    MomentReport rep;
    rep.r = 2;
    rep.t = 100;
    rep.simulated = 0.130;
    rep.xspace = 0.125;
    rep.kspace = 0.1250001;
    CHECK(rep.diff_sim_x() == doctest::Approx(0.005).epsilon(1e-12));
    CHECK(rep.diff_x_k() == doctest::Approx(1e-7).epsilon(1e-6));
}
