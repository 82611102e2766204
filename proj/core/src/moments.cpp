#include "qwalk/moments.hpp"

#include "qwalk/fourier.hpp"
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

double empirical_moment(const ProbabilityDistribution& dist, int r) {
    if (r < 0) throw std::invalid_argument("empirical_moment: r must be >= 0");
    if (dist.time < 1) throw std::invalid_argument("empirical_moment: distribution time must be >= 1");
    const double t = static_cast<double>(dist.time);
    double sum = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double y = static_cast<double>(dist.origin + static_cast<std::int64_t>(i)) / t;
        sum += std::pow(y, r) * dist.probs[i];
    }
    return sum;
}

double xspace_moment(const TiltedDensity& density, int r, double abs_tol) {
    if (r < 0) throw std::invalid_argument("xspace_moment: r must be >= 0");
    const double ac = density.support();
    const auto f = [&](double u) {
        const double x = ac * std::sin(u);
        return std::pow(x, r) * density.pdf(x) * ac * std::cos(u);
    };
    const QuadResult q = integrate_adaptive(f, -kPi / 2.0, kPi / 2.0, abs_tol);
    if (!q.converged)
        throw std::runtime_error("xspace_moment: quadrature not converged, error ~" +
                                 std::to_string(q.error));
    return q.value;
}

namespace {

// Per-node bracket values of the k-space integral: even branch A and the
// (-1)^r branch B, plus the dispersion value.
struct NodeData {
    double h;
    double a;
    double b;
};

NodeData node_data(const WeightSpec& w, const SpectralContext& ctx, const Spinor& u,
                   double f_scale, double k) {
    const double fp = weight_eval(w, k);
    const double fm = weight_eval(w, -k);
    const double f2p = f_scale * fp * fp;
    const double f2m = f_scale * fm * fm;

    const Spinor vp = eigenvector_v(ctx, k);
    const Spinor vm = eigenvector_v(ctx, -k);
    const Spinor vs_p = eigenvector_v(ctx, kPi - k);
    const Spinor vs_m = eigenvector_v(ctx, kPi + k);
    const Spinor cvs_p{std::conj(vs_p.a0), std::conj(vs_p.a1)};
    const Spinor cvs_m{std::conj(vs_m.a0), std::conj(vs_m.a1)};

    NodeData nd;
    nd.h = dispersion_h(ctx, k);
    nd.a = f2p * std::norm(inner(vp, u)) + f2m * std::norm(inner(vm, u));
    nd.b = f2p * std::norm(inner(cvs_p, u)) + f2m * std::norm(inner(cvs_m, u));
    return nd;
}

// Trapezoid of (1/2pi) h^r (A + (-1)^r B) over [0, pi] with `panels` panels,
// all orders at once. The node at pi/2 is a panel boundary.
std::vector<double> kspace_trapezoid(const WeightSpec& w, const SpectralContext& ctx,
                                     const InitCoin& coin, int r_max, std::size_t panels,
                                     double f_scale) {
    const Spinor u{coin.alpha, coin.beta};
    const double h_step = kPi / static_cast<double>(panels);
    std::vector<double> sums(static_cast<std::size_t>(r_max) + 1, 0.0);
    for (std::size_t i = 0; i <= panels; ++i) {
        const double k = h_step * static_cast<double>(i);
        const NodeData nd = node_data(w, ctx, u, f_scale, k);
        const double wt = (i == 0 || i == panels) ? 0.5 : 1.0;
        double hr = 1.0;
        double sign = 1.0;
        for (int r = 0; r <= r_max; ++r) {
            sums[static_cast<std::size_t>(r)] += wt * hr * (nd.a + sign * nd.b);
            hr *= nd.h;
            sign = -sign;
        }
    }
    for (double& v : sums) v *= h_step / kTwoPi;
    return sums;
}

}  // namespace

std::vector<double> kspace_moments(const WeightSpec& w, const SpectralContext& ctx,
                                   const InitCoin& coin, int r_max, std::size_t grid_size) {
    if (r_max < 0) throw std::invalid_argument("kspace_moments: r_max must be >= 0");
    if (grid_size < 64 || !is_pow2(grid_size))
        throw std::invalid_argument("kspace_moments: grid_size must be a power of two >= 64");

    // W enters every order as a global factor; always resolve it on a grid
    // fine enough for the kinked seeds.
    const double wnorm = weight_norm(w, std::max<std::size_t>(grid_size, 1u << 16));
    const double f_scale = kTwoPi / wnorm;  // F(k)^2 = (2 pi / W) w(k)^2

    const std::vector<double> coarse = kspace_trapezoid(w, ctx, coin, r_max, grid_size, f_scale);
    const std::vector<double> fine = kspace_trapezoid(w, ctx, coin, r_max, 2 * grid_size, f_scale);
    std::vector<double> out(fine.size());
    for (std::size_t i = 0; i < fine.size(); ++i)
        out[i] = fine[i] + (fine[i] - coarse[i]) / 3.0;
    return out;
}

double kspace_moment(const WeightSpec& w, const SpectralContext& ctx, const InitCoin& coin,
                     int r, std::size_t grid_size) {
    return kspace_moments(w, ctx, coin, r, grid_size).back();
}

}  // namespace qwalk
