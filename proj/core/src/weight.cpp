#include "qwalk/weight.hpp"

#include "qwalk/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Seeds other than Unit are square-integrable only away from the trivial
// coin angles (multiples of pi/2).
void require_nontrivial_angle(CoinAngle theta) {
    const double c = std::abs(theta.c());
    const double s = std::abs(theta.s());
    if (std::min(c, s) < 1e-6)
        throw std::invalid_argument(
            "WeightSpec: seed weights require min(|cos theta|,|sin theta|) >= 1e-6");
}

double reduce_to_period(double k) {
    double r = std::remainder(k, kTwoPi);  // lands in [-pi, pi]
    if (r >= kPi) r -= kTwoPi;
    return r;
}

}  // namespace

std::string weight_kind_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::Unit: return "unit";
        case WeightKind::Semicircle: return "semicircle";
        case WeightKind::Arcsine: return "arcsine";
        case WeightKind::Gaussian: return "gaussian";
        case WeightKind::Uniform: return "uniform";
        case WeightKind::Tabulated: return "tabulated";
    }
    return "unknown";
}

WeightSpec WeightSpec::unit() {
    WeightSpec w;
    w.kind_ = WeightKind::Unit;
    return w;
}

WeightSpec WeightSpec::semicircle(CoinAngle theta) {
    require_nontrivial_angle(theta);
    WeightSpec w;
    w.kind_ = WeightKind::Semicircle;
    w.theta_ = theta;
    return w;
}

WeightSpec WeightSpec::arcsine(CoinAngle theta) {
    require_nontrivial_angle(theta);
    WeightSpec w;
    w.kind_ = WeightKind::Arcsine;
    w.theta_ = theta;
    return w;
}

WeightSpec WeightSpec::gaussian(CoinAngle theta, double sigma) {
    require_nontrivial_angle(theta);
    if (!(sigma > 0.0)) throw std::invalid_argument("WeightSpec: gaussian sigma must be > 0");
    WeightSpec w;
    w.kind_ = WeightKind::Gaussian;
    w.theta_ = theta;
    w.sigma_ = sigma;
    return w;
}

WeightSpec WeightSpec::uniform(CoinAngle theta) {
    require_nontrivial_angle(theta);
    WeightSpec w;
    w.kind_ = WeightKind::Uniform;
    w.theta_ = theta;
    return w;
}

WeightSpec WeightSpec::tabulated(std::vector<double> samples) {
    if (samples.size() < 16)
        throw std::invalid_argument("WeightSpec: tabulated grid needs >= 16 samples");
    WeightSpec w;
    w.kind_ = WeightKind::Tabulated;
    w.table_ = std::move(samples);
    return w;
}

double weight_eval(const WeightSpec& w, double k) {
    k = reduce_to_period(k);
    switch (w.kind()) {
        case WeightKind::Unit:
            return 1.0;
        case WeightKind::Semicircle: {
            const double c = w.theta().c();
            const double sk = std::sin(k);
            return sk / (1.0 - c * c * sk * sk);
        }
        case WeightKind::Arcsine: {
            const double c = w.theta().c();
            const double sk = std::sin(k);
            return 1.0 / std::sqrt(1.0 - c * c * sk * sk);
        }
        case WeightKind::Gaussian: {
            const double c = w.theta().c();
            const double sk = std::sin(k);
            const double ck = std::cos(k);
            const double d = 1.0 - c * c * sk * sk;
            const double amp = std::sqrt(std::abs(sk) / (d * std::sqrt(d)));
            const double sig2 = w.sigma() * w.sigma();
            return amp * std::exp(-(c * c * ck * ck) / (4.0 * sig2 * d));
        }
        case WeightKind::Uniform: {
            const double c = w.theta().c();
            const double sk = std::sin(k);
            const double d = 1.0 - c * c * sk * sk;
            return std::sqrt(std::abs(sk) / (d * std::sqrt(d)));
        }
        case WeightKind::Tabulated: {
            const std::size_t n = w.table().size();
            const double pos = (k + kPi) / kTwoPi * static_cast<double>(n);
            const std::size_t i0 = std::min(static_cast<std::size_t>(pos), n - 1);
            const double frac = pos - static_cast<double>(i0);
            const double w0 = w.table()[i0];
            const double w1 = w.table()[(i0 + 1) % n];  // wraps to w(-pi)
            return w0 + frac * (w1 - w0);
        }
    }
    throw std::logic_error("weight_eval: unreachable");
}

namespace {

// Trapezoid of w(k)^2 with `panels` panels per quarter period, summed over the
// four smooth pieces between the kink points.
double wsq_trapezoid(const WeightSpec& w, std::size_t panels_per_quarter) {
    static constexpr double edges[5] = {-kPi, -kPi / 2.0, 0.0, kPi / 2.0, kPi};
    double total = 0.0;
    for (int piece = 0; piece < 4; ++piece) {
        const double a = edges[piece];
        const double b = edges[piece + 1];
        const double h = (b - a) / static_cast<double>(panels_per_quarter);
        const auto f = [&](double k) {
            const double v = weight_eval(w, k);
            return v * v;
        };
        double sum = 0.5 * (f(a) + f(b));
        for (std::size_t j = 1; j < panels_per_quarter; ++j)
            sum += f(a + h * static_cast<double>(j));
        total += sum * h;
    }
    return total;
}

// Exact integral of the squared linear interpolant, cell by cell.
double tabulated_norm(const std::vector<double>& table) {
    const std::size_t n = table.size();
    const double dk = kTwoPi / static_cast<double>(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w0 = table[i];
        const double w1 = table[(i + 1) % n];
        total += (w0 * w0 + w0 * w1 + w1 * w1) * dk / 3.0;
    }
    return total;
}

}  // namespace

double weight_norm(const WeightSpec& w, std::size_t grid_size) {
    if (grid_size < 64 || !is_pow2(grid_size))
        throw std::invalid_argument("weight_norm: grid_size must be a power of two >= 64");

    double value;
    if (w.kind() == WeightKind::Tabulated) {
        value = tabulated_norm(w.table());
    } else {
        const double coarse = wsq_trapezoid(w, grid_size / 4);
        const double fine = wsq_trapezoid(w, grid_size / 2);
        value = fine + (fine - coarse) / 3.0;
        // grid-doubling consistency; loosens nothing at the default grid
        if (std::abs(fine - coarse) > 1e-9 * std::max(std::abs(fine), 1e-30))
            throw std::runtime_error("weight_norm: quadrature not converged at grid " +
                                     std::to_string(grid_size) + " (rel change " +
                                     std::to_string(std::abs(fine - coarse) / std::abs(fine)) +
                                     ")");
    }
    if (value <= 1e-14) throw std::runtime_error("weight_norm: degenerate weight, W(w) <= 1e-14");
    return value;
}

}  // namespace qwalk
