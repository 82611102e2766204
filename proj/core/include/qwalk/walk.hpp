#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qwalk {

using cd = std::complex<double>;

/// Two-component coin-space amplitude at one lattice site.
struct Spinor {
    cd a0{0.0, 0.0};
    cd a1{0.0, 0.0};

    double mass() const { return std::norm(a0) + std::norm(a1); }
    bool is_zero() const { return a0 == cd{0.0, 0.0} && a1 == cd{0.0, 0.0}; }
};

inline Spinor operator+(const Spinor& p, const Spinor& q) { return {p.a0 + q.a0, p.a1 + q.a1}; }
inline Spinor operator*(cd z, const Spinor& p) { return {z * p.a0, z * p.a1}; }

/// Coin parameter theta in [0, 2pi); c = cos(theta) and s = sin(theta) on demand.
struct CoinAngle {
    double theta = 0.0;

    double c() const { return std::cos(theta); }
    double s() const { return std::sin(theta); }
};

struct Matrix2c {
    cd m00, m01, m10, m11;

    Spinor apply(const Spinor& p) const {
        return {m00 * p.a0 + m01 * p.a1, m10 * p.a0 + m11 * p.a1};
    }
};

/// [[cos t, sin t], [sin t, -cos t]]; unitary and Hermitian.
Matrix2c coin_matrix(CoinAngle theta);

/// Amplitudes over a contiguous window of lattice sites.
/// Site of amps[i] is origin + i.
struct WalkState {
    std::int64_t time = 0;
    std::int64_t origin = 0;
    std::vector<Spinor> amps;

    std::int64_t left() const { return origin; }
    std::int64_t right() const { return origin + static_cast<std::int64_t>(amps.size()) - 1; }
    double total_mass() const;

    /// Amplitude at absolute position x (zero outside the window).
    Spinor at(std::int64_t x) const;
};

/// Localized start: a single spinor at position x.
WalkState localized_state(std::int64_t x, cd alpha, cd beta);

/// One step of the walk. The window grows by one cell on each side.
WalkState step(const WalkState& state, CoinAngle theta);

/// `steps` applications of step; identical arithmetic per cell, buffers reused.
WalkState evolve(const WalkState& state, CoinAngle theta, std::int64_t steps);

/// Drops exact-zero spinors from both window margins. Small amplitudes are kept.
WalkState trim(WalkState state);

struct ProbabilityDistribution {
    std::int64_t time = 0;
    std::int64_t origin = 0;
    std::vector<double> probs;

    std::int64_t left() const { return origin; }
    std::int64_t right() const { return origin + static_cast<std::int64_t>(probs.size()) - 1; }
    double total() const;
    double at(std::int64_t x) const;
};

/// Entrywise |a0|^2 + |a1|^2.
ProbabilityDistribution distribution(const WalkState& state);

}  // namespace qwalk
