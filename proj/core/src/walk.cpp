#include "qwalk/walk.hpp"

#include <cassert>
#include <stdexcept>

namespace qwalk {

Matrix2c coin_matrix(CoinAngle theta) {
    const double c = theta.c();
    const double s = theta.s();
    return {cd{c, 0.0}, cd{s, 0.0}, cd{s, 0.0}, cd{-c, 0.0}};
}

double WalkState::total_mass() const {
    double m = 0.0;
    for (const Spinor& p : amps) m += p.mass();
    return m;
}

Spinor WalkState::at(std::int64_t x) const {
    if (x < left() || x > right()) return {};
    return amps[static_cast<std::size_t>(x - origin)];
}

WalkState localized_state(std::int64_t x, cd alpha, cd beta) {
    WalkState st;
    st.time = 0;
    st.origin = x;
    st.amps = {Spinor{alpha, beta}};
    return st;
}

namespace {

// out must have size n + 2 and out site i corresponds to in site i - 1.
// New a0 takes the |0><0|U part from the right neighbour, new a1 the
// |1><1|U part from the left neighbour.
void step_kernel(const Spinor* in, std::size_t n, Spinor* out, double c, double s) {
    const std::int64_t m = static_cast<std::int64_t>(n) + 2;
    for (std::int64_t i = 0; i < m; ++i) {
        const std::int64_t jr = i;      // in-index of site (i-1)+1
        const std::int64_t jl = i - 2;  // in-index of site (i-1)-1
        cd a0{0.0, 0.0};
        cd a1{0.0, 0.0};
        if (jr >= 0 && jr < static_cast<std::int64_t>(n)) {
            const Spinor& p = in[jr];
            a0 = c * p.a0 + s * p.a1;
        }
        if (jl >= 0 && jl < static_cast<std::int64_t>(n)) {
            const Spinor& p = in[jl];
            a1 = s * p.a0 - c * p.a1;
        }
        out[i] = {a0, a1};
    }
}

}  // namespace

WalkState step(const WalkState& state, CoinAngle theta) {
    WalkState next;
    next.time = state.time + 1;
    next.origin = state.origin - 1;
    next.amps.resize(state.amps.size() + 2);
    step_kernel(state.amps.data(), state.amps.size(), next.amps.data(), theta.c(), theta.s());
    return next;
}

WalkState evolve(const WalkState& state, CoinAngle theta, std::int64_t steps) {
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    if (steps == 0) return state;

    const double c = theta.c();
    const double s = theta.s();
    const std::size_t n0 = state.amps.size();
    const std::size_t nfinal = n0 + 2 * static_cast<std::size_t>(steps);

    // Two preallocated buffers, ping-pong; cell arithmetic identical to step().
    std::vector<Spinor> a(nfinal), b(nfinal);
    std::copy(state.amps.begin(), state.amps.end(), a.begin());
    std::size_t n = n0;
    Spinor* cur = a.data();
    Spinor* nxt = b.data();
    for (std::int64_t t = 0; t < steps; ++t) {
        step_kernel(cur, n, nxt, c, s);
        std::swap(cur, nxt);
        n += 2;
    }

    WalkState out;
    out.time = state.time + steps;
    out.origin = state.origin - steps;
    out.amps.assign(cur, cur + n);
    return out;
}

WalkState trim(WalkState state) {
    std::size_t lo = 0;
    std::size_t hi = state.amps.size();
    while (lo < hi && state.amps[lo].is_zero()) ++lo;
    while (hi > lo && state.amps[hi - 1].is_zero()) --hi;
    state.origin += static_cast<std::int64_t>(lo);
    state.amps.erase(state.amps.begin() + static_cast<std::ptrdiff_t>(hi), state.amps.end());
    state.amps.erase(state.amps.begin(), state.amps.begin() + static_cast<std::ptrdiff_t>(lo));
    return state;
}

double ProbabilityDistribution::total() const {
    double m = 0.0;
    for (double p : probs) m += p;
    return m;
}

double ProbabilityDistribution::at(std::int64_t x) const {
    if (x < left() || x > right()) return 0.0;
    return probs[static_cast<std::size_t>(x - origin)];
}

ProbabilityDistribution distribution(const WalkState& state) {
    ProbabilityDistribution d;
    d.time = state.time;
    d.origin = state.origin;
    d.probs.resize(state.amps.size());
    for (std::size_t i = 0; i < state.amps.size(); ++i) d.probs[i] = state.amps[i].mass();
    return d;
}

}  // namespace qwalk
