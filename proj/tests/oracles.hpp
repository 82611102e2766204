// Independent reference implementations used only to freeze expected values.
// Deliberately slow and simple; must not share code paths with the library.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

// O(n^2) DFT, sum_j x_j e^{sign * 2 pi i jk/n}.
inline std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x,
                                                   int sign) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<long double> acc{0.0L, 0.0L};
        for (std::size_t j = 0; j < n; ++j) {
            const long double ang = sign * 2.0L * std::numbers::pi_v<long double> *
                                    static_cast<long double>(j) * static_cast<long double>(k) /
                                    static_cast<long double>(n);
            acc += std::complex<long double>(x[j].real(), x[j].imag()) *
                   std::complex<long double>(std::cos(ang), std::sin(ang));
        }
        out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
}

// Maclaurin series for erf, adequate for |x| <= ~3 in long double.
inline double erf_series(double x) {
    const long double xl = x;
    long double term = xl;
    long double sum = xl;
    for (int n = 1; n < 200; ++n) {
        term *= -xl * xl / static_cast<long double>(n);
        const long double add = term / static_cast<long double>(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-22L * std::abs(sum)) break;
    }
    return static_cast<double>(sum * 2.0L / std::sqrt(std::numbers::pi_v<long double>));
}

// Continued fraction for erfc, evaluated bottom-up; reliable for x >= 2:
// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
inline double erfc_continued_fraction(double x) {
    const long double xl = x;
    long double tail = 0.0L;
    for (int i = 160; i >= 1; --i)
        tail = (static_cast<long double>(i) / 2.0L) / (xl + tail);
    const long double cf = 1.0L / (xl + tail);
    return static_cast<double>(std::exp(-xl * xl) / std::sqrt(std::numbers::pi_v<long double>) *
                               cf);
}

inline double erf_reference(double x) {
    if (x < 0.0) return -erf_reference(-x);
    if (x < 2.0) return erf_series(x);
    return 1.0 - erfc_continued_fraction(x);
}

// Midpoint Riemann sum; brute-force check for integrals without endpoint blowup.
inline double riemann_midpoint(const std::function<double(double)>& f, double a, double b,
                               std::size_t n) {
    const double h = (b - a) / static_cast<double>(n);
    long double sum = 0.0L;
    for (std::size_t i = 0; i < n; ++i) sum += f(a + (static_cast<double>(i) + 0.5) * h);
    return static_cast<double>(sum * h);
}

}  // namespace oracles
