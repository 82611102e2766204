#pragma once

#include <functional>

namespace qwalk {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;    // estimate of the absolute error
    bool converged = true;
};

/// Adaptive Gauss-Kronrod 7-15 on [a, b]. Subdivides until the local error
/// estimate drops below the tolerance share of each interval.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-10, int max_depth = 48);

/// Composite trapezoid with `panels` uniform panels on [a, b].
double trapezoid(const std::function<double(double)>& f, double a, double b, std::size_t panels);

}  // namespace qwalk
