#pragma once

#include <functional>
#include <vector>

namespace tsg {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
/// The interval is pre-split at the interior points in `breaks` (kinks,
/// jumps), then intervals are bisected worst-first until the summed error
/// estimate drops below tol.  Throws quadrature_error if more than
/// max_evals integrand evaluations would be needed.
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b, double tol,
                              long max_evals = 1'000'000,
                              std::vector<double> breaks = {});

} // namespace tsg
