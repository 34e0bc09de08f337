#pragma once

#include <cmath>
#include <stdexcept>

namespace tsg {

/// Metric exponent.  p == 0 selects the sup metric; p >= 1 the usual
/// ell_p combination.  Values in (0,1) are accepted so the quasi-norm
/// variant of dist_p stays expressible, but every duality-side operation
/// (polars, bipolars, hulls) validates p == 0 or p >= 1 itself.
struct PExponent {
    double p = 2.0;

    PExponent() = default;
    explicit PExponent(double value) : p(value) {
        if (!std::isfinite(p) || p < 0.0)
            throw std::invalid_argument("PExponent: p must be finite and >= 0");
    }

    bool is_sup() const { return p == 0.0; }
    bool has_conjugate() const { return p > 1.0; }

    /// Hoelder conjugate q with 1/p + 1/q = 1.  Defined only for p > 1.
    double conjugate() const {
        if (!has_conjugate())
            throw std::invalid_argument("PExponent: conjugate requires p > 1");
        return p / (p - 1.0);
    }

    /// Outer exponent of the metric: min(1, 1/p) for p > 0.
    double outer() const { return p > 1.0 ? 1.0 / p : 1.0; }
};

} // namespace tsg
