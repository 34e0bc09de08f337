#pragma once

#include <cmath>
#include <stdexcept>

namespace tsg {

/// Canonical representative of a real number mod 1, in [-1/2, 1/2).
/// The value is measured in turns: the circle point is exp(2*pi*i*value).
/// 1/2 canonicalizes to -1/2 (half-open interval).
inline double canonical_angle(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("canonical_angle: non-finite input");
    double r = x - std::round(x);   // |r| <= 1/2, both endpoints possible
    if (r >= 0.5) r -= 1.0;
    if (r < -0.5) r += 1.0;         // guards round-off from the subtraction
    return r == 0.0 ? 0.0 : r;      // normalize -0.0 for stable serialization
}

/// One coordinate of a torus sequence.
struct Angle {
    double value = 0.0;             // in [-1/2, 1/2)

    Angle() = default;
    explicit Angle(double turns) : value(canonical_angle(turns)) {}

    Angle operator+(Angle o) const { return Angle(value + o.value); }
    Angle operator-() const { return Angle(-value); }
    Angle operator-(Angle o) const { return Angle(value - o.value); }
    bool operator==(const Angle&) const = default;
};

/// Chord length |1 - exp(2*pi*i*phi)| = 2*|sin(pi*phi)|.
/// Satisfies pi*|phi| <= chord(phi) <= 2*pi*|phi| on [-1/2, 1/2).
inline double chord(Angle a) { return 2.0 * std::abs(std::sin(M_PI * a.value)); }
inline double chord(double turns) { return chord(Angle(turns)); }

} // namespace tsg
