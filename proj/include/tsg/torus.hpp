#pragma once

#include <cstddef>
#include <vector>

#include "tsg/angle.hpp"
#include "tsg/exponent.hpp"

namespace tsg {

/// Element of the torus sequence group: a finite window of angles with an
/// exact all-zero (identity) tail.  Coordinate-wise circle multiplication.
struct TorusSeq {
    std::vector<Angle> coords;

    TorusSeq() = default;
    explicit TorusSeq(std::vector<Angle> c) : coords(std::move(c)) {}

    /// Build from raw turn values (each canonicalized).
    static TorusSeq from_turns(const std::vector<double>& turns);
    static TorusSeq identity(std::size_t n = 0) { return TorusSeq(std::vector<Angle>(n)); }

    std::size_t size() const { return coords.size(); }
    /// Angle at 1-based coordinate n; identity beyond the window.
    Angle at(std::size_t n) const {
        return (n >= 1 && n <= coords.size()) ? coords[n - 1] : Angle();
    }

    TorusSeq operator*(const TorusSeq& o) const;
    TorusSeq inverse() const;
    bool operator==(const TorusSeq&) const = default;
};

/// Real sequence in the ell_p model (pre-quotient); carries its exponent.
struct RealSeq {
    std::vector<double> values;
    PExponent p;

    RealSeq() = default;
    RealSeq(std::vector<double> v, PExponent exp) : values(std::move(v)), p(exp) {}

    std::size_t size() const { return values.size(); }
    double at(std::size_t n) const {
        return (n >= 1 && n <= values.size()) ? values[n - 1] : 0.0;
    }
};

/// Group metric (sum of chord^p)^min(1,1/p); sup of chords when p == 0.
double dist_p(const TorusSeq& a, const TorusSeq& b, PExponent p);

/// Angle metric (sum of |delta|^p)^min(1,1/p) over canonicalized coordinate
/// differences; sup when p == 0.  Equivalent to dist_p via the chord
/// sandwich: pi * rho_p <= dist_p <= 2 * pi * rho_p for p >= 1.
double rho_p(const TorusSeq& a, const TorusSeq& b, PExponent p);

/// Quotient metric on l_p / Z: d*(x,y) = (sum |s_n|^p)^min(1,1/p) where
/// s_n = (y_n - x_n) mod 1 canonicalized into [-1/2, 1/2); sup when p == 0.
/// Both sequences must carry the same exponent.
double quotient_dist(const RealSeq& x, const RealSeq& y);

/// Image of a real sequence under the quotient map r(x) = (x_n mod 1)_n.
TorusSeq quotient_iso(const RealSeq& x);

} // namespace tsg
