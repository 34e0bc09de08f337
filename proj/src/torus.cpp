#include "tsg/torus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsg {

TorusSeq TorusSeq::from_turns(const std::vector<double>& turns) {
    std::vector<Angle> c;
    c.reserve(turns.size());
    for (double t : turns) c.emplace_back(t);
    return TorusSeq(std::move(c));
}

TorusSeq TorusSeq::operator*(const TorusSeq& o) const {
    std::vector<Angle> c(std::max(coords.size(), o.coords.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = at(i + 1) + o.at(i + 1);
    return TorusSeq(std::move(c));
}

TorusSeq TorusSeq::inverse() const {
    std::vector<Angle> c(coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords[i];
    return TorusSeq(std::move(c));
}

namespace {

// Shared accumulation for dist_p / rho_p / quotient_dist.
// term(n) must be the nonnegative per-coordinate magnitude.
template <typename Term>
double combine(std::size_t n_coords, PExponent p, Term term) {
    if (p.is_sup()) {
        double m = 0.0;
        for (std::size_t n = 1; n <= n_coords; ++n) m = std::max(m, term(n));
        return m;
    }
    double s = 0.0;
    for (std::size_t n = 1; n <= n_coords; ++n) s += std::pow(term(n), p.p);
    return std::pow(s, p.outer());
}

} // namespace

double dist_p(const TorusSeq& a, const TorusSeq& b, PExponent p) {
    std::size_t n = std::max(a.size(), b.size());
    return combine(n, p, [&](std::size_t i) { return chord(a.at(i) - b.at(i)); });
}

double rho_p(const TorusSeq& a, const TorusSeq& b, PExponent p) {
    std::size_t n = std::max(a.size(), b.size());
    return combine(n, p, [&](std::size_t i) { return std::abs((a.at(i) - b.at(i)).value); });
}

double quotient_dist(const RealSeq& x, const RealSeq& y) {
    if (x.p.p != y.p.p)
        throw std::invalid_argument("quotient_dist: sequences carry different exponents");
    std::size_t n = std::max(x.size(), y.size());
    return combine(n, x.p, [&](std::size_t i) {
        return std::abs(canonical_angle(y.at(i) - x.at(i)));
    });
}

TorusSeq quotient_iso(const RealSeq& x) {
    return TorusSeq::from_turns(x.values);
}

} // namespace tsg
