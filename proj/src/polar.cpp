#include "tsg/polar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "tsg/errors.hpp"

namespace tsg {

namespace {

constexpr double kTieSlack = 1e-12;   // ties resolve toward membership/feasibility

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 0.25))
        throw std::invalid_argument("polar: eps must lie in (0, 1/4)");
}

double polar_radius(double eps) { return 1.0 / (4.0 * eps); }

// Feasibility budget (1/(4 eps))^q with the tie slack folded in, so the
// same integer bound drives both the DP and the witness construction.
double budget_real(double eps, double q) {
    double b = std::pow(polar_radius(eps), q) * (1.0 + kTieSlack);
    if (!(b <= 1e15))
        throw budget_error("polar: budget (1/(4 eps))^q outside desk-scale range");
    return b;
}

std::int64_t budget_floor(double eps, double q) {
    return static_cast<std::int64_t>(std::floor(budget_real(eps, q) + kTieSlack));
}

} // namespace

std::string to_string(PolarVerdict v) {
    switch (v) {
    case PolarVerdict::Member:       return "Member";
    case PolarVerdict::NonMember:    return "NonMember";
    case PolarVerdict::BoundaryZone: return "BoundaryZone";
    }
    return "NonMember";
}

PolarVerdict polar_member_closed(const Character& chi, double eps, PExponent p) {
    check_eps(eps);
    if (p.p == 1.0) {
        double nb = static_cast<double>(chi.norm_b());
        if (nb <= polar_radius(eps) * (1.0 + kTieSlack))
            return PolarVerdict::Member;
        if (nb > (1.0 / (2.0 * eps)) * (1.0 + kTieSlack))
            return PolarVerdict::NonMember;
        return PolarVerdict::BoundaryZone;
    }
    if (!p.has_conjugate())
        throw std::invalid_argument("polar_member_closed: p must be 1 or > 1");
    double s = eps * chi.norm_q(p.conjugate());
    return s <= 0.25 * (1.0 + kTieSlack) ? PolarVerdict::Member
                                         : PolarVerdict::NonMember;
}

PolarSup polar_sup(const Character& chi, double eps, PExponent p) {
    check_eps(eps);
    if (!p.has_conjugate())
        throw std::invalid_argument("polar_sup: requires p > 1");
    if (chi.is_zero())
        throw std::invalid_argument("polar_sup: zero character has degenerate sup");
    double q = p.conjugate();
    double nq = chi.norm_q(q);
    PolarSup out;
    double val = 0.0;
    for (auto& [i, n] : chi.coeffs()) {
        double mag = std::abs(static_cast<double>(n));
        // Hoelder equality point; lies on the eps-sphere of rho_p
        double phi = eps * (n > 0 ? 1.0 : -1.0) * std::pow(mag / nq, q / p.p);
        out.indices.push_back(i);
        out.extremal_phi.push_back(phi);
        val += static_cast<double>(n) * phi;
    }
    out.value = val;
    return out;
}

double polar_sup_oracle(const Character& chi, double eps, PExponent p) {
    return polar_sup(chi, eps, p).value;
}

WindowBounds window_bounds(double eps, double q) {
    check_eps(eps);
    if (!(q >= 1.0))
        throw std::invalid_argument("window_bounds: q must be >= 1");
    double r = polar_radius(eps);
    WindowBounds out;
    out.a = static_cast<std::int64_t>(std::floor(r)) - 1;
    out.b = static_cast<std::int64_t>(std::floor(std::pow(r, q)));
    return out;
}

std::vector<Character> window_enumerate(const WindowSet& w, std::size_t support_max) {
    if (w.k < 0)
        throw std::invalid_argument("window_enumerate: k must be >= 0");
    if (support_max <= w.m)
        throw std::invalid_argument("window_enumerate: support_max must exceed m");
    std::vector<Character> out;
    Character::Map cur;
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t rem) -> void {
        if (idx > support_max) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t n = -rem; n <= rem; ++n) {
            if (n != 0) cur[idx] = n;
            self(self, idx + 1, rem - std::abs(n));
            cur.erase(idx);
        }
    };
    rec(rec, w.m + 1, w.k + 1);
    return out;
}

namespace {

constexpr std::size_t kStateCap = 4'000'000;

// Minimal budget sum |n_i|^q to realize group sum S >= 0 over `mult` equal
// coordinates: the balanced split (convexity / majorization).  Returns inf
// when S is not realizable at all.
double group_cost(std::int64_t S, std::int64_t mult, bool int_q, std::int64_t qi,
                  double q) {
    if (S == 0) return 0.0;
    std::int64_t lo = S / mult, r = S % mult;
    if (int_q) {
        auto ipow = [&](std::int64_t base) -> double {
            double v = 1.0;
            for (std::int64_t i = 0; i < qi; ++i) {
                v *= static_cast<double>(base);
                if (v > 1e18) return 1e18;   // already infeasible, avoid overflow
            }
            return v;
        };
        return static_cast<double>(mult - r) * ipow(lo) +
               static_cast<double>(r) * ipow(lo + 1);
    }
    return static_cast<double>(mult - r) * std::pow(static_cast<double>(lo), q) +
           static_cast<double>(r) * std::pow(static_cast<double>(lo + 1), q);
}

} // namespace

double bipolar_sup(const TorusSeq& omega, double eps, PExponent p,
                   std::int64_t coeff_cap) {
    check_eps(eps);
    if (!p.has_conjugate())
        throw std::invalid_argument("bipolar_sup: requires p > 1");
    double q = p.conjugate();
    if (coeff_cap < static_cast<std::int64_t>(std::ceil(polar_radius(eps) * (1.0 - 1e-9))))
        throw budget_error("bipolar_sup: coeff_cap below ceil(1/(4 eps)); "
                           "refusing to under-scan the feasible set");

    bool int_q = std::abs(q - std::round(q)) < 1e-9;
    std::int64_t qi = static_cast<std::int64_t>(std::llround(q));
    double budget = int_q ? static_cast<double>(budget_floor(eps, q))
                          : budget_real(eps, q);

    // Coordinates sharing an angle value are interchangeable: only the group
    // coefficient sum affects the phase, and group_cost gives its cheapest
    // realization.  Identity coordinates cannot contribute.
    std::map<double, std::int64_t> groups;
    for (auto& a : omega.coords)
        if (a.value != 0.0) ++groups[a.value];

    // Achievable raw phase sums -> minimal budget spent.
    std::map<double, double> states{{0.0, 0.0}};
    for (auto& [phi, mult] : groups) {
        std::vector<std::pair<std::int64_t, double>> choices;   // (S, cost), S >= 0
        for (std::int64_t S = 0;; ++S) {
            double c = group_cost(S, mult, int_q, qi, q);
            if (c > budget) break;
            choices.emplace_back(S, c);
        }
        std::map<double, double> next;
        for (auto& [sum, cost] : states) {
            for (auto& [S, c] : choices) {
                double nc = cost + c;
                if (nc > budget) break;      // choices are cost-sorted
                for (int sgn = (S == 0 ? 1 : -1); sgn <= 1; sgn += 2) {
                    double ns = sum + sgn * static_cast<double>(S) * phi;
                    auto [it, inserted] = next.try_emplace(ns, nc);
                    if (!inserted && nc < it->second) it->second = nc;
                }
            }
            if (next.size() > kStateCap)
                throw budget_error("bipolar_sup: achievable-sum state set exceeds "
                                   "internal cap; refusing to under-report");
        }
        states.swap(next);
    }

    double best = 0.0;
    for (auto& [sum, cost] : states)
        best = std::max(best, std::abs(canonical_angle(sum)));
    return best;
}

nlohmann::json HullWitness::to_json() const {
    return {
        {"type", "witness"},
        {"m0", m0},
        {"delta", delta},
        {"N", N},
        {"omega", {{"uniform_value", delta}, {"length", N}}},
        {"dist", dist},
        {"bipolar_sup", bipolar},
    };
}

nlohmann::json HullCertificate::to_json() const {
    return {
        {"type", "bounded_certificate"},
        {"n_star", n_star},
        {"coordinate_bound", coordinate_bound},
    };
}

HullResult hull_witness(PExponent p, double eps, double R) {
    check_eps(eps);
    if (!(R >= 0.0) || !std::isfinite(R))
        throw std::invalid_argument("hull_witness: R must be finite and >= 0");

    if (p.p == 1.0) {
        // p = 1: the polar contains n* concentrated on every coordinate, so
        // |n* phi_j| <= 1/4 pins each |phi_j|; no blowup is possible.
        HullCertificate cert;
        cert.n_star = static_cast<std::int64_t>(std::floor(polar_radius(eps)));
        cert.coordinate_bound = 1.0 / (4.0 * static_cast<double>(cert.n_star));
        return cert;
    }
    if (!p.has_conjugate())
        throw std::invalid_argument("hull_witness: p must be 1 or > 1");

    double q = p.conjugate();
    HullWitness w;
    w.m0 = budget_floor(eps, q);
    w.delta = (1.0 - 1e-6) / (4.0 * static_cast<double>(w.m0));
    if (R > 0.0) {
        double c = chord(w.delta);
        double need = std::pow(R / c, p.p);
        if (!(need < 5e7))
            throw budget_error("hull_witness: required N exceeds desk-scale range");
        w.N = static_cast<std::size_t>(std::ceil(need));
        while (c * std::pow(static_cast<double>(w.N), 1.0 / p.p) < R) ++w.N;
    }
    w.omega = TorusSeq(std::vector<Angle>(w.N, Angle(w.delta)));
    w.dist = dist_p(w.omega, TorusSeq::identity(), p);
    w.bipolar = bipolar_sup(w.omega, eps, p,
                            static_cast<std::int64_t>(std::ceil(polar_radius(eps))));
    if (!(w.dist >= R))
        throw std::logic_error("hull_witness: distance postcondition failed");
    if (!(w.bipolar <= 0.25))
        throw std::logic_error("hull_witness: bipolar postcondition failed");
    return w;
}

} // namespace tsg
