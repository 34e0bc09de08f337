#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tsg/character.hpp"
#include "tsg/exponent.hpp"
#include "tsg/torus.hpp"

namespace tsg {

/// Membership of a character in the polar of the epsilon-ball U_eps.
/// For p > 1 the polar has an exact closed form, so only Member/NonMember
/// occur.  For p = 1 the closed form is two-sided (a sandwich between two
/// sup-norm balls) and characters between the bounds are BoundaryZone.
enum class PolarVerdict { Member, NonMember, BoundaryZone };

std::string to_string(PolarVerdict v);

/// Decide membership of chi in the polar of U_eps (ball in rho_p).
/// Preconditions: 0 < eps < 1/4; p == 1 or p > 1.
///  p > 1: member iff 4 * eps * |chi|_q <= 1 (q the conjugate exponent);
///         ties count as members (closed inequality, 1e-12 relative slack).
///  p = 1: member if |chi|_b <= 1/(4 eps); non-member if |chi|_b > 1/(2 eps);
///         BoundaryZone in between.
PolarVerdict polar_member_closed(const Character& chi, double eps, PExponent p);

struct PolarSup {
    double value = 0.0;                 // sup of sum n_i phi_i over the ball
    std::vector<double> extremal_phi;   // Hoelder equality point, ell_p norm eps
    std::vector<std::size_t> indices;   // coordinates carrying extremal_phi
};

/// Continuous-sup oracle for p > 1: the sup of sum n_i phi_i over the
/// rho_p ball of radius eps equals eps * |chi|_q, attained at
/// phi_i = eps * sign(n_i) * (|n_i| / |chi|_q)^(q/p).
/// Errors on chi == 0 (sup degenerates) and on p <= 1.
PolarSup polar_sup(const Character& chi, double eps, PExponent p);
double polar_sup_oracle(const Character& chi, double eps, PExponent p);

/// Sandwich for the polar between two ell_1-type windows:
/// A(a, 0) subset {chi : 4 eps |chi|_q <= 1} subset A(b, 0) with
/// a = floor(1/(4 eps)) - 1 and b = floor((1/(4 eps))^q).
struct WindowBounds {
    std::int64_t a = 0;
    std::int64_t b = 0;
};
WindowBounds window_bounds(double eps, double q);

/// Window set A(k, m): characters supported on indices > m with
/// |chi|_1 <= k + 1.
struct WindowSet {
    std::int64_t k = 0;
    std::size_t m = 0;
};

/// All characters of A(k, m) with support inside (m, support_max].
/// Deterministic order (lexicographic in (index, coefficient)).
std::vector<Character> window_enumerate(const WindowSet& w, std::size_t support_max);

/// Exact maximum of the canonicalized pairing phase |(chi, omega)| over
/// the polar {|chi|_q <= 1/(4 eps)} of U_eps, p > 1.  Dynamic program over
/// integer coefficient choices with per-coordinate budget |n|^q; equal
/// angle values are collapsed (only the group sum matters, and a balanced
/// split minimizes the budget for a given sum).  Wrap-around of the phase
/// is handled exactly; if the achievable-sum state set would exceed an
/// internal cap the call refuses (budget_error) rather than under-report.
/// Precondition: coeff_cap >= ceil(1/(4 eps)) so no feasible coefficient
/// lies outside the scan.
double bipolar_sup(const TorusSeq& omega, double eps, PExponent p,
                   std::int64_t coeff_cap);

/// Constructed witness that the bipolar of U_eps is unbounded for p > 1:
/// omega with all N coordinates equal to delta = (1 - 1e-6)/(4 m0),
/// m0 = floor((1/(4 eps))^q), N minimal with chord(delta) * N^(1/p) >= R.
struct HullWitness {
    std::int64_t m0 = 0;
    double delta = 0.0;
    std::size_t N = 0;
    TorusSeq omega;
    double dist = 0.0;          // dist_p(omega, identity), verified >= R
    double bipolar = 0.0;       // bipolar_sup(omega), verified <= 1/4

    nlohmann::json to_json() const;
};

/// For p = 1 no blowup is possible: any omega in the bipolar satisfies a
/// per-coordinate bound forced by the single-coordinate characters
/// n = floor(1/(4 eps)).
struct HullCertificate {
    std::int64_t n_star = 0;            // floor(1/(4 eps))
    double coordinate_bound = 0.0;      // 1/(4 n_star)

    nlohmann::json to_json() const;
};

using HullResult = std::variant<HullWitness, HullCertificate>;

/// p > 1: returns a verified HullWitness reaching distance R from the
/// identity while staying in the bipolar of U_eps (quasi-convex hulls of
/// neighborhoods are unbounded).  p = 1: returns the boundedness
/// certificate instead.  Preconditions: 0 < eps < 1/4, R >= 0.
HullResult hull_witness(PExponent p, double eps, double R);

} // namespace tsg
