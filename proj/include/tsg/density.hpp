#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tsg/angle.hpp"
#include "tsg/torus.hpp"

namespace tsg {

/// Product-measure coordinate densities on the circle, parameterized over
/// [-1/2, 1/2) in turns.
///
///  * LinearShift: f(x) = x + 1 (the tilted density; no free parameters).
///  * Exponential: f_c(x) = exp(-c|x|) / a(c), a(c) = (2/c)(1 - exp(-c/2)),
///    with one c per coordinate (1-based index into c_list).
struct DensityFamily {
    enum class Kind { LinearShift, Exponential };

    Kind kind = Kind::Exponential;
    std::vector<double> c_list;     // used by Exponential only; each c > 0

    static DensityFamily linear_shift() { return {Kind::LinearShift, {}}; }
    static DensityFamily exponential(std::vector<double> cs);
    /// Exponential family with a constant parameter broadcast to n coords.
    static DensityFamily exponential_const(double c, std::size_t n);

    double c_at(std::size_t index) const;   // 1-based, Exponential only
};

/// Evaluate the index-th coordinate density at angle x.
double density_eval(const DensityFamily& fam, std::size_t index, Angle x);

/// Closed-form Hellinger integral of the exponential density against its
/// shift by phi (in turns):
///   P_c(phi) = [2 sinh((c/4)(1-2|phi|)) + c|phi| cosh((c/4)(1-2|phi|))]
///              / (2 sinh(c/4)).
/// Depends on |phi| only.  Requires c > 0.
double hellinger_closed(double c, Angle phi);

/// Hellinger integral of any family member against its shift by phi,
/// by adaptive quadrature split at the density kinks and the wrap seam.
/// tol is the absolute tolerance; the evaluation budget is 1e6 points.
double hellinger_quad(const DensityFamily& fam, std::size_t index, Angle phi,
                      double tol = 1e-10);

enum class KakutaniVerdict { EquivalentLike, SingularLike, Inconclusive };

std::string to_string(KakutaniVerdict v);

/// Partial products P_1 * ... * P_N of per-coordinate Hellinger integrals.
struct HellingerTrace {
    std::vector<double> partial_products;   // entry N-1 holds the product to N
    KakutaniVerdict verdict = KakutaniVerdict::Inconclusive;

    double final_product() const {
        return partial_products.empty() ? 1.0 : partial_products.back();
    }
    nlohmann::json to_json() const;         // array of {"N":, "product":}
    std::string to_csv() const;             // two columns, gnuplot friendly
};

/// Heuristic finite-N Kakutani dichotomy classifier.  Computes the
/// Hellinger trace of the product measure against its shift and applies
/// the desk-scale decision rule:
///   SingularLike    if the final product < p_sing,
///   EquivalentLike  if the final product > p_eq and the relative decrease
///                   over the last 10% of indices is below 1e-6,
///   Inconclusive    otherwise.
/// The underlying dichotomy is the standard one (positive infinite product
/// vs. zero).  Shift coordinates beyond the window are identity (P = 1).
HellingerTrace kakutani_classify(const DensityFamily& fam, const TorusSeq& shift,
                                 std::size_t n_max, double p_eq = 1e-3,
                                 double p_sing = 1e-12, double quad_tol = 1e-10);

} // namespace tsg
