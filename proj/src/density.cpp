#include "tsg/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tsg/quadrature.hpp"

namespace tsg {

DensityFamily DensityFamily::exponential(std::vector<double> cs) {
    for (double c : cs)
        if (!(c > 0.0) || !std::isfinite(c))
            throw std::invalid_argument("DensityFamily: every c must be positive");
    return {Kind::Exponential, std::move(cs)};
}

DensityFamily DensityFamily::exponential_const(double c, std::size_t n) {
    return exponential(std::vector<double>(n, c));
}

double DensityFamily::c_at(std::size_t index) const {
    if (kind != Kind::Exponential)
        throw std::invalid_argument("DensityFamily: c_at on non-exponential family");
    if (index < 1 || index > c_list.size())
        throw std::invalid_argument("DensityFamily: coordinate index out of range");
    return c_list[index - 1];
}

double density_eval(const DensityFamily& fam, std::size_t index, Angle x) {
    switch (fam.kind) {
    case DensityFamily::Kind::LinearShift:
        return x.value + 1.0;
    case DensityFamily::Kind::Exponential: {
        double c = fam.c_at(index);
        double a = (2.0 / c) * (1.0 - std::exp(-c / 2.0));
        return std::exp(-c * std::abs(x.value)) / a;
    }
    }
    throw std::logic_error("density_eval: unreachable");
}

double hellinger_closed(double c, Angle phi) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("hellinger_closed: c must be positive");
    double f = std::abs(phi.value);
    double u = 0.25 * c * (1.0 - 2.0 * f);
    return (2.0 * std::sinh(u) + c * f * std::cosh(u)) / (2.0 * std::sinh(0.25 * c));
}

double hellinger_quad(const DensityFamily& fam, std::size_t index, Angle phi,
                      double tol) {
    if (fam.kind == DensityFamily::Kind::Exponential)
        fam.c_at(index);    // validate the index up front
    const double f = phi.value;
    auto integrand = [&](double x) {
        double shifted = canonical_angle(x + f);
        return std::sqrt(density_eval(fam, index, Angle(x)) *
                         density_eval(fam, index, Angle(shifted)));
    };
    // Non-smooth points: the density kink at 0 (exponential), its shifted
    // copy, and the seam where x + phi wraps around the circle.
    std::vector<double> breaks;
    auto add = [&](double x) { if (x > -0.5 && x < 0.5) breaks.push_back(x); };
    if (fam.kind == DensityFamily::Kind::Exponential) {
        add(0.0);
        add(canonical_angle(-f));
    }
    add(canonical_angle(0.5 - f));
    QuadResult r = integrate_adaptive(integrand, -0.5, 0.5, tol, 1'000'000, breaks);
    return r.value;
}

std::string to_string(KakutaniVerdict v) {
    switch (v) {
    case KakutaniVerdict::EquivalentLike: return "EquivalentLike";
    case KakutaniVerdict::SingularLike:   return "SingularLike";
    case KakutaniVerdict::Inconclusive:   return "Inconclusive";
    }
    return "Inconclusive";
}

nlohmann::json HellingerTrace::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < partial_products.size(); ++i)
        arr.push_back({{"N", i + 1}, {"product", partial_products[i]}});
    return arr;
}

std::string HellingerTrace::to_csv() const {
    std::ostringstream os;
    os << "# N,product\n";
    os.precision(17);
    for (std::size_t i = 0; i < partial_products.size(); ++i)
        os << (i + 1) << "," << partial_products[i] << "\n";
    return os.str();
}

HellingerTrace kakutani_classify(const DensityFamily& fam, const TorusSeq& shift,
                                 std::size_t n_max, double p_eq, double p_sing,
                                 double quad_tol) {
    if (n_max == 0)
        throw std::invalid_argument("kakutani_classify: n_max must be >= 1");
    if (!(0.0 < p_sing && p_sing < p_eq && p_eq < 1.0))
        throw std::invalid_argument("kakutani_classify: need 0 < p_sing < p_eq < 1");
    if (fam.kind == DensityFamily::Kind::Exponential && fam.c_list.size() < n_max)
        throw std::invalid_argument("kakutani_classify: c_list shorter than n_max");

    HellingerTrace trace;
    trace.partial_products.reserve(n_max);
    double product = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Angle phi = shift.at(n);
        double P = 1.0;     // identity shift integrates the density itself
        if (phi.value != 0.0) {
            P = fam.kind == DensityFamily::Kind::Exponential
                    ? hellinger_closed(fam.c_at(n), phi)
                    : hellinger_quad(fam, n, phi, quad_tol);
            P = std::min(P, 1.0);   // Cauchy-Schwarz bound, guards round-off
            if (!(P > 0.0))
                throw std::domain_error("kakutani_classify: non-positive Hellinger term");
        }
        product *= P;
        trace.partial_products.push_back(product);
    }

    const double final_product = trace.final_product();
    // Relative decrease over the last tenth of the index range.
    std::size_t start = std::max<std::size_t>(1, (9 * n_max) / 10);
    double p_start = trace.partial_products[start - 1];
    double decrease = p_start > 0.0 ? (p_start - final_product) / p_start : 1.0;

    if (final_product < p_sing)
        trace.verdict = KakutaniVerdict::SingularLike;
    else if (final_product > p_eq && decrease < 1e-6)
        trace.verdict = KakutaniVerdict::EquivalentLike;
    else
        trace.verdict = KakutaniVerdict::Inconclusive;
    return trace;
}

} // namespace tsg
