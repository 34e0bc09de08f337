#include "tsg/generator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tsg/errors.hpp"

namespace tsg {

std::vector<double> GeneratorSpec::values(std::size_t count) const {
    if (count > alphas.size())
        throw std::invalid_argument("GeneratorSpec: fewer coordinates than requested");
    std::vector<double> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(alphas[i].value);
    return v;
}

nlohmann::json GeneratorSpec::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& a : alphas)
        arr.push_back({{"value", a.value},
                       {"prime", a.prime},
                       {"scale_pow", a.scale_pow}});
    return {{"alphas", arr}, {"k_bounds", k_bounds}};
}

GeneratorSpec build_generator(std::size_t n_max, std::uint64_t covering_cap) {
    if (n_max < 2 || n_max > 4)
        throw std::invalid_argument("build_generator: n_max must be in [2, 4]");

    static const int primes[4] = {2, 3, 5, 7};
    GeneratorSpec spec;
    spec.alphas.push_back({std::sqrt(2.0) - 1.0, 2, 0});

    for (std::size_t n = 2; n <= n_max; ++n) {
        double tol = std::ldexp(1.0, -static_cast<int>(n));      // 1/2^n
        std::size_t levels = std::size_t{1} << (n + 2);          // h = tol/4
        std::uint64_t khat =
            kronecker_covering_bound(spec.values(n - 1), tol, levels, covering_cap);

        double bound = std::min(spec.alphas.back().value,
                                1.0 / (std::ldexp(1.0, static_cast<int>(n)) *
                                       static_cast<double>(khat)));
        double f = std::sqrt(static_cast<double>(primes[n - 1]));
        f -= std::floor(f);
        int j = 0;
        while (std::ldexp(f, -j) >= bound) {
            if (++j > 200)
                throw std::logic_error("build_generator: scaling exponent ran away");
        }
        spec.alphas.push_back({std::ldexp(f, -j), primes[n - 1], j});
        spec.k_bounds.push_back(khat);
    }

    // construction invariants
    double prev = 0.5;
    for (std::size_t n = 1; n <= spec.size(); ++n) {
        double a = spec.alphas[n - 1].value;
        if (!(a > 0.0 && a < prev))
            throw std::logic_error("build_generator: coordinates not decreasing in (0, 1/2)");
        if (n >= 2 &&
            !(a < 1.0 / (std::ldexp(1.0, static_cast<int>(n)) *
                         static_cast<double>(spec.k_bounds[n - 2]))))
            throw std::logic_error("build_generator: covering-bound condition violated");
        prev = a;
    }
    return spec;
}

TorusSeq generator_power(const GeneratorSpec& spec, std::uint64_t k) {
    std::vector<Angle> c;
    c.reserve(spec.size());
    for (auto& a : spec.alphas)
        c.emplace_back(static_cast<double>(k) * a.value);
    return TorusSeq(std::move(c));
}

namespace {

// Left side of the truncation-level inequality at level n.
double level_lhs(const TorusSeq& omega, std::size_t n, double pv) {
    double tail = 0.0;
    for (std::size_t s = n; s <= omega.size(); ++s)
        tail += std::pow(chord(omega.at(s)), pv);
    double twopi = std::pow(2.0 * M_PI, pv);
    double fourpi = std::pow(4.0 * M_PI, pv);
    double scale = std::pow(2.0, pv * static_cast<double>(n));
    return tail + static_cast<double>(n - 1) * twopi / scale +
           fourpi / ((std::pow(2.0, pv) - 1.0) * scale);
}

} // namespace

PowerApprox approx_power(const TorusSeq& omega, double eps,
                         const GeneratorSpec& spec, PExponent p,
                         std::uint64_t cap) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("approx_power: eps must be positive");
    if (omega.size() > spec.size())
        throw std::invalid_argument("approx_power: omega extends beyond the generator");
    if (!(p.is_sup() || p.p >= 1.0))
        throw std::invalid_argument("approx_power: p must be 0 or >= 1");

    PowerApprox out;
    out.dist = dist_p(omega, TorusSeq::identity(), p);
    if (out.dist < eps) {
        out.level = spec.size();
        return out;                           // k = 0, the empty power
    }

    std::size_t level = spec.size();
    double deficit = 0.0;
    if (!p.is_sup()) {
        double target = std::pow(eps, std::max(p.p, 1.0));
        deficit = level_lhs(omega, level, p.p) - target;
        for (std::size_t n = 1; n <= spec.size(); ++n) {
            if (level_lhs(omega, n, p.p) < target) {
                level = n;
                deficit = 0.0;
                break;
            }
        }
    }
    out.level = level;
    out.level_deficit = std::max(deficit, 0.0);

    double tol = std::ldexp(1.0, -static_cast<int>(level));
    std::vector<double> alphas = spec.values(level - 1);
    std::vector<double> targets;
    targets.reserve(level - 1);
    for (std::size_t s = 1; s <= level - 1; ++s)
        targets.push_back(omega.at(s).value);

    std::uint64_t k_from = 1;
    while (true) {
        auto cand = kronecker_scan(alphas, targets, tol, k_from, cap);
        if (!cand) {
            std::ostringstream msg;
            msg << "approx_power: cap " << cap << " exhausted at level " << level;
            if (out.level_deficit > 0.0)
                msg << " (generator too short for the truncation inequality; "
                       "deficit " << out.level_deficit << ")";
            throw budget_error(msg.str());
        }
        double d = dist_p(omega, generator_power(spec, cand->k), p);
        if (d < eps) {
            out.k = cand->k;
            out.residuals = std::move(cand->residuals);
            out.dist = d;
            return out;
        }
        k_from = cand->k + 1;
    }
}

} // namespace tsg
