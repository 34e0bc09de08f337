#include "tsg/kronecker.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tsg/errors.hpp"

namespace tsg {

namespace {

constexpr double kRejectSlack = 1e-15;   // open inequality, toward rejection

double dist_to_int(double x) { return std::abs(x - std::round(x)); }

void validate(const std::vector<double>& alphas, const std::vector<double>& targets,
              double tol, std::uint64_t cap) {
    if (alphas.size() != targets.size())
        throw std::invalid_argument("kronecker: alphas/targets length mismatch");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("kronecker: tol must be positive");
    if (cap < 1)
        throw std::invalid_argument("kronecker: cap must be >= 1");
}

} // namespace

std::optional<KroneckerResult> kronecker_scan(const std::vector<double>& alphas,
                                              const std::vector<double>& targets,
                                              double tol, std::uint64_t k_from,
                                              std::uint64_t cap) {
    validate(alphas, targets, tol, cap);
    if (k_from < 1) k_from = 1;
    const double accept = tol - kRejectSlack;
    for (std::uint64_t k = k_from; k <= cap; ++k) {
        KroneckerResult r;
        r.k = k;
        r.residuals.reserve(alphas.size());
        bool ok = true;
        for (std::size_t s = 0; s < alphas.size(); ++s) {
            double res = dist_to_int(static_cast<double>(k) * alphas[s] - targets[s]);
            if (res >= accept) {
                ok = false;
                break;
            }
            r.residuals.push_back(res);
        }
        if (ok) return r;
    }
    return std::nullopt;
}

KroneckerResult kronecker_search(const std::vector<double>& alphas,
                                 const std::vector<double>& targets, double tol,
                                 std::uint64_t cap) {
    if (auto r = kronecker_scan(alphas, targets, tol, 1, cap)) return *r;
    // report best near-miss for diagnosis
    double best = 1.0;
    std::uint64_t best_k = 0;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        double worst = 0.0;
        for (std::size_t s = 0; s < alphas.size(); ++s)
            worst = std::max(worst, dist_to_int(static_cast<double>(k) * alphas[s] -
                                                targets[s]));
        if (worst < best) {
            best = worst;
            best_k = k;
        }
    }
    std::ostringstream msg;
    msg << "kronecker_search: cap " << cap << " exhausted at tol " << tol
        << "; best near-miss k=" << best_k << " with max residual " << best;
    throw budget_error(msg.str());
}

std::uint64_t kronecker_covering_bound(const std::vector<double>& alphas,
                                       double tol, std::size_t grid_levels,
                                       std::uint64_t cap) {
    if (alphas.empty()) return 1;
    if (grid_levels < 1)
        throw std::invalid_argument("kronecker_covering_bound: grid_levels >= 1");
    const double h = 1.0 / static_cast<double>(grid_levels);
    if (!(tol - h > 0.0))
        throw std::invalid_argument("kronecker_covering_bound: grid too coarse "
                                    "(need tol > 1/grid_levels)");
    const double accept = (tol - h) - kRejectSlack;
    const std::size_t L = alphas.size();

    // fractional parts of k * alpha, grown on demand and shared by all tuples
    std::vector<std::vector<double>> frac;   // frac[k-1][s]
    auto ensure = [&](std::uint64_t k) -> const std::vector<double>& {
        while (frac.size() < k) {
            std::uint64_t kk = frac.size() + 1;
            std::vector<double> row(L);
            for (std::size_t s = 0; s < L; ++s)
                row[s] = static_cast<double>(kk) * alphas[s];
            frac.push_back(std::move(row));
        }
        return frac[k - 1];
    };

    std::uint64_t khat = 0;
    std::vector<std::size_t> idx(L, 0);
    while (true) {
        bool found = false;
        for (std::uint64_t k = 1; k <= cap; ++k) {
            const std::vector<double>& row = ensure(k);
            bool ok = true;
            for (std::size_t s = 0; s < L; ++s) {
                if (dist_to_int(row[s] - static_cast<double>(idx[s]) * h) >= accept) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                khat = std::max(khat, k);
                found = true;
                break;
            }
        }
        if (!found) {
            std::ostringstream msg;
            msg << "kronecker_covering_bound: cap " << cap
                << " exhausted on a grid tuple";
            throw budget_error(msg.str());
        }
        // advance the mixed-radix tuple index
        std::size_t d = 0;
        while (d < L && ++idx[d] == grid_levels) idx[d++] = 0;
        if (d == L) break;
    }
    return khat;
}

} // namespace tsg
