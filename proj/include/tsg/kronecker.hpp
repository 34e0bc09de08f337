#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tsg {

struct KroneckerResult {
    std::uint64_t k = 0;
    std::vector<double> residuals;   // <k a_s - y_s>, distance to nearest integer
};

/// First k in [k_from, cap] whose residuals <k a_s - y_s> are all below tol
/// (open inequality with 1e-15 slack toward rejection), or nullopt when the
/// cap is exhausted.  Empty alphas accept every k vacuously.
std::optional<KroneckerResult> kronecker_scan(const std::vector<double>& alphas,
                                              const std::vector<double>& targets,
                                              double tol, std::uint64_t k_from,
                                              std::uint64_t cap);

/// Least natural k with all residuals below tol.  Throws budget_error with
/// the best near-miss when the cap is exhausted.
KroneckerResult kronecker_search(const std::vector<double>& alphas,
                                 const std::vector<double>& targets, double tol,
                                 std::uint64_t cap);

/// Certified uniform bound k-hat: for every grid target tuple (spacing
/// h = 1/grid_levels per coordinate) the least k with residuals < tol - h
/// is found; the maximum over the grid bounds every real tuple at
/// tolerance tol because residuals are 1-Lipschitz in the target.
/// Preconditions: tol > h; throws budget_error if any tuple exhausts cap.
std::uint64_t kronecker_covering_bound(const std::vector<double>& alphas,
                                       double tol, std::size_t grid_levels,
                                       std::uint64_t cap);

} // namespace tsg
