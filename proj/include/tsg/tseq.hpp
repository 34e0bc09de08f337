#pragma once

#include <cstdint>
#include <vector>

#include "tsg/character.hpp"
#include "tsg/polar.hpp"

namespace tsg {

/// Dual-group neighborhood from a T-sequence construction: the union over
/// k of sums A*_{i_1} + ... + A*_{i_k}, where A*_n = {0, +-e_m : m >= n}
/// and i_1 < i_2 < ... are the thresholds.  A finite prefix is stored;
/// beyond it thresholds continue consecutively (i_{j+1} = i_j + 1).
struct TSeqNeighborhood {
    std::vector<std::size_t> prefix;    // strictly increasing, all >= 1

    explicit TSeqNeighborhood(std::vector<std::size_t> thresholds);

    /// t-th threshold, 1-based.
    std::size_t threshold(std::size_t t) const;
};

/// Membership of chi in W: split chi into |chi|_1 unit characters and match
/// them, sorted ascending, against the thresholds i_1 < i_2 < ...; the
/// greedy order is optimal because the admissible index sets are nested.
bool tseq_member(const Character& chi, const TSeqNeighborhood& W);

/// Least m < support_max such that every character of A(k, m) supported
/// inside (m, support_max] lies in W.  Throws budget_error when no such m
/// exists below support_max.
std::size_t tseq_window_inclusion(const TSeqNeighborhood& W, std::int64_t k,
                                  std::size_t support_max);

} // namespace tsg
