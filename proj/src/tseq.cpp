#include "tsg/tseq.hpp"

#include <stdexcept>

#include "tsg/errors.hpp"

namespace tsg {

TSeqNeighborhood::TSeqNeighborhood(std::vector<std::size_t> thresholds)
    : prefix(std::move(thresholds)) {
    if (prefix.empty())
        throw std::invalid_argument("TSeqNeighborhood: empty threshold prefix");
    std::size_t prev = 0;
    for (std::size_t v : prefix) {
        if (v < 1 || v <= prev)
            throw std::invalid_argument(
                "TSeqNeighborhood: thresholds must be strictly increasing positive");
        prev = v;
    }
}

std::size_t TSeqNeighborhood::threshold(std::size_t t) const {
    if (t < 1)
        throw std::invalid_argument("TSeqNeighborhood: thresholds are 1-based");
    if (t <= prefix.size()) return prefix[t - 1];
    return prefix.back() + (t - prefix.size());
}

bool tseq_member(const Character& chi, const TSeqNeighborhood& W) {
    std::size_t t = 0;
    for (auto& [index, coeff] : chi.coeffs()) {        // ascending index order
        std::int64_t units = coeff < 0 ? -coeff : coeff;
        for (std::int64_t u = 0; u < units; ++u)
            if (index < W.threshold(++t)) return false;
    }
    return true;
}

std::size_t tseq_window_inclusion(const TSeqNeighborhood& W, std::int64_t k,
                                  std::size_t support_max) {
    for (std::size_t m = 0; m < support_max; ++m) {
        bool all = true;
        for (const Character& chi : window_enumerate({k, m}, support_max))
            if (!tseq_member(chi, W)) {
                all = false;
                break;
            }
        if (all) return m;
    }
    throw budget_error("tseq_window_inclusion: no window tail below support_max "
                       "is contained in the neighborhood");
}

} // namespace tsg
