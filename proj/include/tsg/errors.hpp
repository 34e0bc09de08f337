#pragma once

#include <stdexcept>
#include <string>

namespace tsg {

/// Search cap or evaluation budget ran out before the requested result
/// could be produced.  Callers can retry with a larger budget; the partial
/// state is described in what().
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Adaptive quadrature failed to reach the requested tolerance within its
/// evaluation budget.  Kept distinct from budget_error on searches so a
/// caller can tell "integral did not converge" from "scan cap exhausted".
struct quadrature_error : budget_error {
    explicit quadrature_error(const std::string& msg) : budget_error(msg) {}
};

} // namespace tsg
