#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "tsg/exponent.hpp"
#include "tsg/kronecker.hpp"
#include "tsg/torus.hpp"

namespace tsg {

/// One coordinate of the generator: frac(sqrt(prime)) / 2^scale_pow.
/// Keeping the provenance makes the irrationality / rational-independence
/// pedigree of the sequence auditable.
struct GeneratorAlpha {
    double value = 0.0;
    int prime = 0;
    int scale_pow = 0;
};

/// Certified generator data for the monothetic construction:
///   a_1 = sqrt(2) - 1, and for n >= 2
///   a_n = frac(sqrt(p_n)) / 2^{j_n} < min(a_{n-1}, 1 / (2^n k_n))
/// where k_n = k_bounds[n-2] is the covering bound certified for the first
/// n-1 coordinates at tolerance 1/2^n.
struct GeneratorSpec {
    std::vector<GeneratorAlpha> alphas;
    std::vector<std::uint64_t> k_bounds;    // for n = 2 .. alphas.size()

    std::size_t size() const { return alphas.size(); }
    std::vector<double> values(std::size_t count) const;
    nlohmann::json to_json() const;
};

/// Build the generator with certified Kronecker covering bounds.
/// Desk scale: 2 <= n_max <= 4.
GeneratorSpec build_generator(std::size_t n_max,
                              std::uint64_t covering_cap = 10'000'000);

/// k-th power of the (truncated) generator as a torus element.
TorusSeq generator_power(const GeneratorSpec& spec, std::uint64_t k);

struct PowerApprox {
    std::uint64_t k = 0;
    std::size_t level = 0;            // truncation level n used for the search
    std::vector<double> residuals;    // Kronecker residuals at the first n-1 coords
    double dist = 0.0;                // verified dist_p(omega, power)
    double level_deficit = 0.0;       // >0 when the truncation inequality could
                                      // not be met within the generator length
};

/// Find k with dist_p(omega, generator^k) < eps.  The truncation level is
/// the smallest one whose tail inequality
///   sum_{s>=n} chord(omega_s)^p + (n-1) (2 pi)^p / 2^{pn}
///     + (4 pi)^p / ((2^p - 1) 2^{pn})  <  eps^max(p,1)
/// holds; if none does within the generator's length the level clamps to
/// that length and the deficit is recorded.  Candidates must pass the
/// per-coordinate residual bound 1/2^n and are only returned after direct
/// metric verification.  k = 0 is returned when omega is already within
/// eps of the identity.  Throws budget_error when cap is exhausted.
PowerApprox approx_power(const TorusSeq& omega, double eps,
                         const GeneratorSpec& spec, PExponent p,
                         std::uint64_t cap);

} // namespace tsg
