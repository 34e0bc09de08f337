#pragma once

#include <cstdint>
#include <map>

#include <json.hpp>

#include "tsg/angle.hpp"
#include "tsg/exponent.hpp"
#include "tsg/torus.hpp"

namespace tsg {

/// Finitely supported integer sequence chi = (n_1, n_2, ...): a character
/// of the torus sequence group acting by omega -> prod z_k^{n_k}.
/// Stored sparse; zero coefficients are never kept.
class Character {
public:
    using Map = std::map<std::size_t, std::int64_t>;   // 1-based index -> coeff

    Character() = default;
    explicit Character(Map coeffs);

    /// Set/overwrite one coefficient (0 erases). Index must be >= 1.
    void set(std::size_t index, std::int64_t coeff);
    std::int64_t coeff(std::size_t index) const;

    const Map& coeffs() const { return m_; }
    std::size_t support_size() const { return m_.size(); }
    bool is_zero() const { return m_.empty(); }
    /// Largest supported index (0 when zero).
    std::size_t max_index() const { return m_.empty() ? 0 : m_.rbegin()->first; }

    /// ell_q norm (sum |n|^q)^(1/q), q >= 1.
    double norm_q(double q) const;
    /// ell_1 norm as an exact integer.
    std::int64_t norm_one() const;
    /// sup norm max |n| as an exact integer.
    std::int64_t norm_b() const;

    bool operator==(const Character&) const = default;
    auto operator<=>(const Character&) const = default;

    nlohmann::json to_json() const;           // sparse {"index": coeff}
    static Character from_json(const nlohmann::json& j);

private:
    Map m_;
};

/// Pairing (chi, omega): canonical angle of sum n_k * phi_k.  Coordinates
/// outside omega's window are identity and contribute nothing.
Angle pair(const Character& chi, const TorusSeq& omega);

/// Re(chi(omega)) >= 0 iff the pairing phase lies in [-1/4, 1/4].
bool re_nonneg(const Character& chi, const TorusSeq& omega);

} // namespace tsg
