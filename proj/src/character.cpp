#include "tsg/character.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tsg {

Character::Character(Map coeffs) : m_(std::move(coeffs)) {
    for (auto it = m_.begin(); it != m_.end();) {
        if (it->first < 1)
            throw std::invalid_argument("Character: indices are 1-based");
        it = it->second == 0 ? m_.erase(it) : std::next(it);
    }
}

void Character::set(std::size_t index, std::int64_t coeff) {
    if (index < 1)
        throw std::invalid_argument("Character: indices are 1-based");
    if (coeff == 0)
        m_.erase(index);
    else
        m_[index] = coeff;
}

std::int64_t Character::coeff(std::size_t index) const {
    auto it = m_.find(index);
    return it == m_.end() ? 0 : it->second;
}

double Character::norm_q(double q) const {
    if (!(q >= 1.0))
        throw std::invalid_argument("Character::norm_q: q must be >= 1");
    double s = 0.0;
    for (auto& [i, n] : m_) s += std::pow(std::abs(static_cast<double>(n)), q);
    return std::pow(s, 1.0 / q);
}

std::int64_t Character::norm_one() const {
    std::int64_t s = 0;
    for (auto& [i, n] : m_) s += std::abs(n);
    return s;
}

std::int64_t Character::norm_b() const {
    std::int64_t m = 0;
    for (auto& [i, n] : m_) m = std::max(m, std::abs(n));
    return m;
}

nlohmann::json Character::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [i, n] : m_) j[std::to_string(i)] = n;
    return j;
}

Character Character::from_json(const nlohmann::json& j) {
    Map m;
    for (auto& [key, val] : j.items()) {
        std::size_t idx = std::stoull(key);
        std::int64_t n = val.get<std::int64_t>();
        if (n != 0) m[idx] = n;
    }
    return Character(std::move(m));
}

Angle pair(const Character& chi, const TorusSeq& omega) {
    double t = 0.0;
    for (auto& [i, n] : chi.coeffs())
        t += static_cast<double>(n) * omega.at(i).value;
    return Angle(t);
}

bool re_nonneg(const Character& chi, const TorusSeq& omega) {
    double ph = pair(chi, omega).value;
    return ph >= -0.25 && ph <= 0.25;
}

} // namespace tsg
