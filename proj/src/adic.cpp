#include "tsg/adic.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tsg {

BigInt rat_floor(const BigRat& x) {
    BigInt num = numerator(x), den = denominator(x);   // den > 0
    BigInt q = num / den;
    if (num < 0 && num % den != 0) --q;
    return q;
}

BigRat rat_frac(const BigRat& x) { return x - BigRat(rat_floor(x)); }

BigRat rat_dist_to_int(const BigRat& x) {
    BigRat f = rat_frac(x);
    BigRat other = 1 - f;
    return f < other ? f : other;
}

BigRat rat_canonical(const BigRat& x) {
    BigRat f = rat_frac(x);
    return f >= BigRat(1, 2) ? f - 1 : f;
}

namespace {

bool plain_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

BigRat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!plain_integer(s)) throw std::invalid_argument("not an integer");
            return BigRat(BigInt(s));
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!plain_integer(ns) || !plain_integer(ds))
            throw std::invalid_argument("not an integer");
        BigInt num(ns), den(ds);
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: expected \"p\" or \"p/q\", got \"" + s + "\"");
    }
}

GammaSeq::GammaSeq(std::vector<BigInt> base) : a_(std::move(base)) {
    if (a_.empty())
        throw std::invalid_argument("GammaSeq: base must be non-empty");
    gamma_.reserve(a_.size() + 1);
    gamma_.push_back(1);
    for (auto& ak : a_) {
        if (ak < 2)
            throw std::invalid_argument("GammaSeq: every a_k must be >= 2");
        gamma_.push_back(gamma_.back() * ak);
    }
}

GammaSeq GammaSeq::squares(std::size_t len) {
    std::vector<BigInt> b;
    b.reserve(len);
    for (std::size_t k = 1; k <= len; ++k)
        b.emplace_back(BigInt(k + 1) * BigInt(k + 1));
    return GammaSeq(std::move(b));
}

const BigInt& GammaSeq::a(std::size_t k) const {
    if (k < 1 || k > a_.size())
        throw std::invalid_argument("GammaSeq: base index out of range");
    return a_[k - 1];
}

const BigInt& GammaSeq::gamma(std::size_t n) const {
    if (n < 1 || n > gamma_.size())
        throw std::invalid_argument("GammaSeq: gamma index out of range");
    return gamma_[n - 1];
}

double GammaSeq::reciprocal_sum() const {
    double s = 0.0;
    for (auto& ak : a_) s += 1.0 / ak.convert_to<double>();
    return s;
}

nlohmann::json GammaSeq::to_json() const {
    nlohmann::json a = nlohmann::json::array(), g = nlohmann::json::array();
    for (auto& v : a_) a.push_back(v.str());
    for (auto& v : gamma_) g.push_back(v.str());
    return {{"a", a}, {"gamma", g}};
}

nlohmann::json AdicDigits::to_json() const {
    nlohmann::json d = nlohmann::json::array();
    for (auto& v : digits) d.push_back(v.str());
    return d;
}

DigitExpansion digits_of(const BigRat& x, const GammaSeq& base, std::size_t depth) {
    if (x < 0 || x >= 1)
        throw std::invalid_argument("digits_of: x must lie in [0, 1)");
    if (depth < 1 || depth > base.length())
        throw std::invalid_argument("digits_of: depth out of range");
    DigitExpansion out;
    out.digits.digits.reserve(depth);
    for (std::size_t k = 1; k <= depth; ++k) {
        BigInt d = rat_floor(x * BigRat(base.gamma(k + 1))) -
                   base.a(k) * rat_floor(x * BigRat(base.gamma(k)));
        out.digits.digits.push_back(std::move(d));
    }
    out.remainder = x - from_digits(out.digits, base);
    return out;
}

BigRat from_digits(const AdicDigits& d, const GammaSeq& base) {
    if (d.digits.size() > base.length())
        throw std::invalid_argument("from_digits: more digits than base entries");
    BigRat v = 0;
    for (std::size_t k = 1; k <= d.digits.size(); ++k) {
        const BigInt& dk = d.digits[k - 1];
        if (dk < 0 || dk >= base.a(k))
            throw std::invalid_argument("from_digits: digit out of range");
        v += BigRat(dk, base.gamma(k + 1));
    }
    return v;
}

BigRat r0_dist(const BigRat& x, const BigRat& y, const GammaSeq& base, std::size_t N) {
    if (N < 1 || N > base.length() + 1)
        throw std::invalid_argument("r0_dist: N out of range");
    BigRat best = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        BigRat d = rat_dist_to_int(BigRat(base.gamma(n)) * (x - y));
        if (d > best) best = d;
    }
    return best;
}

AdicDigits q_approx(const AdicDigits& x, const GammaSeq& base, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("q_approx: eps must be positive");
    const BigRat eps_rat(eps);            // exact binary value of the double
    const BigRat xv = from_digits(x, base);
    const std::size_t D = x.digits.size();

    for (std::size_t N = 1; N <= D + 1; ++N) {
        AdicDigits trunc;
        trunc.digits.assign(x.digits.begin(),
                            x.digits.begin() + static_cast<std::ptrdiff_t>(N - 1));
        const BigRat tv = from_digits(trunc, base);

        bool ok = tv == xv;               // exact reproduction needs no side conditions
        if (!ok) {
            ok = true;
            for (std::size_t n = N; n <= D && ok; ++n)
                ok = rat_dist_to_int(BigRat(base.gamma(n)) * xv) < eps_rat;
            if (ok && N >= 2)
                ok = BigRat(base.a(N - 1)) * eps_rat > 1;
        }
        if (ok) {
            if (!(r0_dist(xv, tv, base, base.length() + 1) < eps_rat))
                throw std::logic_error("q_approx: exact postcondition failed");
            return trunc;
        }
    }
    throw std::invalid_argument("q_approx: digit depth cannot certify any "
                                "truncation level for this eps");
}

double norm_gp(const BigRat& x, const GammaSeq& base, PExponent p, std::size_t N) {
    if (x < 0 || x >= 1)
        throw std::invalid_argument("norm_gp: x must lie in [0, 1)");
    if (N < 1 || N > base.length() + 1)
        throw std::invalid_argument("norm_gp: N out of range");
    if (!(p.is_sup() || p.p >= 1.0))
        throw std::invalid_argument("norm_gp: p must be 0 or >= 1");
    double acc = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        BigRat c = rat_canonical(BigRat(base.gamma(n)) * x);
        double term = chord(Angle(c.convert_to<double>()));
        if (p.is_sup())
            acc = std::max(acc, term);
        else
            acc += std::pow(term, p.p);
    }
    return p.is_sup() ? acc : std::pow(acc, p.outer());
}

std::vector<BigRat> embed_Sp_exact(const BigRat& x, const GammaSeq& base,
                                   std::size_t N) {
    if (x < 0 || x >= 1)
        throw std::invalid_argument("embed_Sp: x must lie in [0, 1)");
    if (N < 1 || N > base.length() + 1)
        throw std::invalid_argument("embed_Sp: N out of range");
    std::vector<BigRat> v;
    v.reserve(N);
    for (std::size_t k = 1; k <= N; ++k)
        v.push_back(rat_canonical(BigRat(base.gamma(k)) * x));
    return v;
}

TorusSeq embed_Sp(const BigRat& x, const GammaSeq& base, std::size_t N) {
    std::vector<Angle> c;
    c.reserve(N);
    for (auto& r : embed_Sp_exact(x, base, N))
        c.emplace_back(r.convert_to<double>());
    return TorusSeq(std::move(c));
}

nlohmann::json DigitChar::to_json() const {
    nlohmann::json h = nlohmann::json::array();
    for (auto& v : head) h.push_back(v.str());
    return {{"head", h},
            {"tail", tail == Tail::Zeros ? "zeros" : "max_minus_one"}};
}

DigitChar int_to_digitchar(const BigInt& n, const GammaSeq& base) {
    if (abs(n) >= base.gamma(base.length() + 1))
        throw std::invalid_argument("int_to_digitchar: |n| exceeds gamma(length+1)");
    DigitChar out;
    if (n == 0) return out;

    // mixed-radix digits of |n|
    std::vector<BigInt> w;
    BigInt rest = abs(n);
    for (std::size_t k = 1; rest != 0; ++k) {
        w.push_back(rest % base.a(k));
        rest /= base.a(k);
    }
    if (n > 0) {
        out.head = std::move(w);
        while (!out.head.empty() && out.head.back() == 0) out.head.pop_back();
        return out;
    }

    // complement representation of a negative integer: zeros up to the first
    // nonzero digit j, then a_j - w_j, then a_k - w_k - 1, tail all a_k - 1
    out.tail = DigitChar::Tail::MaxMinusOne;
    std::size_t j = 0;
    while (w[j] == 0) ++j;
    out.head.assign(w.size(), 0);
    out.head[j] = base.a(j + 1) - w[j];
    for (std::size_t k = j + 1; k < w.size(); ++k)
        out.head[k] = base.a(k + 1) - w[k] - 1;
    while (!out.head.empty() &&
           out.head.back() == base.a(out.head.size()) - 1)
        out.head.pop_back();
    return out;
}

BigInt digitchar_to_int(const DigitChar& chi, const GammaSeq& base) {
    if (chi.head.size() > base.length())
        throw std::invalid_argument("digitchar_to_int: head longer than the base");
    BigInt s = 0;
    for (std::size_t k = 1; k <= chi.head.size(); ++k) {
        const BigInt& d = chi.head[k - 1];
        if (d < 0 || d >= base.a(k))
            throw std::invalid_argument("digitchar_to_int: head digit out of range");
        s += d * base.gamma(k);
    }
    if (chi.tail == DigitChar::Tail::MaxMinusOne)
        s -= base.gamma(chi.head.size() + 1);
    return s;
}

namespace {

// Least k with gamma(k) x integral; x must be rational at the available depth.
std::size_t rational_depth(const BigRat& x, const GammaSeq& base) {
    if (x < 0 || x >= 1)
        throw std::invalid_argument("pairing: x must lie in [0, 1)");
    for (std::size_t k = 1; k <= base.length() + 1; ++k)
        if (denominator(BigRat(base.gamma(k)) * x) == 1) return k;
    throw std::invalid_argument("pairing: denominator of x does not divide any "
                                "available gamma(k)");
}

} // namespace

BigRat pair_gp_exact(const BigInt& n, const BigRat& x, const GammaSeq& base) {
    rational_depth(x, base);    // validates x
    return rat_canonical(BigRat(n) * x);
}

Angle pair_gp(const BigInt& n, const BigRat& x, const GammaSeq& base) {
    return Angle(pair_gp_exact(n, x, base).convert_to<double>());
}

BigRat digitchar_pair_exact(const DigitChar& chi, const BigRat& x,
                            const GammaSeq& base) {
    std::size_t k0 = rational_depth(x, base);
    if (chi.head.size() > base.length())
        throw std::invalid_argument("digitchar_pair_exact: head longer than the base");
    BigInt s = 0;
    for (std::size_t k = 1; k < k0; ++k) {
        BigInt digit;
        if (k <= chi.head.size())
            digit = chi.head[k - 1];
        else
            digit = chi.tail == DigitChar::Tail::MaxMinusOne ? BigInt(base.a(k) - 1)
                                                             : BigInt(0);
        s += digit * base.gamma(k);
    }
    return rat_canonical(BigRat(s) * x);
}

nlohmann::json SparseGammaChar::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [k, n] : coeffs) j[std::to_string(k)] = n.str();
    return j;
}

SparseGammaChar SparseGammaChar::from_json(const nlohmann::json& j) {
    SparseGammaChar out;
    for (auto& [key, val] : j.items()) {
        BigInt n = val.is_string() ? BigInt(val.get<std::string>())
                                   : BigInt(val.get<std::int64_t>());
        if (n != 0) out.coeffs[std::stoull(key)] = std::move(n);
    }
    return out;
}

BigInt quotient_reduce(const SparseGammaChar& chi, const GammaSeq& base) {
    BigInt s = 0;
    for (auto& [k, n] : chi.coeffs) {
        if (k < 1 || k > base.length() + 1)
            throw std::invalid_argument("quotient_reduce: index out of range");
        s += n * base.gamma(k);
    }
    return s;
}

bool annihilator_test(const SparseGammaChar& chi, const GammaSeq& base) {
    return quotient_reduce(chi, base) == 0;
}

} // namespace tsg
