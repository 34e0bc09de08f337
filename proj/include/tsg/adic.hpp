#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "tsg/angle.hpp"
#include "tsg/exponent.hpp"
#include "tsg/torus.hpp"

namespace tsg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// floor/frac for exact rationals (denominators are kept positive by
/// cpp_rational's normalization).
BigInt rat_floor(const BigRat& x);
BigRat rat_frac(const BigRat& x);
/// Distance to the nearest integer, in [0, 1/2].
BigRat rat_dist_to_int(const BigRat& x);
/// Canonical representative of x mod 1 in [-1/2, 1/2).
BigRat rat_canonical(const BigRat& x);
/// Parse "p/q", "p", or a decimal-free integer string into a rational.
BigRat rat_parse(const std::string& s);

/// Scale sequence of an a-adic group: gamma(1) = 1,
/// gamma(n+1) = a_1 ... a_n, all exact integers, every a_k >= 2.
class GammaSeq {
public:
    explicit GammaSeq(std::vector<BigInt> base);
    /// Default desk-scale test base a_k = (k+1)^2.
    static GammaSeq squares(std::size_t len);

    std::size_t length() const { return a_.size(); }
    const BigInt& a(std::size_t k) const;          // 1-based, k <= length
    const BigInt& gamma(std::size_t n) const;      // 1-based, n <= length+1
    double reciprocal_sum() const;                 // sum 1/a_k (diagnostic)

    nlohmann::json to_json() const;                // decimal strings

private:
    std::vector<BigInt> a_;
    std::vector<BigInt> gamma_;
};

/// Digit string: digit k satisfies 0 <= digits[k-1] < a_k.
struct AdicDigits {
    std::vector<BigInt> digits;

    nlohmann::json to_json() const;
};

/// Result of a depth-limited expansion: x = value(digits) + remainder,
/// with 0 <= remainder < 1/gamma(depth+1).
struct DigitExpansion {
    AdicDigits digits;
    BigRat remainder;
    bool exact() const { return remainder == 0; }
};

/// Digits of x in [0, 1): digit_k = floor(x gamma(k+1)) - a_k floor(x gamma(k)).
DigitExpansion digits_of(const BigRat& x, const GammaSeq& base, std::size_t depth);

/// Exact value sum digit_k / gamma(k+1).
BigRat from_digits(const AdicDigits& d, const GammaSeq& base);

/// Exact metric r0(x, y) = sup_{n <= N} <gamma(n) (x - y)>.
BigRat r0_dist(const BigRat& x, const BigRat& y, const GammaSeq& base, std::size_t N);

/// Truncation x_N with r0(x, x_N) < eps, N selected by the approximation
/// rule: either the truncation reproduces x exactly, or
/// <gamma(n) x> < eps for all n >= N and a_{N-1} > 1/eps.  The postcondition
/// is re-verified in exact rational arithmetic before returning.
/// Throws invalid_argument when the digit depth cannot certify any N.
AdicDigits q_approx(const AdicDigits& x, const GammaSeq& base, double eps);

/// Group norm ||x||_p over the first N scale rows: the p-combination of
/// chord(<gamma(n) x>) values (sup when p = 0).  Exact reductions mod 1,
/// so huge gamma(n) lose no precision.
double norm_gp(const BigRat& x, const GammaSeq& base, PExponent p, std::size_t N);

/// Embedding into the torus sequence group: coordinate k is gamma(k) x mod 1.
TorusSeq embed_Sp(const BigRat& x, const GammaSeq& base, std::size_t N);
std::vector<BigRat> embed_Sp_exact(const BigRat& x, const GammaSeq& base,
                                   std::size_t N);

/// Character of the adic group written in digit form: finitely many stored
/// head digits, then a constant tail (all zeros for nonnegative integers,
/// all a_k - 1 for negative ones).
struct DigitChar {
    enum class Tail { Zeros, MaxMinusOne };

    std::vector<BigInt> head;
    Tail tail = Tail::Zeros;

    nlohmann::json to_json() const;
};

/// Digit representation of the integer character n, |n| < gamma(length+1).
/// Negative n uses the carry-correct complement (the textbook rule
/// (a_1 - w_1, a_2 - w_2 - 1, ...) generalized to a zero first digit).
DigitChar int_to_digitchar(const BigInt& n, const GammaSeq& base);
BigInt digitchar_to_int(const DigitChar& chi, const GammaSeq& base);

/// Pairing of the integer character n with x in Q = {j / gamma(k)}:
/// the canonical phase of n x.  Exact rational phase plus an Angle view.
BigRat pair_gp_exact(const BigInt& n, const BigRat& x, const GammaSeq& base);
Angle pair_gp(const BigInt& n, const BigRat& x, const GammaSeq& base);

/// Same pairing evaluated through the digit representation: only digits at
/// positions k with gamma(k) x not integral contribute.
BigRat digitchar_pair_exact(const DigitChar& chi, const BigRat& x,
                            const GammaSeq& base);

/// Finitely supported character sum n_k gamma(k) of the discrete quotient
/// story; index k is 1-based and at most length+1.
struct SparseGammaChar {
    std::map<std::size_t, BigInt> coeffs;

    nlohmann::json to_json() const;
    static SparseGammaChar from_json(const nlohmann::json& j);
};

/// Exact integer sum n_k gamma(k).
BigInt quotient_reduce(const SparseGammaChar& chi, const GammaSeq& base);
/// True iff the sum vanishes (the character annihilates the embedded copy).
bool annihilator_test(const SparseGammaChar& chi, const GammaSeq& base);

} // namespace tsg
