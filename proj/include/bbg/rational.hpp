#ifndef BBG_RATIONAL_HPP
#define BBG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "bbg/real.hpp"

namespace bbg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

/// Round an exact big integer to nearest at the given precision.
inline HPReal to_real(const BigInt& v, Prec prec) {
    HPReal r(prec);
    if (mpfr_set_str(r.raw(), v.str().c_str(), 10, MPFR_RNDN) != 0)
        throw std::runtime_error("to_real: big-integer conversion failed");
    return r;
}

inline HPReal to_real(const Rational& v, Prec prec) {
    const Prec inner = prec + 8;
    HPReal num = to_real(boost::multiprecision::numerator(v), inner);
    HPReal den = to_real(boost::multiprecision::denominator(v), inner);
    return (num / den).round_to(prec);
}

/// Exact dyadic rational m * 2^e equal to the given finite HPReal.
inline Rational to_rational(const HPReal& x) {
    if (x.is_zero()) return Rational(0);
    if (x.is_nan() || mpfr_inf_p(x.raw()))
        throw precondition_error("to_rational: requires a finite value");
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 16, 0, x.raw(), MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    BigInt mant("0x" + digits);
    if (neg) mant = -mant;
    // value = 0.digits (base 16) * 16^e  =  mant * 2^(4*(e - len))
    long shift = 4 * (static_cast<long>(e) - static_cast<long>(digits.size()));
    Rational r(mant);
    if (shift >= 0) {
        r *= Rational(BigInt(1) << shift);
    } else {
        r /= Rational(BigInt(1) << (-shift));
    }
    return r;
}

}  // namespace bbg

#endif  // BBG_RATIONAL_HPP
