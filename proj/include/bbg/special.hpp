#ifndef BBG_SPECIAL_HPP
#define BBG_SPECIAL_HPP

#include "bbg/complex.hpp"
#include "bbg/precision.hpp"
#include "bbg/summation.hpp"

namespace bbg {

/// A special-function value with a rigorous truncation bound.
template <class T>
struct SpecialValue {
    T value;
    HPReal error_bound;
    long series_terms_used = 0;
};

/// Exponential integral Ei(t) for t > 0 via the convergent series
///   Ei(t) = gamma + log t + sum_{n>=1} t^n/(n*n!),
/// truncated when the term drops below 2^-(mantissa_bits+8). The terms are
/// eventually dominated by a geometric ratio t/(n+1) < 1/2, so twice the
/// first omitted term bounds the tail.
inline SpecialValue<HPReal> eval_Ei(const HPReal& t, const PrecisionContext& ctx) {
    if (!(t > 0L))
        throw precondition_error("eval_Ei: requires t > 0 (the series evaluation domain)");
    const Prec p = ctx.working_precision() + 16;
    const HPReal cutoff = pow2(-(ctx.mantissa_bits() + 8), p);
    HPReal th = t.round_to(p);
    CompensatedAccumulator acc(p);
    HPReal power(1L, p);  // t^n / n!
    long n = 0;
    HPReal term(p);
    do {
        ++n;
        power *= th;
        power = power / n;
        term = power / n;
        acc.add(term);
        if (n > 1000000) throw std::runtime_error("eval_Ei: series failed to converge");
    } while (term >= cutoff);
    // term_{n+1} = term_n * t * n / (n+1)^2; the ratio is below 1/2 here, so
    // twice the first omitted term bounds the tail
    HPReal first_omitted = term * th * n / (n + 1) / (n + 1);
    HPReal value = ctx.euler_gamma().round_to(p) + log(th) + acc.value();
    return {value.round_to(ctx.working_precision()),
            (first_omitted * 2L).round_to(ctx.working_precision()), n};
}

/// Logarithmic integral li(x) = Ei(log x) for x > 1.
inline SpecialValue<HPReal> eval_li(const HPReal& x, const PrecisionContext& ctx) {
    if (!(x > 1L))
        throw precondition_error("eval_li: requires x > 1 (so that log x > 0)");
    return eval_Ei(log(x.round_to(ctx.working_precision() + 16)), ctx);
}

/// Euler-Mascheroni constant at working precision (cached in the context).
inline HPReal euler_gamma(const PrecisionContext& ctx) { return ctx.euler_gamma(); }

/// Modified Bessel function of order zero,
///   I_0(z) = sum_{k>=0} (z/2)^{2k} / (k!)^2,
/// truncated when the term drops below 2^-(mantissa_bits+8); the error bound
/// comes from the ratio test (ratio (z/2)^2/(k+1)^2 < 1/2 at the cutoff).
inline SpecialValue<HPReal> bessel_I0(const HPReal& z, const PrecisionContext& ctx) {
    if (z < 0L) throw precondition_error("bessel_I0: requires z >= 0");
    const Prec p = ctx.working_precision() + 16;
    const HPReal cutoff = pow2(-(ctx.mantissa_bits() + 8), p);
    HPReal q = z.round_to(p) / 2L;
    q *= q;  // (z/2)^2
    CompensatedAccumulator acc(p);
    HPReal term(1L, p);
    acc.add(term);
    long k = 0;
    while (true) {
        ++k;
        term *= q;
        term = term / k / k;
        acc.add(term);
        if (term < cutoff) break;
        if (k > 10000000) throw std::runtime_error("bessel_I0: series failed to converge");
    }
    // first omitted term <= term * ratio; ratio <= 1/2 once the cutoff hit
    HPReal next_ratio = q / (k + 1) / (k + 1);
    HPReal bound = term * next_ratio * 2L;
    return {acc.value().round_to(ctx.working_precision()), bound.round_to(ctx.working_precision()),
            k + 1};
}

/// Polylogarithm Li_alpha(z) = sum_{n>=1} z^n/n^alpha by direct summation,
/// restricted to |z| <= 0.99 where the geometric tail bound
/// (|z|^{N+1}/(1-|z|)) * max(1, N^-alpha) is effective.
inline SpecialValue<HPComplex> polylog(const HPReal& alpha, const HPComplex& z,
                                       const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision() + 16;
    HPReal r = z.modulus().round_to(p);
    HPReal limit = HPReal(99L, p) / 100L;
    if (r > limit)
        throw precondition_error(
            "polylog: requires |z| <= 0.99 (geometric tail bound useless closer to 1)");
    const HPReal cutoff = pow2(-(ctx.mantissa_bits() + 8), p);
    HPReal one_minus_r = HPReal(1L, p) - r;

    HPComplex zp(p);
    HPReal a = alpha.round_to(p);
    const bool integer_alpha_01 = (alpha == HPReal(0L, 8)) || (alpha == HPReal(1L, 8));
    HPComplex zh(z.re.round_to(p), z.im.round_to(p));
    HPComplex power(HPReal(1L, p), HPReal(0L, p));
    CompensatedAccumulator acc_re(p), acc_im(p);
    HPReal rpow(1L, p);
    long n = 0;
    while (true) {
        ++n;
        power = power * zh;
        rpow *= r;
        HPComplex term(p);
        if (integer_alpha_01) {
            term = (alpha.is_zero()) ? power : HPComplex(power.re / n, power.im / n);
        } else {
            HPReal weight = exp(a * log(HPReal(static_cast<long>(n), p)));
            term = HPComplex(power.re / weight, power.im / weight);
        }
        acc_re.add(term.re);
        acc_im.add(term.im);
        // tail of the geometric majorant after n terms
        HPReal weight_tail = (a.sign() >= 0) ? HPReal(1L, p)
                                             : exp(-a * log(HPReal(static_cast<long>(n), p)));
        HPReal tail = rpow * r / one_minus_r * weight_tail;
        if (tail < cutoff) {
            HPComplex value(acc_re.value().round_to(ctx.working_precision()),
                            acc_im.value().round_to(ctx.working_precision()));
            return {value, tail.round_to(ctx.working_precision()), n};
        }
        if (n > 10000000) throw std::runtime_error("polylog: series failed to converge");
    }
}

}  // namespace bbg

#endif  // BBG_SPECIAL_HPP
