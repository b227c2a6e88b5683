#ifndef BBG_FOURIER_HPP
#define BBG_FOURIER_HPP

#include <string>
#include <vector>

#include "bbg/averaging.hpp"
#include "bbg/complex.hpp"
#include "bbg/precision.hpp"
#include "bbg/quadrature.hpp"
#include "bbg/rational.hpp"
#include "bbg/reduction.hpp"
#include "bbg/summation.hpp"
#include "bbg/types.hpp"

namespace bbg::fourier {

inline constexpr long kCoefficientCap = 2000;

/// Exact Gaussian-rational Fourier coefficient of (1 + sin(theta)/2)^n:
/// value = (re_num + i*im_num) / denom with denom = 4^n.
///
/// Real for even k, purely imaginary for odd k; zero for k > n.
struct HarmonicCoefficient {
    long k = 0;
    long n = 0;
    BigInt re_num;
    BigInt im_num;
    BigInt denom;

    bool is_zero() const { return re_num == 0 && im_num == 0; }

    HPComplex to_complex(Prec prec) const {
        const Prec inner = prec + 8;
        HPReal d = to_real(denom, inner);
        return {(to_real(re_num, inner) / d).round_to(prec),
                (to_real(im_num, inner) / d).round_to(prec)};
    }

    /// |c|^2 <= bound^2, decided exactly on the rational representation.
    bool abs_within(const Rational& bound) const {
        BigInt p = boost::multiprecision::numerator(bound);
        BigInt q = boost::multiprecision::denominator(bound);
        return (re_num * re_num + im_num * im_num) * q * q <= p * p * denom * denom;
    }
};

/// Exact c_k(n) by binomial expansion: the e^{ik theta} coefficient of
/// sin^j(theta) is (2i)^{-j} (-1)^{(j-k)/2} C(j, (j+k)/2) for j = k (mod 2),
/// j >= k; summing C(n,j) 2^{-j} of those over j gives c_k(n) over 4^n.
inline HarmonicCoefficient fourier_coefficient(long k, long n) {
    if (k < 0) throw precondition_error("fourier_coefficient: requires k >= 0");
    if (n < 1) throw precondition_error("fourier_coefficient: requires n >= 1");
    if (n > kCoefficientCap)
        throw precondition_error("fourier_coefficient: requires n <= " +
                                 std::to_string(kCoefficientCap) + " (big-integer cost)");
    HarmonicCoefficient c;
    c.k = k;
    c.n = n;
    c.denom = BigInt(1) << (2 * n);
    c.re_num = 0;
    c.im_num = 0;
    if (k > n) return c;  // degree bound

    BigInt b_nj = binomial(n, k);        // C(n, j)
    BigInt b_jm = 1;                     // C(j, (j+k)/2), starts at C(k, k)
    BigInt p4 = BigInt(1) << (2 * (n - k));  // 4^(n-j)
    bool negate = false;                 // (-1)^{(j-k)/2}
    for (long j = k; j <= n; j += 2) {
        BigInt term = b_nj * b_jm * p4;
        if (negate) term = -term;
        switch (j & 3) {  // multiply by (-i)^j
            case 0: c.re_num += term; break;
            case 1: c.im_num -= term; break;
            case 2: c.re_num -= term; break;
            default: c.im_num += term; break;
        }
        if (j + 2 > n) break;
        // C(n, j+2) = C(n, j) (n-j)(n-j-1) / ((j+1)(j+2))
        b_nj *= BigInt(n - j) * (n - j - 1);
        b_nj /= BigInt(j + 1) * (j + 2);
        // C(j+2, m+1) = C(j, m) (j+1)(j+2) / ((m+1)(j+1-m)),  m = (j+k)/2
        const long m = (j + k) / 2;
        b_jm *= BigInt(j + 1) * (j + 2);
        b_jm /= BigInt(m + 1) * (j + 1 - m);
        p4 >>= 4;
        negate = !negate;
    }
    return c;
}

/// Quadrature oracle for c_k(n): P-point trapezoid of the defining integral,
/// exact (up to rounding) once P exceeds the integrand's trigonometric degree.
inline HPComplex fourier_coefficient_quadrature(long k, long n, const PrecisionContext& ctx) {
    if (k < 0 || n < 1) throw precondition_error("fourier_coefficient_quadrature: requires k >= 0, n >= 1");
    const Prec p = ctx.working_precision() + 16;
    const long P = n + k + 8;
    HPReal two_pi = pi(p);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);
    CompensatedAccumulator re(p), im(p);
    HPReal half(1L, p);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);
    for (long j = 0; j < P; ++j) {
        HPReal theta = two_pi * j / P;
        HPReal base = HPReal(1L, p) + sin(theta) * half;
        HPReal v = pow_si(base, n);
        HPReal phase = theta * (-k);
        HPComplex u = unit_phase(phase);
        re.add(v * u.re);
        im.add(v * u.im);
    }
    return {(re.value() / P).round_to(ctx.working_precision()),
            (im.value() / P).round_to(ctx.working_precision())};
}

/// Evaluate J_n + sum_{k=1}^n 2 Re[c_k(n) e^{ik theta}] from the exact
/// coefficients; equals (1 + sin(theta)/2)^n up to rounding.
inline HPReal reconstruct_pointwise(long n, const HPReal& theta, const PrecisionContext& ctx) {
    if (n < 1 || n > kCoefficientCap)
        throw precondition_error("reconstruct_pointwise: requires 1 <= n <= " +
                                 std::to_string(kCoefficientCap));
    const Prec p = ctx.working_precision() + 16;
    HPComplex rot = unit_phase(theta.round_to(p));  // e^{i theta}
    HPComplex phase = rot;                          // e^{ik theta}
    CompensatedAccumulator acc(p);
    acc.add(to_real(averaging::j_exact(std::min(n, averaging::kExactCap)), p));
    for (long k = 1; k <= n; ++k) {
        HPComplex c = fourier_coefficient(k, n).to_complex(p);
        acc.add((c.re * phase.re - c.im * phase.im) * 2L);
        phase = phase * rot;
    }
    return acc.value().round_to(ctx.working_precision());
}

/// Truncated generating-function / Dirichlet-type value with a tail bound.
struct HarmonicSeriesValue {
    long k = 0;
    HPComplex argument;
    long truncation_N = 0;
    HPComplex value;
    HPReal tail_bound;
};

namespace detail {

/// Tail bound sum_{n>N} |c_k(n)| |z|^n / n^s <= c_b * q^{N+1} * N^{1/2-s}/(s-1/2)
/// with q = (3/2)|z| <= 1, using |c_k(n)| <= J_n and the measured decay
/// I_n <= c_b / sqrt(n).
inline HPReal tail_bound(const HPReal& abs_z, const HPReal& s, long N, const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision();
    HPReal c_b = averaging::decay_bound_constant(ctx);
    HPReal q = abs_z * 3L / 2L;
    if (q > 1L) q = HPReal(1L, p);
    HPReal nn(static_cast<long>(std::max(N, 1L)), p);
    HPReal half(1L, p);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);
    return c_b * pow(q, HPReal(static_cast<long>(N + 1), p)) * pow(nn, half - s) / (s - half);
}

}  // namespace detail

/// G_k(z) = sum_{n=1}^infty c_k(n) z^n / n truncated at N.
/// The series has radius of convergence 2/3 (|c_k(n)| grows like J_n), so
/// arguments beyond |z| = 2/3 + 1e-9 are rejected.
inline HarmonicSeriesValue g_k_value(long k, const HPComplex& z, long N, const PrecisionContext& ctx) {
    if (k < 1) throw precondition_error("g_k_value: requires k >= 1");
    if (N < 0 || N > kCoefficientCap)
        throw precondition_error("g_k_value: requires 0 <= N <= " + std::to_string(kCoefficientCap));
    const Prec p = ctx.working_precision() + 16;
    HPReal r = z.modulus();
    HPReal limit = HPReal(2L, p) / 3L + pow2(-30, p);  // 2/3 + ~1e-9
    if (r > limit)
        throw precondition_error("g_k_value: requires |z| <= 2/3 + 1e-9 (series diverges beyond)");

    HarmonicSeriesValue out;
    out.k = k;
    out.argument = z;
    out.truncation_N = N;
    out.value = HPComplex(ctx.working_precision());
    CompensatedAccumulator re(p), im(p);
    if (N >= k) {
        HPComplex zh(z.re.round_to(p), z.im.round_to(p));
        HPComplex zp(HPReal(1L, p), HPReal(0L, p));
        for (long i = 0; i < k; ++i) zp = zp * zh;
        for (long n = k; n <= N; ++n) {
            HPComplex c = fourier_coefficient(k, n).to_complex(p);
            HPComplex t = c * zp / static_cast<long>(n);
            re.add(t.re);
            im.add(t.im);
            zp = zp * zh;
        }
        out.value = HPComplex(re.value().round_to(ctx.working_precision()),
                              im.value().round_to(ctx.working_precision()));
    }
    out.tail_bound = detail::tail_bound(r.round_to(p), HPReal(1L, p), std::max(N, k), ctx);
    return out;
}

/// H_k(s) = sum_{n} c_k(n) n^{-s} w_k^n with w_k = (2/3) e^{ik}.
/// Terms decay like n^{-s-1/2}; s <= 1/2 is rejected (natural boundary).
inline HarmonicSeriesValue h_k_value(long k, const HPReal& s, long N, const PrecisionContext& ctx) {
    if (k < 1) throw precondition_error("h_k_value: requires k >= 1");
    if (N < 0 || N > kCoefficientCap)
        throw precondition_error("h_k_value: requires 0 <= N <= " + std::to_string(kCoefficientCap));
    HPReal half(1L, 8);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);
    if (!(s > half))
        throw precondition_error("h_k_value: requires s > 1/2 (abscissa of absolute convergence)");

    const Prec p = ctx.working_precision() + 16;
    HPComplex w = unit_phase(HPReal(k, p)) * (HPReal(2L, p) / 3L);
    HarmonicSeriesValue out;
    out.k = k;
    out.argument = w;
    out.truncation_N = N;
    out.value = HPComplex(ctx.working_precision());
    const bool s_is_one = (s == HPReal(1L, 8));
    HPReal sh = s.round_to(p);
    CompensatedAccumulator re(p), im(p);
    if (N >= k) {
        HPComplex wp(HPReal(1L, p), HPReal(0L, p));
        for (long i = 0; i < k; ++i) wp = wp * w;
        for (long n = k; n <= N; ++n) {
            HPComplex c = fourier_coefficient(k, n).to_complex(p);
            HPComplex t = c * wp;
            if (s_is_one) {
                t = t / static_cast<long>(n);
            } else {
                HPReal weight = exp(sh * log(HPReal(n, p)));
                t = HPComplex(t.re / weight, t.im / weight);
            }
            re.add(t.re);
            im.add(t.im);
            wp = wp * w;
        }
        out.value = HPComplex(re.value().round_to(ctx.working_precision()),
                              im.value().round_to(ctx.working_precision()));
    }
    out.tail_bound = detail::tail_bound(HPReal(2L, p) / 3L, sh, std::max(N, k), ctx);
    return out;
}

struct HarmonicContribution {
    long k = 0;
    HPReal contribution;   // 2 Re[G_k((2/3) e^{ik})] truncated at N
    HPReal running_total;
    HPReal tail_bound;     // per-k truncation tail bound
};

struct HarmonicSumReport {
    SeriesResult total;
    std::vector<HarmonicContribution> per_k;
};

/// Remainder as a sum of Fourier harmonics:
///   sum_{k=1}^{K} 2 Re[G_k((2/3) e^{ik})], each G_k truncated at N.
inline HarmonicSumReport harmonic_sum_r(long K, long N, const PrecisionContext& ctx) {
    if (K < 0 || N < K)
        throw precondition_error("harmonic_sum_r: requires 0 <= K <= N");
    const Prec p = ctx.working_precision();
    HarmonicSumReport rep;
    CompensatedAccumulator acc(p);
    HPReal tail_sum(p);
    for (long k = 1; k <= K; ++k) {
        HarmonicSeriesValue h = h_k_value(k, HPReal(1L, p), N, ctx);
        HarmonicContribution row;
        row.k = k;
        row.contribution = h.value.re * 2L;
        acc.add(row.contribution);
        row.running_total = acc.value();
        row.tail_bound = h.tail_bound * 2L;
        tail_sum += row.tail_bound;
        rep.per_k.push_back(std::move(row));
    }
    rep.total = {acc.value(), N, tail_sum, ErrorEstimateKind::heuristic,
                 "sum_{k<=K} 2 Re[G_k((2/3)e^{ik})]; estimate covers only the n>N tails, not k>K"};
    rep.total.truncation_index = K;
    return rep;
}

/// Dirichlet series Phi(s) = sum_n (2/3)^n n^{-s} [(1+sin(n)/2)^n - J_n]
/// by direct summation to N, with a heuristic last-decade tail estimate.
inline SeriesResult phi_value(const HPReal& s, long long N, const PrecisionContext& ctx) {
    // s = 1 is admitted as the boundary case: Phi(1) is the remainder series R.
    if (!(s >= 1L)) throw precondition_error("phi_value: requires s >= 1 (direct-summation regime)");
    if (N < 1) throw precondition_error("phi_value: requires N >= 1");
    const Prec p = ctx.working_precision();
    const Prec ip = p + 16;
    HPReal sh = s.round_to(ip);
    const bool s_int = mpfr_integer_p(sh.raw()) != 0;
    const long s_long = s_int ? sh.to_long() : 0;

    SinCosStream stream(1, N, SinCosStream::kDefaultResync, ctx);
    averaging::AveragingRecurrence rec(ip);
    ChunkedAccumulator acc(p);
    HPReal third(1L, ip);
    mpfr_div_ui(third.raw(), third.raw(), 3, MPFR_RNDN);
    HPReal at_decade(p);
    long long n;
    HPReal sn, cn;
    HPReal t(ip), weight(ip);
    while (stream.next(n, sn, cn)) {
        // ((2+sin n)/3)^n = exp(n log((2+sin n)/3))
        mpfr_add_ui(t.raw(), sn.raw(), 2, MPFR_RNDN);
        mpfr_mul(t.raw(), t.raw(), third.raw(), MPFR_RNDN);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul_si(t.raw(), t.raw(), static_cast<long>(n), MPFR_RNDN);
        mpfr_exp(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_sub(t.raw(), t.raw(), rec.current().raw(), MPFR_RNDN);
        if (s_int) {
            for (long rep = 0; rep < s_long; ++rep) mpfr_div_si(t.raw(), t.raw(), static_cast<long>(n), MPFR_RNDN);
        } else {
            weight = exp(sh * log(HPReal(n, ip)));
            mpfr_div(t.raw(), t.raw(), weight.raw(), MPFR_RNDN);
        }
        acc.add(t.round_to(p));
        if (n == N / 10) at_decade = acc.total();
        if (n < N) rec.advance();
    }
    HPReal value = acc.total();
    HPReal est = (N >= 10) ? abs(value - at_decade) : abs(value);
    return {value, N, est, ErrorEstimateKind::heuristic,
            "Phi(s) direct sum; estimate = change over the last decade of partial sums"};
}

struct C1TrendRow {
    long n = 0;
    HPReal im_over_n;   // Im c_1(n) / n
    HPReal im_over_jn;  // Im c_1(n) / J_n
};

/// Measured normalizations of Im c_1(n); both ratios are reported, neither
/// limit is asserted.
inline std::vector<C1TrendRow> c1_trend(const std::vector<long>& ns, const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision();
    std::vector<C1TrendRow> rows;
    for (long n : ns) {
        HarmonicCoefficient c = fourier_coefficient(1, n);
        HPComplex v = c.to_complex(p);
        HPReal jn = to_real(averaging::j_exact(n), p);
        rows.push_back({n, v.im / n, v.im / jn});
    }
    return rows;
}

}  // namespace bbg::fourier

#endif  // BBG_FOURIER_HPP
