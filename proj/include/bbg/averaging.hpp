#ifndef BBG_AVERAGING_HPP
#define BBG_AVERAGING_HPP

#include <iostream>
#include <vector>

#include "bbg/precision.hpp"
#include "bbg/quadrature.hpp"
#include "bbg/rational.hpp"
#include "bbg/summation.hpp"
#include "bbg/types.hpp"

namespace bbg::averaging {

inline constexpr long kExactCap = 10000;

/// Exact circle average of (1 + sin(theta)/2)^n:
///   J_n = sum_{k=0}^{floor(n/2)} C(n,2k) C(2k,k) / 16^k.
inline Rational j_exact(long n) {
    if (n < 0) throw precondition_error("j_exact: requires n >= 0");
    if (n > kExactCap)
        throw precondition_error("j_exact: requires n <= " + std::to_string(kExactCap) +
                                 " (big-integer binomials stay tractable)");
    BigInt num = 0;
    BigInt p16 = BigInt(1) << (4 * (n / 2));  // 16^(n/2), the common denominator
    for (long k = 0; k <= n / 2; ++k) {
        num += binomial(n, 2 * k) * binomial(2 * k, k) * (p16 >> (4 * k));
    }
    return Rational(num, p16);
}

/// One step of the three-term recurrences
///   J_{n+1} = ((2n+1) J_n - (3n/4) J_{n-1}) / (n+1)
///   I_{n+1} = ((2/3)(2n+1) I_n - (n/3) I_{n-1}) / (n+1)
/// obtained from the Legendre recurrence applied to J_n = (sqrt3/2)^n P_n(2/sqrt3).
class AveragingRecurrence {
public:
    explicit AveragingRecurrence(Prec prec)
        : prec_(prec), i_prev_(1L, prec), i_curr_(HPReal(2L, prec) / 3L), t_(prec), n_(1) {}

    long long index() const { return n_; }          // I_n currently held
    const HPReal& current() const { return i_curr_; }

    void advance() {
        // I_{n+1} = ((2/3)(2n+1) I_n - (n/3) I_{n-1}) / (n+1)
        mpfr_mul_si(t_.raw(), i_curr_.raw(), 2 * (2 * n_ + 1), MPFR_RNDN);
        mpfr_div_ui(t_.raw(), t_.raw(), 3, MPFR_RNDN);
        mpfr_mul_si(i_prev_.raw(), i_prev_.raw(), n_, MPFR_RNDN);
        mpfr_div_ui(i_prev_.raw(), i_prev_.raw(), 3, MPFR_RNDN);
        mpfr_sub(t_.raw(), t_.raw(), i_prev_.raw(), MPFR_RNDN);
        mpfr_div_si(t_.raw(), t_.raw(), n_ + 1, MPFR_RNDN);
        mpfr_swap(i_prev_.raw(), i_curr_.raw());
        mpfr_swap(i_curr_.raw(), t_.raw());
        ++n_;
    }

private:
    Prec prec_;
    HPReal i_prev_, i_curr_, t_;
    long n_;
};

struct AveragingSequence {
    long n_max = 0;
    std::vector<HPReal> J;  // J_0 .. J_n_max
    std::vector<HPReal> I;  // I_n = (2/3)^n J_n
    bool used_exact_fallback = false;
};

/// J_0..J_n and I_0..I_n by the validated fast recurrence.
///
/// The recurrence rests on the identity J_n = (sqrt3/2)^n P_n(2/sqrt3); it is
/// validated against the exact binomial sum for n <= 100 before being
/// trusted, and falls back to the exact sum (with a diagnostic) if the
/// validation ever fails.
inline AveragingSequence j_recurrence(long n_max, const PrecisionContext& ctx) {
    if (n_max < 0) throw precondition_error("j_recurrence: requires n_max >= 0");
    const Prec p = ctx.working_precision();
    AveragingSequence seq;
    seq.n_max = n_max;
    seq.J.reserve(n_max + 1);
    seq.I.reserve(n_max + 1);

    seq.J.emplace_back(1L, p);
    if (n_max >= 1) seq.J.emplace_back(1L, p);
    HPReal t(p), u(p);
    for (long n = 1; n < n_max; ++n) {
        // J_{n+1} = ((2n+1) J_n - (3n/4) J_{n-1}) / (n+1)
        mpfr_mul_si(t.raw(), seq.J[n].raw(), 2 * n + 1, MPFR_RNDN);
        mpfr_mul_si(u.raw(), seq.J[n - 1].raw(), 3 * n, MPFR_RNDN);
        mpfr_div_2ui(u.raw(), u.raw(), 2, MPFR_RNDN);
        mpfr_sub(t.raw(), t.raw(), u.raw(), MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), n + 1, MPFR_RNDN);
        seq.J.emplace_back(t.round_to(p));
    }

    // Mandatory validation against the exact sum before the values are used.
    const HPReal tol = ctx.tolerance(8);
    bool valid = true;
    for (long n = 0; n <= std::min<long>(n_max, 100); ++n) {
        HPReal exact = to_real(j_exact(n), p + 16);
        if (abs(seq.J[n] - exact) > tol * max(HPReal(1L, p), exact)) {
            valid = false;
            break;
        }
    }
    if (!valid) {
        std::cerr << "j_recurrence: recurrence failed validation against the exact binomial sum;"
                     " falling back to exact values\n";
        seq.used_exact_fallback = true;
        if (n_max > kExactCap)
            throw std::runtime_error(
                "j_recurrence: validation failed and the exact fallback is infeasible for n_max = " +
                std::to_string(n_max));
        seq.J.clear();
        for (long n = 0; n <= n_max; ++n) seq.J.emplace_back(to_real(j_exact(n), p));
    }

    HPReal scale(1L, p);
    HPReal two_thirds = HPReal(2L, p) / 3L;
    for (long n = 0; n <= n_max; ++n) {
        seq.I.emplace_back(seq.J[n] * scale);
        scale *= two_thirds;
    }
    return seq;
}

/// Circle average I_n by trapezoidal quadrature with doubling refinement.
inline HPReal i_quadrature(long n, const PrecisionContext& ctx) {
    if (n < 0) throw precondition_error("i_quadrature: requires n >= 0");
    const Prec p = ctx.working_precision();
    if (n == 0) return HPReal(1L, p);
    long pts = 32;
    while (pts < 2 * n + 16) pts *= 2;
    HPReal third = HPReal(1L, p + 16) / 3L;
    auto f = [&](const HPReal& theta) {
        HPReal u = (sin(theta) + 2L) * third;
        return pow_si(u, n);
    };
    return periodic_mean(f, p, ctx.tolerance(16), pts);
}

struct MPartialResult {
    SeriesResult series;           // sum_{n<=N} I_n/n
    HPReal a_mid;                  // I_{N/2} * sqrt(N/2)
    HPReal a_end;                  // I_N * sqrt(N)
    HPReal fitted_constant;        // Richardson estimate of lim I_n sqrt(n)
};

/// Partial sum M_N = sum_{n=1}^N I_n/n via the recurrence, with the
/// 1/sqrt(N)-tail constant fitted from the computed I_n themselves.
/// Independent of the series' rotation angle by construction: the averaged
/// integrand has no angular argument, so M carries no alpha parameter.
inline MPartialResult m_partial_detailed(long long N, const PrecisionContext& ctx) {
    if (N < 1) throw precondition_error("m_partial: requires N >= 1");
    const Prec p = ctx.working_precision();
    AveragingRecurrence rec(p);
    ChunkedAccumulator acc(p);
    MPartialResult out{{HPReal(p), N, HPReal(p), ErrorEstimateKind::heuristic,
                        "M_N = sum I_n/n; tail estimated as 2*c/sqrt(N) with c fitted from I_n*sqrt(n)"},
                       HPReal(p), HPReal(p), HPReal(p)};
    const long long mid = N / 2;
    while (true) {
        const long long n = rec.index();
        acc.add(rec.current() / static_cast<long>(n));
        if (n == mid) out.a_mid = rec.current() * sqrt(HPReal(n, p));
        if (n == N) {
            out.a_end = rec.current() * sqrt(HPReal(n, p));
            break;
        }
        rec.advance();
    }
    // a_n = I_n sqrt(n) ~ c (1 + b/n): two-point Richardson removes the 1/n term.
    out.fitted_constant = (N >= 4) ? out.a_end * 2L - out.a_mid : out.a_end;
    out.series.value = acc.total();
    out.series.error_estimate = out.fitted_constant * 2L / sqrt(HPReal(N, p));
    return out;
}

inline SeriesResult m_partial(long long N, const PrecisionContext& ctx) {
    return m_partial_detailed(N, ctx).series;
}

/// Measured upper bound for I_n * sqrt(n) over n >= 2 (the sequence
/// decreases toward its limit; the maximum sits at the front).
inline HPReal decay_bound_constant(const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision();
    AveragingRecurrence rec(p);
    HPReal best(p);
    for (long n = 1; n <= 2000; ++n) {
        if (n >= 2) best = max(best, rec.current() * sqrt(HPReal(static_cast<long>(n), p)));
        rec.advance();
    }
    return best * (HPReal(1L, p) + ctx.tolerance(112));
}

/// Mean of log(1 - cos t) over [0, 2*pi].
///
/// The integrand has logarithmic endpoint singularities; on [0, delta] and
/// [2*pi - delta, 2*pi] (delta = 1e-3) it is replaced by the integral of the
/// expansion 2 log t - log 2 - t^2/12 - t^4/1440, the rest is quadrature.
inline HPReal log_one_minus_cos_mean(const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision() + 16;
    HPReal delta = real_from_string("0.001", p);
    HPReal two_pi = pi(p);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);

    // integral of the expansion over [0, delta]; by symmetry the
    // [2*pi - delta, 2*pi] piece is identical
    HPReal end_piece = (delta * log(delta) - delta) * 2L - delta * log(HPReal(2L, p)) -
                       pow_si(delta, 3) / 36L - pow_si(delta, 5) / 7200L;

    auto f = [&](const HPReal& t) {
        HPReal c(p);
        mpfr_cos(c.raw(), t.raw(), MPFR_RNDN);
        return log(HPReal(1L, p) - c);
    };
    HPReal interior =
        integrate_tanh_sinh(f, delta, two_pi - delta, p, pow2(-(static_cast<long>(p) - 6), p));
    return ((interior + end_piece * 2L) / two_pi).round_to(ctx.working_precision());
}

}  // namespace bbg::averaging

#endif  // BBG_AVERAGING_HPP
