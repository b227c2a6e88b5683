#ifndef BBG_DIOPHANTINE_HPP
#define BBG_DIOPHANTINE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "bbg/precision.hpp"
#include "bbg/rational.hpp"
#include "bbg/reduction.hpp"
#include "bbg/summation.hpp"

namespace bbg::diophantine {

/// Continued fraction x = [a_0; a_1, a_2, ...] with convergents p_j/q_j.
/// partial_quotients[0] is a_0 (zero for inputs in (0,1)); convergents[j]
/// is (p_j, q_j) starting from (a_0, 1), so the denominator recurrence is
/// q_{j+1} = a_{j+1} q_j + q_{j-1} with q_0 = 1.
struct ContinuedFraction {
    std::vector<long long> partial_quotients;
    std::vector<std::pair<BigInt, BigInt>> convergents;
    bool terminated = false;   // input is rational and fully expanded
    bool exhausted = false;    // certification stopped before the requested depth
    long certified_depth = 0;  // count of certified quotients past a_0
};

namespace detail {

inline void push_convergent(ContinuedFraction& cf, long long a) {
    BigInt pm1 = 1, qm1 = 0;  // p_{j-1}, q_{j-1}
    BigInt pm2 = 0, qm2 = 1;  // p_{j-2}, q_{j-2}
    const size_t m = cf.convergents.size();
    if (m >= 1) {
        pm1 = cf.convergents[m - 1].first;
        qm1 = cf.convergents[m - 1].second;
    }
    if (m >= 2) {
        pm2 = cf.convergents[m - 2].first;
        qm2 = cf.convergents[m - 2].second;
    } else if (m == 1) {
        pm2 = 1;
        qm2 = 0;
    }
    cf.convergents.emplace_back(a * pm1 + pm2, a * qm1 + qm2);
}

}  // namespace detail

/// Certified continued-fraction expansion of x in (0,1).
///
/// x is taken as the exact dyadic rational it stores; error_bound (when
/// nonzero) widens it to an interval and only quotients shared by the whole
/// interval are emitted. Certification stopping short of `depth` is reported
/// via `exhausted` and `certified_depth` rather than guessed through.
inline ContinuedFraction cf_expand(const HPReal& x, long depth, const PrecisionContext& ctx,
                                   const std::optional<HPReal>& error_bound = std::nullopt) {
    (void)ctx;
    if (!(x > 0L) || !(x < 1L))
        throw precondition_error("cf_expand: requires x in (0,1)");
    if (depth < 1) throw precondition_error("cf_expand: requires depth >= 1");

    Rational mid = to_rational(x);
    Rational err(0);
    if (error_bound && !error_bound->is_zero()) {
        if (error_bound->is_negative())
            throw precondition_error("cf_expand: error_bound must be >= 0");
        err = to_rational(*error_bound);
    }
    Rational lo = mid - err;
    Rational hi = mid + err;
    if (lo <= 0)
        throw precondition_error("cf_expand: error_bound reaches 0; no quotient is certifiable");

    ContinuedFraction cf;
    cf.partial_quotients.push_back(0);  // a_0 for x in (0,1)
    detail::push_convergent(cf, 0);

    for (long j = 0; j < depth; ++j) {
        if (lo == 0 || hi == 0) {
            // exact termination is certified only when both endpoints agree
            cf.terminated = (lo == hi);
            cf.exhausted = !cf.terminated;
            return cf;
        }
        lo = 1 / lo;
        hi = 1 / hi;
        std::swap(lo, hi);  // inversion reverses the order
        BigInt a_lo = boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo);
        BigInt a_hi = boost::multiprecision::numerator(hi) / boost::multiprecision::denominator(hi);
        if (a_lo != a_hi || a_lo > (BigInt(1) << 62)) {
            cf.exhausted = true;
            return cf;
        }
        long long a = a_lo.convert_to<long long>();
        cf.partial_quotients.push_back(a);
        detail::push_convergent(cf, a);
        ++cf.certified_depth;
        lo -= Rational(a_lo);
        hi -= Rational(a_lo);
    }
    if (lo == hi && lo == 0) cf.terminated = true;
    return cf;
}

/// Expansion of 1/(2*pi) computed at the context's extended precision,
/// with the rounding of the division carried as the certification interval.
inline ContinuedFraction cf_inv_two_pi(long depth, const PrecisionContext& ctx) {
    const Prec p = ctx.pi_precision();
    HPReal x = 1L / ctx.two_pi_ext();
    HPReal err = pow2(-static_cast<long>(p) + 2, p);
    return cf_expand(x, depth, ctx, err);
}

/// Per-index data for a wild integer (sin n > 1 - delta).
struct WildRecord {
    long long n = 0;
    HPReal sin_n;
    HPReal epsilon;    // 1 - sin n
    HPReal theta_dev;  // {n/(2*pi)} - 1/4 wrapped into (-1/2, 1/2]
    HPReal f_exact;    // (1/n)((2+sin n)/3)^n
    HPReal f_saddle;   // (1/n) exp(-n epsilon / 3)
    HPReal rel_error;  // |f_saddle - f_exact| / f_exact
};

/// All wild integers up to n_max for the threshold delta.
/// delta up to 2 is accepted; at delta = 2 every index qualifies since
/// sin n = -1 is impossible for integer n.
inline std::vector<WildRecord> wild_enumerate(const HPReal& delta, long long n_max,
                                              const PrecisionContext& ctx) {
    if (!(delta > 0L) || delta > 2L)
        throw precondition_error("wild_enumerate: requires delta in (0, 2]");
    if (n_max < 1 || n_max > ctx.max_index_hint())
        throw precondition_error("wild_enumerate: requires 1 <= n_max <= max_index_hint");
    const Prec p = ctx.working_precision();
    const Prec ip = p + 16;
    HPReal threshold = HPReal(1L, ip) - delta.round_to(ip);
    HPReal third = HPReal(1L, ip) / 3L;
    HPReal quarter(1L, ip);
    mpfr_div_2ui(quarter.raw(), quarter.raw(), 2, MPFR_RNDN);
    HPReal half(1L, ip);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);

    std::vector<WildRecord> out;
    SinCosStream stream(1, n_max, SinCosStream::kDefaultResync, ctx);
    long long n;
    HPReal sn, cn;
    while (stream.next(n, sn, cn)) {
        if (!(sn > threshold)) continue;
        WildRecord w;
        w.n = n;
        w.sin_n = sn;
        w.epsilon = (HPReal(1L, ip) - sn).round_to(p);
        HPReal frac = reduce_mod_2pi(n, ctx).frac;
        HPReal dev = frac.round_to(ip) - quarter;
        if (dev > half) dev -= 1L * HPReal(1L, ip);
        w.theta_dev = dev.round_to(p);
        HPReal lg = log((sn.round_to(ip) + 2L) * third);
        w.f_exact = (exp(lg * static_cast<long>(n)) / static_cast<long>(n)).round_to(p);
        w.f_saddle =
            (exp(w.epsilon.round_to(ip) * static_cast<long>(-n) / 3L) / static_cast<long>(n)).round_to(p);
        w.rel_error = (abs(w.f_saddle - w.f_exact) / w.f_exact).round_to(p);
        out.push_back(std::move(w));
    }
    return out;
}

struct SaddleBucket {
    double epsilon_threshold = 0;
    long long count = 0;
    bool present = false;  // statistics are absent, not zero, for empty buckets
    HPReal max_rel_error;
    HPReal mean_rel_error;
};

struct SaddleAudit {
    std::vector<WildRecord> records;
    SaddleBucket tight;  // epsilon < 1e-3
    SaddleBucket loose;  // epsilon < 1e-2
};

/// Max/mean relative error of the saddle approximation, bucketed by the
/// epsilon thresholds 1e-3 and 1e-2.
inline SaddleAudit saddle_error_audit(const HPReal& delta, long long n_max,
                                      const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision();
    SaddleAudit audit;
    audit.records = wild_enumerate(delta, n_max, ctx);
    audit.tight.epsilon_threshold = 1e-3;
    audit.loose.epsilon_threshold = 1e-2;
    HPReal t_tight = real_from_string("0.001", p);
    HPReal t_loose = real_from_string("0.01", p);
    CompensatedAccumulator sum_tight(p), sum_loose(p);
    audit.tight.max_rel_error = HPReal(p);
    audit.loose.max_rel_error = HPReal(p);
    audit.tight.mean_rel_error = HPReal(p);
    audit.loose.mean_rel_error = HPReal(p);
    for (const WildRecord& w : audit.records) {
        if (w.epsilon < t_tight) {
            audit.tight.present = true;
            ++audit.tight.count;
            sum_tight.add(w.rel_error);
            audit.tight.max_rel_error = max(audit.tight.max_rel_error, w.rel_error);
        }
        if (w.epsilon < t_loose) {
            audit.loose.present = true;
            ++audit.loose.count;
            sum_loose.add(w.rel_error);
            audit.loose.max_rel_error = max(audit.loose.max_rel_error, w.rel_error);
        }
    }
    if (audit.tight.count > 0) audit.tight.mean_rel_error = sum_tight.value() / audit.tight.count;
    if (audit.loose.count > 0) audit.loose.mean_rel_error = sum_loose.value() / audit.loose.count;
    return audit;
}

namespace detail {

inline std::vector<HPReal> orbit_sorted(long long N, const PrecisionContext& ctx) {
    std::vector<HPReal> xs;
    xs.reserve(static_cast<size_t>(N));
    for (long long n = 1; n <= N; ++n) xs.push_back(reduce_mod_2pi(n, ctx).frac);
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace detail

/// Exact star-discrepancy of {n/(2*pi)}, n = 1..N, via the sorted-points
/// formula D* = max_i max(x_(i) - (i-1)/N, i/N - x_(i)).
inline HPReal star_discrepancy(long long N, const PrecisionContext& ctx) {
    if (N < 1 || N > 1000000)
        throw precondition_error("star_discrepancy: requires 1 <= N <= 10^6 (sorting cost)");
    const Prec p = ctx.working_precision();
    std::vector<HPReal> xs = detail::orbit_sorted(N, ctx);
    HPReal best(p);
    for (long long i = 1; i <= N; ++i) {
        const HPReal& x = xs[static_cast<size_t>(i - 1)];
        best = max(best, x - HPReal(i - 1, p) / static_cast<long>(N));
        best = max(best, HPReal(i, p) / static_cast<long>(N) - x);
    }
    return best;
}

struct ErdosTuranBound {
    long long H_evaluated = 0;
    HPReal bound_at_H;
    long long optimal_H = 0;
    HPReal bound_at_optimal_H;
};

/// Explicit Erdos-Turan bound with the constant fixed at C = 3:
///   D*(N) <= 3 (1/H + (1/N) sum_{h<=H} (1/h) min(N, 1/|sin(h/2)|)),
/// evaluated at H and minimized over the scan range {1..H}.
inline ErdosTuranBound erdos_turan_bound(long long N, long long H, const PrecisionContext& ctx) {
    if (N < 1 || H < 1) throw precondition_error("erdos_turan_bound: requires N >= 1 and H >= 1");
    const Prec p = ctx.working_precision();
    ErdosTuranBound out;
    out.H_evaluated = H;
    CompensatedAccumulator sum(p);
    HPReal big_n(N, p);
    HPReal best(p);
    HPReal half(1L, p);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);
    for (long long h = 1; h <= H; ++h) {
        HPReal s = abs(sin(HPReal(h, p) * half));
        HPReal w = min(big_n, 1L / s) / static_cast<long>(h);
        sum.add(w);
        HPReal candidate = (HPReal(1L, p) / static_cast<long>(h) + sum.value() / big_n) * 3L;
        if (out.optimal_H == 0 || candidate < best) {
            best = candidate;
            out.optimal_H = h;
        }
        if (h == H) out.bound_at_H = candidate;
    }
    out.bound_at_optimal_H = best;
    return out;
}

struct GapStatistics {
    std::vector<HPReal> gap_lengths;       // distinct circular gaps, ascending
    std::vector<long long> multiplicities;
};

/// Circular gap lengths of the sorted orbit {x_n : n <= N}; gaps equal
/// within 2^-(mantissa_bits-16) are merged (they are rounding images of a
/// common exact gap).
inline GapStatistics three_distance_gaps(long long N, const PrecisionContext& ctx) {
    if (N < 2) throw precondition_error("three_distance_gaps: requires N >= 2");
    const Prec p = ctx.working_precision();
    std::vector<HPReal> xs = detail::orbit_sorted(N, ctx);
    std::vector<HPReal> gaps;
    gaps.reserve(static_cast<size_t>(N));
    for (size_t i = 1; i < xs.size(); ++i) gaps.push_back(xs[i] - xs[i - 1]);
    gaps.push_back(HPReal(1L, p) - xs.back() + xs.front());
    std::sort(gaps.begin(), gaps.end());
    const HPReal tol = ctx.tolerance(16);
    GapStatistics st;
    for (const HPReal& g : gaps) {
        if (!st.gap_lengths.empty() && g - st.gap_lengths.back() < tol) {
            ++st.multiplicities.back();
        } else {
            st.gap_lengths.push_back(g);
            st.multiplicities.push_back(1);
        }
    }
    return st;
}

}  // namespace bbg::diophantine

#endif  // BBG_DIOPHANTINE_HPP
