#ifndef BBG_SERIES_HPP
#define BBG_SERIES_HPP

#include <optional>
#include <vector>

#include "bbg/averaging.hpp"
#include "bbg/precision.hpp"
#include "bbg/reduction.hpp"
#include "bbg/special.hpp"
#include "bbg/summation.hpp"
#include "bbg/types.hpp"

namespace bbg::series {

/// Per-index data for one term of the series.
struct TermRecord {
    long long n = 0;
    HPReal sin_n;
    HPReal L_n;  // log(1 + sin(n)/2), in [-log 2, log(3/2)]
    HPReal f_n;  // (1/n)((2 + sin n)/3)^n, in (0, 1/n]
    bool wild = false;
    HPReal delta_used;
};

inline constexpr double kDefaultWildDelta = 0.01;

/// Term record from an externally supplied sine value; the injection point
/// lets tests drive the factorisation with exact sines.
inline TermRecord term_from_sin(long long n, const HPReal& sin_value, const PrecisionContext& ctx,
                                double delta = kDefaultWildDelta) {
    if (n < 1) throw precondition_error("term: requires n >= 1");
    const Prec p = ctx.working_precision();
    const Prec ip = p + 16;
    TermRecord t;
    t.n = n;
    t.sin_n = sin_value.round_to(p);
    HPReal s = sin_value.round_to(ip);
    HPReal half(1L, ip);
    mpfr_div_2ui(half.raw(), half.raw(), 1, MPFR_RNDN);
    t.L_n = log1p(s * half).round_to(p);
    // power evaluated as exp(n log((2+sin n)/3)) in extended precision
    HPReal lg = log((s + 2L) / 3L);
    t.f_n = (exp(lg * static_cast<long>(n)) / static_cast<long>(n)).round_to(p);
    HPReal threshold = HPReal(1L, ip) - real_from_string(std::to_string(delta), ip);
    t.wild = s > threshold;
    t.delta_used = real_from_string(std::to_string(delta), p);
    return t;
}

inline TermRecord term(long long n, const PrecisionContext& ctx, double delta = kDefaultWildDelta) {
    if (n < 1) throw precondition_error("term: requires n >= 1");
    return term_from_sin(n, sin_int(n, ctx), ctx, delta);
}

namespace detail {

/// One pass over n = 1..N accumulating f(n * alpha-rotation) with the
/// deterministic chunked contract, invoking `capture` at each checkpoint.
template <class Capture>
void scan_partial_sums(const std::vector<long long>& checkpoints, const PrecisionContext& ctx,
                       const std::optional<HPReal>& alpha, bool exact_sin, Capture&& capture) {
    if (checkpoints.empty()) return;
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1)
            throw precondition_error("partial_sum: checkpoints must be >= 1");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw precondition_error("partial_sum: checkpoints must be strictly ascending");
    }
    const long long N = checkpoints.back();
    if (N > ctx.max_index_hint())
        throw precondition_error("partial_sum: N must satisfy N <= max_index_hint = " +
                                 std::to_string(ctx.max_index_hint()));
    const Prec p = ctx.working_precision();
    const Prec ip = p + 16;
    const long long resync = exact_sin ? 1 : SinCosStream::kDefaultResync;
    SinCosStream stream = alpha ? SinCosStream(1, N, resync, ctx, *alpha)
                                : SinCosStream(1, N, resync, ctx);
    ChunkedAccumulator acc(p);
    HPReal third(1L, ip);
    mpfr_div_ui(third.raw(), third.raw(), 3, MPFR_RNDN);
    HPReal t(ip);
    size_t next_cp = 0;
    long long n;
    HPReal sn, cn;
    while (stream.next(n, sn, cn)) {
        mpfr_add_ui(t.raw(), sn.raw(), 2, MPFR_RNDN);
        mpfr_mul(t.raw(), t.raw(), third.raw(), MPFR_RNDN);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_mul_si(t.raw(), t.raw(), static_cast<long>(n), MPFR_RNDN);
        mpfr_exp(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_div_si(t.raw(), t.raw(), static_cast<long>(n), MPFR_RNDN);
        acc.add(t.round_to(p));
        if (next_cp < checkpoints.size() && n == checkpoints[next_cp]) {
            capture(n, acc.total());
            ++next_cp;
        }
    }
}

}  // namespace detail

/// Partial sum S_N = sum_{n<=N} (1/n)((2 + sin(n*alpha))/3)^n (alpha = 1 by
/// default). exact_sin forces per-index direct evaluation instead of the
/// resynchronized rotation recurrence.
inline SeriesResult partial_sum(long long N, const PrecisionContext& ctx,
                                const std::optional<HPReal>& alpha = std::nullopt,
                                bool exact_sin = false) {
    const Prec p = ctx.working_precision();
    HPReal at_half(p), at_end(p);
    const long long half = N / 2;
    std::vector<long long> cps;
    if (half >= 1) cps.push_back(half);
    cps.push_back(N);
    detail::scan_partial_sums(cps, ctx, alpha, exact_sin, [&](long long n, HPReal v) {
        if (n == half) at_half = std::move(v);
        if (n == N) at_end = std::move(v);
    });
    // The S_N gap is dominated by the averaged tail ~ 2c/sqrt(N), so the
    // last-octave increment rescaled by 1/(sqrt2 - 1) estimates it.
    HPReal est(p);
    if (half >= 1) {
        HPReal sqrt2 = sqrt(HPReal(2L, p));
        est = abs(at_end - at_half) / (sqrt2 - 1L);
    } else {
        est = at_end;
    }
    return {at_end, N, est, ErrorEstimateKind::heuristic,
            "S_N partial sum; tail estimated from the last halving of N"};
}

struct TraceRow {
    long long N = 0;
    HPReal S_N;
    HPReal gap;  // Ei(log 3) - S_N
};

/// (N, S_N, Ei(log 3) - S_N) rows for ascending checkpoints, one pass.
inline std::vector<TraceRow> convergence_trace(const std::vector<long long>& checkpoints,
                                               const PrecisionContext& ctx,
                                               const std::optional<HPReal>& alpha = std::nullopt,
                                               bool exact_sin = false) {
    std::vector<TraceRow> rows;
    if (checkpoints.empty()) return rows;
    const Prec p = ctx.working_precision();
    HPReal target = eval_Ei(log(HPReal(3L, p + 16)), ctx).value;
    detail::scan_partial_sums(checkpoints, ctx, alpha, exact_sin, [&](long long n, HPReal v) {
        rows.push_back({n, v, target - v});
    });
    return rows;
}

/// Weyl decomposition report: S_N = M_N + R_N with the three accumulators
/// advanced termwise in a single pass, so the identity holds to rounding.
struct DecompositionReport {
    long long N = 0;
    HPReal S_N;
    HPReal M_N;
    HPReal R_N;
    HPReal target_S;  // Ei(log 3)
    HPReal target_R;  // Ei(log 3) - log 6
    HPReal gap_S;     // target_S - S_N
    HPReal gap_R;     // target_R - R_N
};

inline DecompositionReport decompose(long long N, const PrecisionContext& ctx) {
    if (N < 1) throw precondition_error("decompose: requires N >= 1");
    if (N > 1000000) throw precondition_error("decompose: requires N <= 10^6");
    const Prec p = ctx.working_precision();
    const Prec ip = p + 16;
    SinCosStream stream(1, N, SinCosStream::kDefaultResync, ctx);
    averaging::AveragingRecurrence rec(ip);
    ChunkedAccumulator acc_s(p), acc_m(p), acc_r(p);
    HPReal third(1L, ip);
    mpfr_div_ui(third.raw(), third.raw(), 3, MPFR_RNDN);
    HPReal f(ip), avg(ip);
    long long n;
    HPReal sn, cn;
    while (stream.next(n, sn, cn)) {
        mpfr_add_ui(f.raw(), sn.raw(), 2, MPFR_RNDN);
        mpfr_mul(f.raw(), f.raw(), third.raw(), MPFR_RNDN);
        mpfr_log(f.raw(), f.raw(), MPFR_RNDN);
        mpfr_mul_si(f.raw(), f.raw(), static_cast<long>(n), MPFR_RNDN);
        mpfr_exp(f.raw(), f.raw(), MPFR_RNDN);
        mpfr_div_si(f.raw(), f.raw(), static_cast<long>(n), MPFR_RNDN);
        mpfr_div_si(avg.raw(), rec.current().raw(), static_cast<long>(n), MPFR_RNDN);
        acc_s.add(f.round_to(p));
        acc_m.add(avg.round_to(p));
        acc_r.add((f - avg).round_to(p));
        if (n < N) rec.advance();
    }
    DecompositionReport rep;
    rep.N = N;
    rep.S_N = acc_s.total();
    rep.M_N = acc_m.total();
    rep.R_N = acc_r.total();
    rep.target_S = eval_Ei(log(HPReal(3L, ip)), ctx).value;
    rep.target_R = rep.target_S - log(HPReal(6L, ip)).round_to(p);
    rep.gap_S = rep.target_S - rep.S_N;
    rep.gap_R = rep.target_R - rep.R_N;
    return rep;
}

struct RemainderSplit {
    HPReal r_plus;   // wild part: sin n > 1 - delta
    HPReal r_minus;  // tame part
};

/// R_N split into wild and tame partial sums; r_plus + r_minus rebuilds R_N
/// exactly (every term lands in exactly one side).
inline RemainderSplit remainder_split(const HPReal& delta, long long N, const PrecisionContext& ctx) {
    if (!(delta > 0L) || delta > 2L)
        throw precondition_error("remainder_split: requires delta in (0, 2]");
    if (N < 1 || N > 1000000) throw precondition_error("remainder_split: requires 1 <= N <= 10^6");
    const Prec p = ctx.working_precision();
    const Prec ip = p + 16;
    SinCosStream stream(1, N, SinCosStream::kDefaultResync, ctx);
    averaging::AveragingRecurrence rec(ip);
    ChunkedAccumulator plus(p), minus(p);
    HPReal third(1L, ip);
    mpfr_div_ui(third.raw(), third.raw(), 3, MPFR_RNDN);
    HPReal threshold = HPReal(1L, ip) - delta.round_to(ip);
    HPReal f(ip), avg(ip);
    long long n;
    HPReal sn, cn;
    while (stream.next(n, sn, cn)) {
        mpfr_add_ui(f.raw(), sn.raw(), 2, MPFR_RNDN);
        mpfr_mul(f.raw(), f.raw(), third.raw(), MPFR_RNDN);
        mpfr_log(f.raw(), f.raw(), MPFR_RNDN);
        mpfr_mul_si(f.raw(), f.raw(), static_cast<long>(n), MPFR_RNDN);
        mpfr_exp(f.raw(), f.raw(), MPFR_RNDN);
        mpfr_div_si(f.raw(), f.raw(), static_cast<long>(n), MPFR_RNDN);
        mpfr_div_si(avg.raw(), rec.current().raw(), static_cast<long>(n), MPFR_RNDN);
        HPReal term = (f - avg).round_to(p);
        if (sn > threshold) {
            plus.add(term);
        } else {
            minus.add(term);
        }
        if (n < N) rec.advance();
    }
    return {plus.total(), minus.total()};
}

struct RemainderShapeRow {
    HPReal delta;
    HPReal r_plus;
    HPReal r_minus;
    HPReal fitted_C;  // |r_minus| / (sqrt(delta) log(1/delta)), reported not asserted
};

/// |R_minus| against the shape C sqrt(delta) log(1/delta) across the standard
/// delta grid; the fitted constants are reported, never asserted.
inline std::vector<RemainderShapeRow> remainder_split_report(long long N, const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision();
    std::vector<RemainderShapeRow> rows;
    for (const char* d : {"0.1", "0.03", "0.01", "0.003"}) {
        HPReal delta = real_from_string(d, p);
        RemainderSplit s = remainder_split(delta, N, ctx);
        HPReal shape = sqrt(delta) * log(1L / delta);
        rows.push_back({delta, s.r_plus, s.r_minus, abs(s.r_minus) / shape});
    }
    return rows;
}

}  // namespace bbg::series

#endif  // BBG_SERIES_HPP
