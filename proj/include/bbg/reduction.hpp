#ifndef BBG_REDUCTION_HPP
#define BBG_REDUCTION_HPP

#include <tuple>
#include <vector>

#include "bbg/precision.hpp"

namespace bbg {

struct ReducedAngle {
    HPReal frac;   // {n/(2*pi)} in [0,1)
    HPReal theta;  // 2*pi*frac in [0, 2*pi)
};

namespace detail {

inline void check_index(long long n, const PrecisionContext& ctx, const char* op) {
    if (n < 1)
        throw precondition_error(std::string(op) + ": index n must satisfy n >= 1 (got " +
                                 std::to_string(n) + ")");
    if (n > ctx.max_index_hint())
        throw precondition_error(std::string(op) + ": index n must satisfy n <= max_index_hint = " +
                                 std::to_string(ctx.max_index_hint()) + " (got " + std::to_string(n) +
                                 "); the precision contract for argument reduction would be violated");
}

}  // namespace detail

/// Fractional part of n/(2*pi), and the reduced angle 2*pi*{n/(2*pi)}.
///
/// Computed against the context's extended-precision 2*pi, so the absolute
/// error of frac is below 2^-(mantissa_bits+guard_bits) for all admissible n.
inline ReducedAngle reduce_mod_2pi(long long n, const PrecisionContext& ctx) {
    detail::check_index(n, ctx, "reduce_mod_2pi");
    const Prec ext = ctx.pi_precision();
    HPReal q(ext);
    mpfr_set_si(q.raw(), static_cast<long>(n), MPFR_RNDN);
    mpfr_div(q.raw(), q.raw(), ctx.two_pi_ext().raw(), MPFR_RNDN);
    HPReal fl(ext);
    mpfr_floor(fl.raw(), q.raw());
    mpfr_sub(q.raw(), q.raw(), fl.raw(), MPFR_RNDN);  // exact at ext precision
    HPReal theta_ext = q * ctx.two_pi_ext();
    return {q.round_to(ctx.working_precision()), theta_ext.round_to(ctx.working_precision())};
}

namespace detail {

/// sin and cos of n at `prec` bits, via the context's argument reduction.
inline void sin_cos_int(long long n, const PrecisionContext& ctx, Prec prec, HPReal& s, HPReal& c) {
    const Prec ext = ctx.pi_precision();
    HPReal q(ext);
    mpfr_set_si(q.raw(), static_cast<long>(n), MPFR_RNDN);
    mpfr_div(q.raw(), q.raw(), ctx.two_pi_ext().raw(), MPFR_RNDN);
    HPReal fl(ext);
    mpfr_floor(fl.raw(), q.raw());
    mpfr_sub(q.raw(), q.raw(), fl.raw(), MPFR_RNDN);
    mpfr_mul(q.raw(), q.raw(), ctx.two_pi_ext().raw(), MPFR_RNDN);
    s = HPReal(prec);
    c = HPReal(prec);
    mpfr_sin_cos(s.raw(), c.raw(), q.raw(), MPFR_RNDN);
}

}  // namespace detail

inline HPReal sin_int(long long n, const PrecisionContext& ctx) {
    detail::check_index(n, ctx, "sin_int");
    HPReal s, c;
    detail::sin_cos_int(n, ctx, ctx.working_precision(), s, c);
    return s;
}

inline HPReal cos_int(long long n, const PrecisionContext& ctx) {
    detail::check_index(n, ctx, "cos_int");
    HPReal s, c;
    detail::sin_cos_int(n, ctx, ctx.working_precision(), s, c);
    return c;
}

/// Streaming (sin(n*angle), cos(n*angle)) over a contiguous index range.
///
/// Uses the rotation recurrence
///   sin(x+a) = sin x cos a + cos x sin a,
///   cos(x+a) = cos x cos a - sin x sin a,
/// re-anchored from direct evaluation every resync_interval steps. The
/// recurrence runs 16 bits above working precision, which keeps the drift
/// between anchors far below the 2^-(mantissa_bits-8) contract.
class SinCosStream {
public:
    static constexpr long long kDefaultResync = 1024;

    SinCosStream(long long n_start, long long n_end, long long resync_interval,
                 const PrecisionContext& ctx)
        : SinCosStream(n_start, n_end, resync_interval, ctx, HPReal(1L, ctx.working_precision()), true) {}

    /// General rotation angle; `angle` is treated as exact at its precision.
    SinCosStream(long long n_start, long long n_end, long long resync_interval,
                 const PrecisionContext& ctx, const HPReal& angle)
        : SinCosStream(n_start, n_end, resync_interval, ctx, angle, angle == HPReal(1L, 8)) {}

    bool done() const { return n_ > n_end_; }
    long long current_index() const { return n_; }

    /// Advance one step; outputs are rounded to working precision.
    bool next(long long& n, HPReal& s, HPReal& c) {
        if (done()) return false;
        if (steps_since_anchor_ >= resync_) anchor(n_);
        n = n_;
        s = sin_.round_to(work_);
        c = cos_.round_to(work_);
        ++n_;
        ++steps_since_anchor_;
        if (n_ <= n_end_) rotate();
        return true;
    }

private:
    SinCosStream(long long n_start, long long n_end, long long resync_interval,
                 const PrecisionContext& ctx, HPReal angle, bool unit_angle)
        : ctx_(ctx),
          work_(ctx.working_precision()),
          internal_(ctx.working_precision() + 16),
          n_(n_start),
          n_end_(n_end),
          resync_(resync_interval),
          unit_angle_(unit_angle),
          angle_(angle.round_to(internal_)),
          sin_step_(internal_),
          cos_step_(internal_),
          sin_(internal_),
          cos_(internal_),
          t1_(internal_),
          t2_(internal_) {
        if (n_start < 1 || n_end < n_start)
            throw precondition_error("sin_stream: need 1 <= n_start <= n_end (got [" +
                                     std::to_string(n_start) + ", " + std::to_string(n_end) + "])");
        if (n_end > ctx.max_index_hint())
            throw precondition_error("sin_stream: n_end must satisfy n_end <= max_index_hint = " +
                                     std::to_string(ctx.max_index_hint()));
        if (resync_interval < 1)
            throw precondition_error("sin_stream: resync_interval must be >= 1");
        mpfr_sin_cos(sin_step_.raw(), cos_step_.raw(), angle_.raw(), MPFR_RNDN);
        anchor(n_start);
    }

    void anchor(long long n) {
        if (unit_angle_) {
            detail::sin_cos_int(n, ctx_, internal_, sin_, cos_);
        } else {
            // n*angle reduced against extended 2*pi; mpfr_sin_cos handles the
            // residual reduction internally.
            HPReal t(ctx_.pi_precision());
            mpfr_mul_si(t.raw(), angle_.raw(), static_cast<long>(n), MPFR_RNDN);
            mpfr_sin_cos(sin_.raw(), cos_.raw(), t.raw(), MPFR_RNDN);
        }
        steps_since_anchor_ = 0;
    }

    void rotate() {
        mpfr_mul(t1_.raw(), sin_.raw(), cos_step_.raw(), MPFR_RNDN);
        mpfr_mul(t2_.raw(), cos_.raw(), sin_step_.raw(), MPFR_RNDN);
        mpfr_add(t1_.raw(), t1_.raw(), t2_.raw(), MPFR_RNDN);
        mpfr_mul(t2_.raw(), cos_.raw(), cos_step_.raw(), MPFR_RNDN);
        mpfr_mul(cos_.raw(), sin_.raw(), sin_step_.raw(), MPFR_RNDN);
        mpfr_sub(cos_.raw(), t2_.raw(), cos_.raw(), MPFR_RNDN);
        mpfr_swap(sin_.raw(), t1_.raw());
    }

    const PrecisionContext& ctx_;
    Prec work_;
    Prec internal_;
    long long n_;
    long long n_end_;
    long long resync_;
    long long steps_since_anchor_ = 0;
    bool unit_angle_;
    HPReal angle_;
    HPReal sin_step_, cos_step_;
    HPReal sin_, cos_;
    HPReal t1_, t2_;
};

/// Materialized stream for small ranges.
inline std::vector<std::tuple<long long, HPReal, HPReal>> sin_stream(
    long long n_start, long long n_end, long long resync_interval, const PrecisionContext& ctx) {
    SinCosStream st(n_start, n_end, resync_interval, ctx);
    std::vector<std::tuple<long long, HPReal, HPReal>> out;
    out.reserve(static_cast<size_t>(n_end - n_start + 1));
    long long n;
    HPReal s, c;
    while (st.next(n, s, c)) out.emplace_back(n, std::move(s), std::move(c));
    return out;
}

}  // namespace bbg

#endif  // BBG_REDUCTION_HPP
