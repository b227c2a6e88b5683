#include <catch2/catch_amalgamated.hpp>

#include "bbg/averaging.hpp"
#include "bbg/quadrature.hpp"

using namespace bbg;
using namespace bbg::averaging;

TEST_CASE("j_exact: anchors and small values") {
    CHECK(j_exact(0) == Rational(1));
    CHECK(j_exact(1) == Rational(1));
    CHECK(j_exact(2) == Rational(9, 8));
    CHECK(j_exact(3) == Rational(11, 8));
    CHECK_THROWS_AS(j_exact(-1), precondition_error);
    CHECK_THROWS_AS(j_exact(10001), precondition_error);
}

TEST_CASE("j_exact(2) agrees with quadrature of the defining integral") {
    PrecisionContext ctx;
    // (1/2pi) int (1 + sin/2)^2 = 1 + 1/8 by the Wallis integral
    HPReal q = i_quadrature(2, ctx);
    HPReal expect = to_real(Rational(9, 8), 200) * pow_si(HPReal(2L, 200) / 3L, 2);
    CHECK(abs(q - expect) < ctx.tolerance(16));
}

TEST_CASE("j_recurrence validates against the exact sum and stays on the fast path") {
    PrecisionContext ctx;
    auto seq = j_recurrence(100, ctx);
    CHECK_FALSE(seq.used_exact_fallback);
    REQUIRE(seq.J.size() == 101);
    const HPReal tol = ctx.tolerance(8);
    for (long n = 0; n <= 100; ++n) {
        HPReal exact = to_real(j_exact(n), 250);
        CHECK(abs(seq.J[n] - exact) <= tol * max(HPReal(1L, 160), exact));
    }
    CHECK(seq.J[0] == HPReal(1L, 160));
    CHECK(seq.J[1] == HPReal(1L, 160));
}

TEST_CASE("averaging sequence invariants: positivity, growth, I range") {
    PrecisionContext ctx;
    auto seq = j_recurrence(500, ctx);
    for (long n = 0; n <= 500; ++n) {
        CHECK(seq.J[n] > 0L);
        CHECK(seq.I[n] > 0L);
        CHECK(seq.I[n] <= 1L);
        if (n >= 1 && n < 500) CHECK(seq.J[n + 1] > seq.J[n]);
    }
}

TEST_CASE("growth check: J_50/J_49 sits in (1.4, 1.5)") {
    Rational ratio = j_exact(50) / j_exact(49);
    CHECK(ratio > Rational(14, 10));
    CHECK(ratio < Rational(15, 10));
}

TEST_CASE("i_quadrature: constants and oracle equivalence") {
    PrecisionContext ctx;
    CHECK(i_quadrature(0, ctx) == HPReal(1L, 160));
    CHECK(abs(i_quadrature(1, ctx) - HPReal(2L, 200) / 3L) < ctx.tolerance(16));
    HPReal expect10 = to_real(j_exact(10), 250) * pow_si(HPReal(2L, 250) / 3L, 10);
    CHECK(abs(i_quadrature(10, ctx) - expect10) < ctx.tolerance(16));
}

TEST_CASE("three-way agreement quadrature/exact/recurrence up to n = 200") {
    PrecisionContext ctx;
    auto seq = j_recurrence(200, ctx);
    HPReal two_thirds = HPReal(2L, 250) / 3L;
    const HPReal tol = ctx.tolerance(16);
    for (long n = 0; n <= 200; ++n) {
        HPReal exact_i = to_real(j_exact(n), 250) * pow_si(two_thirds, n);
        CHECK(abs(i_quadrature(n, ctx) - exact_i) < tol);
        CHECK(abs(seq.I[n] - exact_i) < tol);
    }
}

TEST_CASE("m_partial: exact small values") {
    PrecisionContext ctx;
    auto m1 = m_partial(1, ctx);
    CHECK(abs(m1.value - HPReal(2L, 200) / 3L) < pow2(-150, 64));
    auto m2 = m_partial(2, ctx);
    CHECK(abs(m2.value - HPReal(11L, 200) / 12L) < pow2(-150, 64));
    CHECK(m2.error_kind == ErrorEstimateKind::heuristic);
    CHECK_THROWS_AS(m_partial(0, ctx), precondition_error);
}

TEST_CASE("m_partial: strictly increasing, bounded by log 6") {
    PrecisionContext ctx;
    HPReal log6 = log(HPReal(6L, 200));
    HPReal bound = log6 + real_from_string("1e-6", 64);
    HPReal prev(160);
    for (long long n : {10LL, 100LL, 1000LL, 10000LL}) {
        HPReal m = m_partial(n, ctx).value;
        CHECK(m > prev);
        CHECK(m < bound);
        prev = m;
    }
}

TEST_CASE("m_partial(1e4) against the independently computed value") {
    PrecisionContext ctx;
    auto m = m_partial(10000, ctx);
    CHECK(abs(m.value - real_from_string("1.777940048731", 200)) < real_from_string("1e-9", 64));
}

TEST_CASE("I_n sqrt(n) is monotone with sharply shrinking differences") {
    PrecisionContext ctx;
    HPReal a3 = m_partial_detailed(1000, ctx).a_end;
    HPReal a4 = m_partial_detailed(10000, ctx).a_end;
    HPReal a5 = m_partial_detailed(100000, ctx).a_end;
    HPReal d1 = a4 - a3;
    HPReal d2 = a5 - a4;
    CHECK(d1.sign() == d2.sign());      // monotone
    CHECK(abs(d1) >= abs(d2) * 3L);     // differences shrink by >= 3x
    // the fitted constant approaches sqrt(3/(2 pi))
    HPReal fitted = m_partial_detailed(100000, ctx).fitted_constant;
    HPReal reference = sqrt(HPReal(3L, 200) / (pi(200) * 2L));
    CHECK(abs(fitted - reference) < real_from_string("1e-8", 64));
}

TEST_CASE("m_partial tail correction reaches the limit at 1e5") {
    PrecisionContext ctx;
    auto m = m_partial_detailed(100000, ctx);
    HPReal corrected = m.series.value + m.fitted_constant * 2L / sqrt(HPReal(100000L, 200));
    HPReal log6 = log(HPReal(6L, 200));
    CHECK(abs(corrected - log6) < real_from_string("1e-6", 64));
    // the heuristic estimate matches the actual gap to a few percent
    HPReal actual_gap = log6 - m.series.value;
    CHECK(abs(m.series.error_estimate - actual_gap) < actual_gap / 50L);
}

TEST_CASE("decay bound constant dominates I_n sqrt(n) on the measured range") {
    PrecisionContext ctx;
    HPReal c = decay_bound_constant(ctx);
    CHECK(c > real_from_string("0.69", 64));
    CHECK(c < real_from_string("0.72", 64));
    AveragingRecurrence rec(200);
    for (long n = 1; n <= 1500; ++n) {
        if (n >= 2) CHECK(rec.current() * sqrt(HPReal(static_cast<long>(n), 200)) <= c);
        rec.advance();
    }
}

TEST_CASE("log(1 - cos t) mean value is -log 2") {
    PrecisionContext ctx;
    HPReal v = log_one_minus_cos_mean(ctx);
    HPReal target = -log(HPReal(2L, 200));
    CHECK(abs(v - target) < real_from_string("1e-10", 64));
    // the quadrature beats the contract comfortably
    CHECK(abs(v - target) < real_from_string("1e-20", 64));
}

TEST_CASE("log(1 + cos t) has the same mean by the half-period shift") {
    PrecisionContext ctx;
    const Prec p = 200;
    HPReal delta = real_from_string("0.001", p);
    HPReal pi_v = pi(p);
    HPReal two_pi = pi_v * 2L;
    HPReal tol = pow2(-190, p);
    auto f = [&](const HPReal& t) {
        HPReal c(p);
        mpfr_cos(c.raw(), t.raw(), MPFR_RNDN);
        return log(HPReal(1L, p) + c);
    };
    // singularity now sits at t = pi; the same endpoint expansion applies there
    HPReal left = integrate_tanh_sinh(f, HPReal(0L, p), pi_v - delta, p, tol);
    HPReal right = integrate_tanh_sinh(f, pi_v + delta, two_pi, p, tol);
    HPReal series_piece = (delta * log(delta) - delta) * 2L - delta * log(HPReal(2L, p)) -
                          pow_si(delta, 3) / 36L - pow_si(delta, 5) / 7200L;
    HPReal mean = (left + right + series_piece * 2L) / two_pi;
    CHECK(abs(mean - log_one_minus_cos_mean(ctx)) < real_from_string("1e-18", 64));
}

TEST_CASE("Fourier expansion of log(1 - cos t) at t = pi/2") {
    // -log 2 - 2 sum_{k<=K} cos(k pi/2)/k approaches log(1 - cos(pi/2)) = 0
    const Prec p = 200;
    const long K = 100;
    CompensatedAccumulator acc(p);
    for (long k = 1; k <= K; ++k) {
        HPReal c(p);
        HPReal arg = pi(p) * k / 2L;
        mpfr_cos(c.raw(), arg.raw(), MPFR_RNDN);
        acc.add(c / k);
    }
    HPReal approx = -log(HPReal(2L, p)) - acc.value() * 2L;
    CHECK(abs(approx) < HPReal(2L, p) / K);
}

TEST_CASE("guard: the Jensen-style average differs from M") {
    // (1/2pi) int log(2 + sin) = log((2 + sqrt 3)/2), which is not log 6
    PrecisionContext ctx;
    const Prec p = 200;
    auto f = [&](const HPReal& theta) { return log(sin(theta) + 2L); };
    HPReal jensen = periodic_mean(f, p, pow2(-150, p));
    HPReal expect = log((HPReal(2L, p) + sqrt(HPReal(3L, p))) / 2L);
    CHECK(abs(jensen - expect) < pow2(-140, 64));
    CHECK(abs(jensen - log(HPReal(6L, p))) > HPReal(1L, p) / 1L);
}
