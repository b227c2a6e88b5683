#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bbg/fourier.hpp"
#include "bbg/series.hpp"

using namespace bbg;
using namespace bbg::fourier;

TEST_CASE("fourier_coefficient: hand-checked exact values") {
    // c_0(2) = J_2 = 9/8
    auto c02 = fourier_coefficient(0, 2);
    CHECK(c02.re_num * 8 == c02.denom * 9);
    CHECK(c02.im_num == 0);

    // c_1(1) = -i/4: only the sin/2 term contributes
    auto c11 = fourier_coefficient(1, 1);
    CHECK(c11.re_num == 0);
    CHECK(c11.im_num * 4 == -c11.denom);

    // degree bound: c_3(2) = 0
    CHECK(fourier_coefficient(3, 2).is_zero());

    CHECK_THROWS_AS(fourier_coefficient(-1, 5), precondition_error);
    CHECK_THROWS_AS(fourier_coefficient(0, 0), precondition_error);
    CHECK_THROWS_AS(fourier_coefficient(0, 2001), precondition_error);
}

TEST_CASE("fourier_coefficient: c_0(n) equals J_n exactly") {
    for (long n : {1L, 2L, 5L, 17L, 60L}) {
        auto c = fourier_coefficient(0, n);
        CHECK(Rational(c.re_num, c.denom) == averaging::j_exact(n));
        CHECK(c.im_num == 0);
    }
}

TEST_CASE("exact path validated against quadrature for n <= 12") {
    PrecisionContext ctx;
    const HPReal tol = ctx.tolerance(16);
    for (long n = 1; n <= 12; ++n) {
        for (long k = 0; k <= n + 2; ++k) {
            HPComplex e = fourier_coefficient(k, n).to_complex(200);
            HPComplex q = fourier_coefficient_quadrature(k, n, ctx);
            CHECK(abs(e.re - q.re) < tol);
            CHECK(abs(e.im - q.im) < tol);
        }
    }
}

TEST_CASE("parity: i^k c_k(n) is real, on the exact representation") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> pick_n(1, 200);
    for (int i = 0; i < 500; ++i) {
        long n = pick_n(rng);
        std::uniform_int_distribution<long> pick_k(0, n);
        long k = pick_k(rng);
        auto c = fourier_coefficient(k, n);
        if (k % 2 == 0) {
            CHECK(c.im_num == 0);
        } else {
            CHECK(c.re_num == 0);
        }
    }
}

TEST_CASE("bound and degree properties on the exact representation") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> pick_n(1, 200);
    for (int i = 0; i < 200; ++i) {
        long n = pick_n(rng);
        std::uniform_int_distribution<long> pick_k(0, n + 6);
        long k = pick_k(rng);
        auto c = fourier_coefficient(k, n);
        if (k > n) {
            CHECK(c.is_zero());
        } else {
            CHECK(c.abs_within(averaging::j_exact(n)));
        }
    }
}

TEST_CASE("reconstruct_pointwise: anchor points") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();
    // n = 1, theta = pi/2: 1 + 1/2 = 3/2
    HPReal half_pi = pi(p + 16) / 2L;
    CHECK(abs(reconstruct_pointwise(1, half_pi, ctx) - HPReal(3L, p) / 2L) < ctx.tolerance(16));
    // n = 20, theta = 0: sin 0 = 0
    CHECK(abs(reconstruct_pointwise(20, HPReal(0L, p), ctx) - HPReal(1L, p)) < ctx.tolerance(16));
    // n = 5, theta = 1: direct power
    HPReal direct = exp(log1p(sin(HPReal(1L, p + 16)) / 2L) * 5L);
    CHECK(abs(reconstruct_pointwise(5, HPReal(1L, p), ctx) - direct) < ctx.tolerance(16));
}

TEST_CASE("reconstruction at random points matches the direct power") {
    PrecisionContext ctx;
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> pick_n(1, 100);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const Prec p = ctx.working_precision();
    HPReal two_pi = pi(p + 16) * 2L;
    for (int i = 0; i < 50; ++i) {
        long n = pick_n(rng);
        HPReal theta = two_pi * real_from_string(std::to_string(u01(rng)), p);
        HPReal direct = exp(log1p(sin(theta.round_to(p + 16)) / 2L) * n);
        HPReal scale = max(HPReal(1L, p), to_real(averaging::j_exact(n), p));
        CHECK(abs(reconstruct_pointwise(n, theta, ctx) - direct) < ctx.tolerance(16) * scale);
    }
}

TEST_CASE("g_k_value: edge cases and the dominant k = 1 value") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();

    SECTION("z = 0 gives the empty series") {
        auto g = g_k_value(1, HPComplex(HPReal(0L, p), HPReal(0L, p)), 100, ctx);
        CHECK(g.value.re.is_zero());
        CHECK(g.value.im.is_zero());
    }
    SECTION("all coefficients below k vanish") {
        HPComplex z = unit_phase(HPReal(5L, p)) * (HPReal(2L, p) / 3L);
        auto g = g_k_value(5, z, 4, ctx);
        CHECK(g.value.re.is_zero());
        CHECK(g.value.im.is_zero());
    }
    SECTION("2 Re[G_1((2/3)e^i)] at N = 200") {
        HPComplex z = unit_phase(HPReal(1L, p)) * (HPReal(2L, p) / 3L);
        auto g = g_k_value(1, z, 200, ctx);
        // coarse agreement with the reference magnitude
        CHECK(abs(g.value.re * 2L - real_from_string("0.3747", p)) < real_from_string("0.01", 64));
        // frozen independently computed value
        CHECK(abs(g.value.re * 2L - real_from_string("0.374214160386", p)) <
              real_from_string("1e-9", 64));
        CHECK(g.tail_bound > 0L);
    }
    SECTION("arguments beyond the radius of convergence are rejected") {
        HPComplex z(real_from_string("0.7", p), HPReal(0L, p));
        CHECK_THROWS_AS(g_k_value(1, z, 10, ctx), precondition_error);
    }
}

TEST_CASE("h_k_value: identity with G_k at s = 1 and frozen true values") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();

    SECTION("H_k(1) equals G_k((2/3)e^{ik}) at matching truncation") {
        for (long k : {1L, 2L, 3L}) {
            auto h = h_k_value(k, HPReal(1L, p), 60, ctx);
            HPComplex w = unit_phase(HPReal(k, p + 16)) * (HPReal(2L, p + 16) / 3L);
            auto g = g_k_value(k, w, 60, ctx);
            CHECK(abs(h.value.re - g.value.re) < pow2(-130, 64));
            CHECK(abs(h.value.im - g.value.im) < pow2(-130, 64));
        }
    }
    SECTION("true signed values of 2Re[H_k(1)] at N = 200") {
        struct Row {
            long k;
            const char* value;
        };
        // independently computed from the exact coefficients; the displayed
        // magnitudes 0.0347/0.0045/0.0003 for k = 2..4 are reproduced only by
        // an e^{in}-phase variant, not by the defining e^{ikn} phases
        const Row rows[] = {{1, "0.374214160386"},
                            {2, "-0.00177943125458"},
                            {3, "-0.000204270986792"},
                            {4, "-0.000224047453496"}};
        for (const auto& r : rows) {
            auto h = h_k_value(r.k, HPReal(1L, p), 200, ctx);
            CHECK(abs(h.value.re * 2L - real_from_string(r.value, p)) <
                  real_from_string("1e-9", 64));
        }
    }
    SECTION("single-term check at s = 2: c_1(1) w_1") {
        auto h = h_k_value(1, HPReal(2L, p), 1, ctx);
        HPReal s1 = sin(HPReal(1L, p + 16));
        HPReal c1 = cos(HPReal(1L, p + 16));
        // (-i/4)(2/3)e^i = (1/6)(sin 1 - i cos 1)
        CHECK(abs(h.value.re - s1 / 6L) < pow2(-140, 64));
        CHECK(abs(h.value.im + c1 / 6L) < pow2(-140, 64));
    }
    SECTION("the natural boundary is enforced") {
        HPReal s(1L, p);
        mpfr_div_2ui(s.raw(), s.raw(), 1, MPFR_RNDN);
        CHECK_THROWS_AS(h_k_value(1, s, 10, ctx), precondition_error);
    }
}

TEST_CASE("tail bounds dominate the absolute coefficient tail") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();
    for (long k : {1L, 3L}) {
        auto h = h_k_value(k, HPReal(1L, p), 50, ctx);
        // lower bound of the true tail: a finite stretch of |c_k(n)|(2/3)^n/n
        CompensatedAccumulator partial(p);
        HPReal two_thirds = HPReal(2L, p) / 3L;
        HPReal zp = pow_si(two_thirds, 51);
        for (long n = 51; n <= 300; ++n) {
            HPComplex c = fourier_coefficient(k, n).to_complex(p);
            partial.add(c.modulus() * zp / n);
            zp *= two_thirds;
        }
        CHECK(h.tail_bound >= partial.value());
    }
}

TEST_CASE("harmonic_sum_r: empty sum and running totals") {
    PrecisionContext ctx;
    auto empty = harmonic_sum_r(0, 0, ctx);
    CHECK(empty.per_k.empty());
    CHECK(empty.total.value.is_zero());

    auto rep = harmonic_sum_r(4, 200, ctx);
    REQUIRE(rep.per_k.size() == 4);
    HPReal running(ctx.working_precision());
    for (const auto& row : rep.per_k) {
        running += row.contribution;
        CHECK(abs(row.running_total - running) < pow2(-140, 64));
    }
    CHECK(abs(rep.total.value - running) < pow2(-140, 64));
    // the k = 1 harmonic dominates and already lands near the remainder target
    CHECK(abs(rep.total.value - real_from_string("0.3718", 200)) < real_from_string("0.01", 64));
}

TEST_CASE("finite rearrangement identity at N = 40") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision() + 16;
    const long N = 40;
    CompensatedAccumulator lhs(p);
    HPReal two_thirds = HPReal(2L, p) / 3L;
    HPReal zp(1L, p);
    for (long n = 1; n <= N; ++n) {
        zp *= two_thirds;
        HPReal s = sin_int(n, ctx).round_to(p);
        HPReal pw = exp(log1p(s / 2L) * n);
        lhs.add(zp / n * (pw - to_real(averaging::j_exact(n), p)));
    }
    CompensatedAccumulator rhs(p);
    for (long k = 1; k <= N; ++k) {
        for (long n = k; n <= N; ++n) {
            HPComplex c = fourier_coefficient(k, n).to_complex(p);
            HPReal sk, ck;
            bbg::detail::sin_cos_int(k * n, ctx, p, sk, ck);
            rhs.add(pow_si(two_thirds, n) / n * ((c.re * ck - c.im * sk) * 2L));
        }
    }
    CHECK(abs(lhs.value() - rhs.value()) < ctx.tolerance(20));
}

TEST_CASE("leading-order closed form of the first harmonic") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();
    HPReal s1 = sin_int(1, ctx);
    HPReal c1 = cos_int(1, ctx);
    HPReal lead = (HPReal(2L, p) / 3L * s1) /
                  (HPReal(1L, p) - HPReal(4L, p) / 3L * c1 + HPReal(4L, p) / 9L) / 2L;
    CHECK(abs(lead - real_from_string("0.38740", p)) < real_from_string("1e-4", 64));
    CHECK(abs(lead - real_from_string("0.38739544438914765563110314089379967", p)) <
          real_from_string("1e-30", 64));
}

TEST_CASE("phi_value: first term, boundary s = 1, fast decay at s = 3") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();

    SECTION("N = 1 reduces to (2/3)(sin 1)/2 for any s") {
        for (const char* s : {"1", "2", "3.5"}) {
            auto r = phi_value(real_from_string(s, p), 1, ctx);
            HPReal expect = HPReal(2L, p + 16) / 3L * sin_int(1, ctx) / 2L;
            CHECK(abs(r.value - expect) < pow2(-140, 64));
        }
    }
    SECTION("s = 3: doubling N changes nothing at 1e-6 scale") {
        auto a = phi_value(HPReal(3L, p), 10000, ctx);
        auto bb = phi_value(HPReal(3L, p), 20000, ctx);
        CHECK(abs(a.value - bb.value) < real_from_string("1e-6", 64));
    }
    SECTION("s = 1 partial sums trend toward the remainder target") {
        HPReal target = real_from_string("0.371829125439136972", p);
        HPReal g_prev(p);
        bool first = true;
        for (long long N : {10LL, 100LL, 1000LL}) {
            auto r = phi_value(HPReal(1L, p), N, ctx);
            HPReal g = abs(target - r.value);
            if (!first) CHECK(g < g_prev);
            g_prev = g;
            first = false;
        }
    }
    SECTION("s below 1 is rejected") {
        CHECK_THROWS_AS(phi_value(real_from_string("0.9", p), 10, ctx), precondition_error);
    }
}

TEST_CASE("c_1(n) normalization trends are reported, not asserted") {
    PrecisionContext ctx;
    auto rows = c1_trend({1, 2, 5, 10, 20, 50, 100, 200}, ctx);
    REQUIRE(rows.size() == 8);
    for (size_t i = 0; i < rows.size(); ++i) {
        // purely imaginary and negative; the J_n-normalized ratio stays in (-1, 0)
        CHECK(rows[i].im_over_jn < 0L);
        CHECK(rows[i].im_over_jn > -1L);
        if (i > 0) CHECK(rows[i].im_over_jn < rows[i - 1].im_over_jn);
    }
    // Im/n does not settle: it leaves any fixed neighborhood of -1/4
    CHECK(rows.back().im_over_n < -1000L);
}
