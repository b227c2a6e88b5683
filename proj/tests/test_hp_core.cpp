#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bbg/precision.hpp"
#include "bbg/reduction.hpp"
#include "bbg/summation.hpp"

using namespace bbg;

namespace {

// Oracle: {n/(2*pi)} computed from scratch at doubled precision, bypassing
// the context's stored constant.
HPReal frac_oracle(long long n, Prec prec) {
    HPReal two_pi = pi(2 * prec);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);
    HPReal q = HPReal(n, 2 * prec) / two_pi;
    return q - floor(q);
}

// Oracle: sin n by direct correctly-rounded evaluation of the exact integer
// at doubled precision (mpfr does its own internal argument reduction).
HPReal sin_oracle(long long n, Prec prec) {
    HPReal v(n, 2 * prec);
    HPReal out(2 * prec);
    mpfr_sin(out.raw(), v.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

TEST_CASE("PrecisionContext invariants") {
    PrecisionContext ctx;
    CHECK(ctx.mantissa_bits() == 128);
    CHECK(ctx.guard_bits() == 32);
    CHECK(ctx.working_precision() == 160);
    CHECK(ctx.pi_precision() >= 160 + 24);  // default hint covers 10^7
    CHECK_THROWS_AS(PrecisionContext(32), precondition_error);
    CHECK_THROWS_AS(PrecisionContext(128, 32, 0), precondition_error);
}

TEST_CASE("reduce_mod_2pi matches the doubled-precision oracle") {
    PrecisionContext ctx;
    const HPReal tol = pow2(-128, 512);

    auto r1 = reduce_mod_2pi(1, ctx);
    CHECK(abs(r1.frac - frac_oracle(1, 256)) < tol);
    CHECK(abs(r1.frac - real_from_string("0.15915494309189533576", 256)) <
          real_from_string("1e-19", 64));

    auto r6 = reduce_mod_2pi(6, ctx);
    CHECK(abs(r6.frac - frac_oracle(6, 256)) < tol);
    CHECK(abs(r6.frac - real_from_string("0.95492965855137201461", 256)) <
          real_from_string("1e-19", 64));
    // 6 is the first continued-fraction denominator of 1/(2*pi): frac near 1
    CHECK(r6.frac > real_from_string("0.95", 64));

    // theta = 2*pi*frac stays in [0, 2*pi)
    HPReal two_pi = pi(200);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);
    CHECK(r6.theta >= 0L);
    CHECK(r6.theta < two_pi);
}

TEST_CASE("reduce_mod_2pi rejects out-of-contract indices") {
    PrecisionContext ctx(128, 32, 1000);
    CHECK_THROWS_AS(reduce_mod_2pi(0, ctx), precondition_error);
    CHECK_THROWS_AS(reduce_mod_2pi(1001, ctx), precondition_error);
    CHECK_NOTHROW(reduce_mod_2pi(1000, ctx));
}

TEST_CASE("reduce_mod_2pi agrees with doubled-precision reduction at random indices") {
    PrecisionContext ctx;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> pick(1, 10000000);
    const HPReal tol = pow2(-126, 512);  // mantissa_bits - 2
    for (int i = 0; i < 1000; ++i) {
        long long n = pick(rng);
        CHECK(abs(reduce_mod_2pi(n, ctx).frac - frac_oracle(n, 256)) < tol);
    }
}

TEST_CASE("sin_int: known values and Pythagorean identity") {
    PrecisionContext ctx;
    const HPReal tol = pow2(-126, 512);

    HPReal s1 = sin_int(1, ctx);
    CHECK(abs(s1 - sin_oracle(1, 160)) < tol);
    CHECK(abs(s1 - real_from_string("0.841470984807896506", 256)) < real_from_string("1e-17", 64));

    // 355 ~ 113*pi, so sin 355 is tiny
    HPReal s355 = sin_int(355, ctx);
    CHECK(abs(s355 - sin_oracle(355, 160)) < tol);
    CHECK(abs(s355) < real_from_string("1e-4", 64));
    CHECK(s355 < 0L);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> pick(1, 1000000);
    for (int i = 0; i < 50; ++i) {
        long long n = pick(rng);
        HPReal s = sin_int(n, ctx), c = cos_int(n, ctx);
        CHECK(abs(s * s + c * c - HPReal(1L, 200)) < pow2(-150, 64));
        CHECK(s >= -1L);
        CHECK(s <= 1L);
    }
}

TEST_CASE("sin_stream: resync 1 degenerates to direct evaluation") {
    PrecisionContext ctx;
    auto rows = sin_stream(1, 3, 1, ctx);
    REQUIRE(rows.size() == 3);
    for (const auto& [n, s, c] : rows) {
        CHECK(s == sin_int(n, ctx));
        CHECK(c == cos_int(n, ctx));
    }
}

TEST_CASE("sin_stream: single-element range") {
    PrecisionContext ctx;
    auto rows = sin_stream(1, 1, 64, ctx);
    REQUIRE(rows.size() == 1);
    CHECK(std::get<0>(rows[0]) == 1);
    CHECK(abs(std::get<1>(rows[0]) - sin_oracle(1, 160)) < pow2(-120, 64));
}

TEST_CASE("sin_stream: rotation recurrence stays within 2^-(bits-8) of sin_int") {
    PrecisionContext ctx;
    const HPReal tol = pow2(-(128 - 8), 64);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> pick(1, 100000);
    std::vector<long long> spots;
    for (int i = 0; i < 100; ++i) spots.push_back(pick(rng));
    std::sort(spots.begin(), spots.end());
    spots.erase(std::unique(spots.begin(), spots.end()), spots.end());

    SinCosStream st(1, 100000, 1024, ctx);
    long long n;
    HPReal s, c;
    size_t next = 0;
    while (st.next(n, s, c) && next < spots.size()) {
        if (n == spots[next]) {
            CHECK(abs(s - sin_int(n, ctx)) < tol);
            CHECK(abs(c - cos_int(n, ctx)) < tol);
            ++next;
        }
    }
    CHECK(next == spots.size());
}

TEST_CASE("sin_stream rejects bad ranges") {
    PrecisionContext ctx;
    CHECK_THROWS_AS(sin_stream(5, 4, 8, ctx), precondition_error);
    CHECK_THROWS_AS(sin_stream(0, 4, 8, ctx), precondition_error);
    CHECK_THROWS_AS(sin_stream(1, 4, 0, ctx), precondition_error);
}

TEST_CASE("compensated_sum: cancellation preserves the small addend") {
    PrecisionContext ctx;
    const Prec p = ctx.working_precision();
    HPReal tiny = pow2(-200, p);
    std::vector<HPReal> a = {HPReal(1L, p), HPReal(-1L, p), tiny};
    CHECK(compensated_sum(a, 4096, p) == tiny);
    // ordering that loses the low bits without compensation
    std::vector<HPReal> b = {HPReal(1L, p), tiny, HPReal(-1L, p)};
    CHECK(abs(compensated_sum(b, 4096, p) - tiny) < pow2(-320, p));
}

TEST_CASE("compensated_sum: empty sequence is zero") {
    std::vector<HPReal> none;
    CHECK(compensated_sum(none, 16, 160).is_zero());
}

TEST_CASE("compensated_sum: 10^6 copies of 10^-6") {
    const Prec p = 160;
    HPReal x = real_from_string("1e-6", p);
    ChunkedAccumulator acc(p);
    for (int i = 0; i < 1000000; ++i) acc.add(x);
    CHECK(abs(acc.total() - HPReal(1L, p)) < real_from_string("1e-30", 64));
}

TEST_CASE("compensated_sum: chunking invariance") {
    const Prec p = 160;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<HPReal> terms;
    for (int i = 0; i < 5000; ++i) {
        double scale = u(rng);
        HPReal t = real_from_string(std::to_string(u(rng)), p) * pow2((int)(40 * scale), p);
        terms.push_back(t);
    }
    HPReal ref = compensated_sum(terms, 1, p);
    const HPReal tol = pow2(-(128 - 16), p);
    HPReal scale = max(abs(ref), HPReal(1L, p));
    for (size_t chunk : {7u, 64u, 1024u, 100000u}) {
        CHECK(abs(compensated_sum(terms, chunk, p) - ref) < tol * scale);
    }
}

TEST_CASE("decimal serialization round-trips and uses the documented notation") {
    const Prec p = 160;
    SECTION("round-trip is exact at the value's precision") {
        std::mt19937_64 rng(19);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            HPReal x = real_from_string(std::to_string(u(rng)), p) * pow2((int)(u(rng) * 100), p);
            CHECK(real_from_string(to_string(x), p) == x);
        }
    }
    SECTION("notation switches to scientific outside [1e-4, 1e16]") {
        CHECK(to_string(real_from_string("0.0001", p)).substr(0, 2) == "0.");
        CHECK(to_string(real_from_string("0.00001", p)).find('e') != std::string::npos);
        CHECK(to_string(real_from_string("123.5", p)) == "123.5");
        CHECK(to_string(real_from_string("1e17", p)) == "1e17");
        CHECK(to_string(HPReal(0L, p)) == "0");
        CHECK(to_string(HPReal(-7L, p)) == "-7");
    }
    SECTION("shortest representation: simple values stay short") {
        CHECK(to_string(real_from_string("0.5", p)) == "0.5");
        CHECK(to_string(HPReal(1000L, p)) == "1000");
    }
}
