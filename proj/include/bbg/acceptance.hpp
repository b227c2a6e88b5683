#ifndef BBG_ACCEPTANCE_HPP
#define BBG_ACCEPTANCE_HPP

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "bbg/averaging.hpp"
#include "bbg/diophantine.hpp"
#include "bbg/fourier.hpp"
#include "bbg/series.hpp"
#include "bbg/special.hpp"

namespace bbg::acceptance {

struct CheckResult {
    std::string name;
    std::string target;
    std::string computed;
    std::string tolerance;
    bool pass = false;
    std::string detail;
};

struct Battery {
    std::vector<CheckResult> checks;
    double runtime_seconds = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    long failed_count() const {
        long f = 0;
        for (const auto& c : checks)
            if (!c.pass) ++f;
        return f;
    }
};

namespace detail {

inline void push(Battery& b, std::string name, std::string target, std::string computed,
                 std::string tolerance, bool pass, std::string detail = "") {
    b.checks.push_back({std::move(name), std::move(target), std::move(computed),
                        std::move(tolerance), pass, std::move(detail)});
}

inline void check_abs(Battery& b, const std::string& name, const HPReal& computed,
                      const std::string& target, const std::string& tol,
                      const PrecisionContext& ctx) {
    const Prec p = ctx.working_precision();
    HPReal t = real_from_string(target, p);
    HPReal e = real_from_string(tol, p);
    push(b, name, target, to_string(computed), tol, abs(computed - t) <= e);
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Full desk-scale reproduction battery. Every tolerance is pinned here.
inline Battery run_battery(const PrecisionContext& ctx) {
    using clock = std::chrono::steady_clock;
    const auto t_start = clock::now();
    const Prec p = ctx.working_precision();
    Battery b;

    // ---- partial-sum table -------------------------------------------------
    {
        const auto t0 = clock::now();
        auto rows = series::convergence_trace({1000, 10000, 100000, 1000000}, ctx);
        const double dt = detail::seconds_since(t0);
        const char* targets[] = {"2.1195", "2.1494", "2.1588", "2.1618"};
        for (size_t i = 0; i < rows.size(); ++i) {
            detail::check_abs(b, "c1_s_table_1e" + std::to_string(i + 3), rows[i].S_N, targets[i],
                              "1e-4", ctx);
        }
        detail::push(b, "c1_runtime_1e6", "<= 60 s", std::to_string(dt) + " s", "60",
                     dt <= 60.0);
        // strictly increasing partial sums over the trace checkpoints (part of c10)
        bool increasing = true;
        for (size_t i = 1; i < rows.size(); ++i)
            if (!(rows[i].S_N > rows[i - 1].S_N)) increasing = false;
        detail::push(b, "c10_s_strictly_increasing", "S_N increasing", increasing ? "yes" : "no",
                     "exact", increasing);
    }

    HPReal log6 = log(HPReal(6L, p + 16)).round_to(p);
    HPReal target_S = eval_Ei(log(HPReal(3L, p + 16)), ctx).value;
    HPReal target_R = target_S - log6;

    // ---- M = log 6 ---------------------------------------------------------
    {
        auto m = averaging::m_partial_detailed(1000000, ctx);
        HPReal gap = log6 - m.series.value;
        bool in_window = gap > 0L && gap < real_from_string("0.002", p);
        detail::push(b, "c2_m_partial_1e6", "in (log6 - 2e-3, log6), log6 = 1.791759469228055",
                     to_string(gap), "2e-3", in_window,
                     "M = " + to_string(m.series.value) + "; shown value is log6 - M");
        HPReal corrected = m.series.value + m.fitted_constant * 2L / sqrt(HPReal(1000000L, p));
        detail::check_abs(b, "c2_m_tail_corrected", corrected - log6, "0", "1e-5", ctx);
    }

    // ---- Ei targets ----------------------------------------------------------
    {
        auto ei = eval_Ei(log(HPReal(3L, p + 16)), ctx);
        detail::check_abs(b, "c3_ei_log3", ei.value, "2.163588594667192", "5e-15", ctx);
        detail::check_abs(b, "c3_r_target", target_R, "0.371829125439", "5e-13", ctx);
    }

    // ---- exact-structure suite ----------------------------------------------
    {
        const auto t0 = clock::now();
        const HPReal rel112 = pow2(-112, p);

        auto seq = averaging::j_recurrence(100, ctx);
        bool three_way = true;
        std::string witness;
        HPReal two_thirds = HPReal(2L, p + 16) / 3L;
        for (long n = 0; n <= 100 && three_way; ++n) {
            HPReal exact = to_real(averaging::j_exact(n), p + 16);
            HPReal quad_j = averaging::i_quadrature(n, ctx) / pow_si(two_thirds, n);
            if (abs(seq.J[n] - exact) > rel112 * exact || abs(quad_j - exact) > rel112 * exact) {
                three_way = false;
                witness = "n=" + std::to_string(n);
            }
        }
        detail::push(b, "c4_j_three_way_n100", "rel diff <= 2^-112", three_way ? "ok" : witness,
                     "2^-112 relative", three_way);

        bool quad_ok = true;
        const HPReal abs112 = pow2(-112, p);
        for (long n = 1; n <= 30 && quad_ok; ++n) {
            for (long k = 0; k <= n && quad_ok; ++k) {
                HPComplex exact = fourier::fourier_coefficient(k, n).to_complex(p);
                HPComplex q = fourier::fourier_coefficient_quadrature(k, n, ctx);
                if (abs(exact.re - q.re) > abs112 || abs(exact.im - q.im) > abs112) quad_ok = false;
            }
        }
        detail::push(b, "c4_ck_exact_vs_quadrature_n30", "|diff| <= 2^-112", quad_ok ? "ok" : "mismatch",
                     "2^-112", quad_ok);

        bool parity_ok = true, degree_ok = true, bound_ok = true;
        for (long n = 1; n <= 200; ++n) {
            Rational jn = averaging::j_exact(n);
            for (long k = 0; k <= n; ++k) {
                fourier::HarmonicCoefficient c = fourier::fourier_coefficient(k, n);
                if (k % 2 == 0 ? c.im_num != 0 : c.re_num != 0) parity_ok = false;
                if (!c.abs_within(jn)) bound_ok = false;
            }
            for (long k = n + 1; k <= n + 8; ++k) {
                if (k <= fourier::kCoefficientCap && !fourier::fourier_coefficient(k, n).is_zero())
                    degree_ok = false;
            }
        }
        detail::push(b, "c4_ck_parity_n200", "i^k c_k(n) real", parity_ok ? "ok" : "violated",
                     "exact", parity_ok);
        detail::push(b, "c4_ck_degree_n200", "c_k(n)=0 for k>n", degree_ok ? "ok" : "violated",
                     "exact", degree_ok);
        detail::push(b, "c4_ck_bound_n200", "|c_k(n)| <= J_n", bound_ok ? "ok" : "violated",
                     "exact", bound_ok);

        std::mt19937_64 rng(0xBB61234);
        std::uniform_int_distribution<long> pick_n(1, 100);
        std::uniform_real_distribution<double> pick01(0.0, 1.0);
        bool recon_ok = true;
        HPReal two_pi = pi(p);
        mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);
        for (int i = 0; i < 50 && recon_ok; ++i) {
            long n = pick_n(rng);
            HPReal theta = two_pi * real_from_string(std::to_string(pick01(rng)), p);
            HPReal direct = exp(log1p(sin(theta) / 2L) * n);
            HPReal rebuilt = fourier::reconstruct_pointwise(n, theta, ctx);
            HPReal scale = max(HPReal(1L, p), to_real(averaging::j_exact(n), p));
            if (abs(direct - rebuilt) > rel112 * scale) recon_ok = false;
        }
        detail::push(b, "c4_reconstruction_50pts", "|diff| <= 2^-112 * max(1, J_n)",
                     recon_ok ? "ok" : "mismatch", "2^-112 scaled", recon_ok);

        const double dt = detail::seconds_since(t0);
        detail::push(b, "c4_runtime", "<= 300 s", std::to_string(dt) + " s", "300", dt <= 300.0);
    }

    // ---- finite rearrangement identity at N = 60 ----------------------------
    {
        const Prec ip = p + 16;
        CompensatedAccumulator lhs(ip);
        HPReal two_thirds = HPReal(2L, ip) / 3L;
        HPReal zp(1L, ip);
        for (long n = 1; n <= 60; ++n) {
            zp *= two_thirds;
            HPReal s = sin_int(n, ctx).round_to(ip);
            HPReal pw = exp(log1p(s / 2L) * n);
            HPReal jn = to_real(averaging::j_exact(n), ip);
            lhs.add(zp / n * (pw - jn));
        }
        CompensatedAccumulator rhs(ip);
        for (long k = 1; k <= 60; ++k) {
            for (long n = k; n <= 60; ++n) {
                HPComplex c = fourier::fourier_coefficient(k, n).to_complex(ip);
                HPReal sk, ck;
                bbg::detail::sin_cos_int(k * n, ctx, ip, sk, ck);  // e^{ikn}
                HPReal re2 = (c.re * ck - c.im * sk) * 2L;
                rhs.add(pow_si(two_thirds, n) / n * re2);
            }
        }
        HPReal diff = abs(lhs.value() - rhs.value());
        HPReal tol = ctx.tolerance(20);
        detail::push(b, "c5_rearrangement_n60", "|LHS - RHS| <= 2^-(bits-20)", to_string(diff),
                     "2^-(bits-20)", diff <= tol);
    }

    // ---- harmonic magnitudes -------------------------------------------------
    {
        const char* targets[] = {"0.3747", "0.0347", "0.0045", "0.0003"};
        for (long k = 1; k <= 4; ++k) {
            auto h = fourier::h_k_value(k, HPReal(1L, p), 200, ctx);
            HPReal mag = abs(h.value.re * 2L);
            HPReal t = real_from_string(targets[k - 1], p);
            bool pass = abs(mag - t) <= real_from_string("0.01", p);
            detail::push(b, "c6_harmonic_h" + std::to_string(k) + "_magnitude", targets[k - 1],
                         to_string(mag), "0.01", pass,
                         "signed 2Re[H_k(1)] = " + to_string(h.value.re * 2L));
        }
    }

    // ---- leading-order closed form -------------------------------------------
    {
        HPReal s1 = sin_int(1, ctx), c1 = cos_int(1, ctx);
        HPReal lead = (HPReal(2L, p) / 3L * s1) /
                      (HPReal(1L, p) - HPReal(4L, p) / 3L * c1 + HPReal(4L, p) / 9L) / 2L;
        detail::check_abs(b, "c7_leading_order", lead, "0.3874", "1e-4", ctx);
    }

    // ---- Diophantine suite -----------------------------------------------------
    {
        auto cf = diophantine::cf_inv_two_pi(7, ctx);
        const std::vector<long long> want_q = {0, 6, 3, 1, 1, 7, 2, 146};
        bool q_ok = cf.partial_quotients == want_q;
        std::string got;
        for (auto q : cf.partial_quotients) got += std::to_string(q) + " ";
        detail::push(b, "c8_cf_quotients", "[0;6,3,1,1,7,2,146]", got, "exact", q_ok);

        const std::vector<long long> want_den = {1, 6, 19, 25, 44, 333, 710, 103993};
        bool d_ok = cf.convergents.size() == want_den.size();
        std::string dens;
        for (size_t i = 0; i < cf.convergents.size(); ++i) {
            dens += cf.convergents[i].second.str() + " ";
            if (d_ok && cf.convergents[i].second != want_den[i]) d_ok = false;
        }
        detail::push(b, "c8_cf_denominators", "1 6 19 25 44 333 710 103993", dens, "exact", d_ok);

        auto wild = diophantine::wild_enumerate(real_from_string("0.01", p), 10000, ctx);
        detail::push(b, "c8_wild_count_451", "451", std::to_string(wild.size()), "exact",
                     wild.size() == 451);

        for (long long N : {100LL, 1000LL, 10000LL, 100000LL}) {
            HPReal d = diophantine::star_discrepancy(N, ctx);
            auto et = diophantine::erdos_turan_bound(N, N, ctx);
            bool dom = d <= et.bound_at_optimal_H;
            detail::push(b, "c8_discrepancy_dominated_1e" + std::to_string((int)std::log10((double)N)),
                         "D* <= ET bound", to_string(d) + " <= " + to_string(et.bound_at_optimal_H),
                         "domination", dom, "optimal H = " + std::to_string(et.optimal_H));
        }

        std::mt19937_64 rng(0xBB6D157);
        std::uniform_int_distribution<long long> pick(2, 10000);
        bool gaps_ok = true;
        long long worst = 0;
        for (int i = 0; i < 50; ++i) {
            long long N = pick(rng);
            auto st = diophantine::three_distance_gaps(N, ctx);
            if (st.gap_lengths.size() > 3) {
                gaps_ok = false;
                worst = N;
            }
        }
        detail::push(b, "c8_three_distance_50_random", "<= 3 distinct gaps",
                     gaps_ok ? "ok" : ("violated at N=" + std::to_string(worst)), "exact", gaps_ok);
    }

    // ---- saddle-point audit ----------------------------------------------------
    {
        auto tight = diophantine::saddle_error_audit(real_from_string("0.001", p), 100000, ctx);
        bool tight_ok = tight.tight.present && tight.tight.max_rel_error < real_from_string("1e-4", p);
        detail::push(b, "c9_saddle_tight_bucket", "max rel err < 1e-4 (eps<1e-3, n<=1e5)",
                     tight.tight.present ? to_string(tight.tight.max_rel_error) : "absent", "1e-4",
                     tight_ok, "bucket count = " + std::to_string(tight.tight.count));
        auto loose = diophantine::saddle_error_audit(real_from_string("0.01", p), 10000, ctx);
        bool loose_ok = loose.loose.present && loose.loose.max_rel_error < real_from_string("0.05", p);
        detail::push(b, "c9_saddle_loose_bucket", "max rel err < 0.05 (eps<1e-2, n<=1e4)",
                     loose.loose.present ? to_string(loose.loose.max_rel_error) : "absent", "0.05",
                     loose_ok, "bucket count = " + std::to_string(loose.loose.count));
    }

    // ---- tautology and trends ----------------------------------------------------
    {
        HPReal tol = ctx.tolerance(20);
        for (long long N : {10LL, 1000LL, 100000LL}) {
            auto rep = series::decompose(N, ctx);
            HPReal diff = abs(rep.S_N - (rep.M_N + rep.R_N));
            detail::push(b, "c10_tautology_n" + std::to_string(N), "S_N = M_N + R_N", to_string(diff),
                         "2^-(bits-20)", diff <= tol);
        }
        auto r10 = series::decompose(10, ctx);
        auto r100 = series::decompose(100, ctx);
        auto r1000 = series::decompose(1000, ctx);
        auto r1e6 = series::decompose(1000000, ctx);
        HPReal g10 = abs(r10.gap_R), g100 = abs(r100.gap_R), g1000 = abs(r1000.gap_R),
               gend = abs(r1e6.gap_R);
        bool within = gend < real_from_string("0.02", p);
        detail::push(b, "c10_r_1e6_within_0p02", "|R_1e6 - 0.371829| < 0.02", to_string(gend), "0.02",
                     within, "R_1e6 = " + to_string(r1e6.R_N));
        // Trend formalization: the approach is resolvable across 10 -> 10^2 -> 10^3
        // and sits at the wild-noise floor afterwards, so the gap must shrink
        // strictly over the first three decades and the final gap must stay
        // below the 10^2 one.
        bool trend = g10 > g100 && g100 > g1000 && gend < g100;
        detail::push(b, "c10_r_monotone_trend", "|gap| decreasing over {10,10^2,10^3}, final < gap(10^2)",
                     to_string(g10) + " > " + to_string(g100) + " > " + to_string(g1000) +
                         ", final " + to_string(gend),
                     "trend", trend);
    }

    b.runtime_seconds = detail::seconds_since(t_start);
    return b;
}

}  // namespace bbg::acceptance

#endif  // BBG_ACCEPTANCE_HPP
