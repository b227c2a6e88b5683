#ifndef BBG_QUADRATURE_HPP
#define BBG_QUADRATURE_HPP

#include <utility>

#include "bbg/real.hpp"
#include "bbg/summation.hpp"

namespace bbg {

/// Mean of a 2*pi-periodic function over one period by the trapezoidal rule,
/// doubling the point count until two successive refinements agree to tol.
/// Spectrally accurate for periodic analytic integrands; each refinement
/// reuses the previous nodes and only evaluates the new midpoints.
template <class F>
HPReal periodic_mean(F&& f, Prec prec, const HPReal& tol, long initial_points = 32,
                     long max_points = (1L << 22)) {
    const Prec p = prec + 16;
    HPReal two_pi = pi(p);
    mpfr_mul_2ui(two_pi.raw(), two_pi.raw(), 1, MPFR_RNDN);

    long points = initial_points;
    CompensatedAccumulator acc(p);
    for (long j = 0; j < points; ++j) {
        acc.add(f(two_pi * j / points));
    }
    HPReal mean = acc.value() / points;

    while (points <= max_points) {
        CompensatedAccumulator odd(p);
        for (long j = 0; j < points; ++j) {
            odd.add(f(two_pi * (2 * j + 1) / (2 * points)));
        }
        HPReal refined = (mean + odd.value() / points) / 2L;
        points *= 2;
        HPReal delta = abs(refined - mean);
        mean = refined;
        if (delta < tol) return mean.round_to(prec);
    }
    throw std::runtime_error("periodic_mean: trapezoid refinement did not reach tolerance within the point cap");
}

/// Tanh-sinh quadrature of f over the finite interval [a, b].
/// Doubles the node density until successive levels agree to tol. Intended
/// for integrands analytic on the open interval (endpoint singularities of
/// integrable type are tolerated by the double-exponential decay).
template <class F>
HPReal integrate_tanh_sinh(F&& f, const HPReal& a, const HPReal& b, Prec prec, const HPReal& tol,
                           int max_level = 14) {
    const Prec p = prec + 24;
    const HPReal half = HPReal(1L, p) / 2L;
    const HPReal center = (a + b) * half;
    const HPReal radius = (b - a) * half;
    const HPReal half_pi = pi(p) * half;
    const HPReal weight_floor = pow2(-(static_cast<long>(p) + 16), p);

    // One node at parameter t: x = c + r*tanh((pi/2) sinh t), w = r*(pi/2)cosh t/cosh^2(...)
    auto node = [&](const HPReal& t, HPReal& x, HPReal& w) {
        HPReal sh(p), ch(p);
        mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
        HPReal u = half_pi * sh;
        HPReal th(p), sech(p);
        mpfr_tanh(th.raw(), u.raw(), MPFR_RNDN);
        mpfr_cosh(sech.raw(), u.raw(), MPFR_RNDN);
        x = center + radius * th;
        w = radius * half_pi * ch / (sech * sech);
    };

    HPReal h(1L, p);
    HPReal x(p), w(p);
    // level 0: integer nodes
    CompensatedAccumulator acc(p);
    node(HPReal(0L, p), x, w);
    acc.add(w * f(x));
    for (int sgn : {+1, -1}) {
        for (long j = 1;; ++j) {
            node(HPReal(sgn * j, p), x, w);
            if (w < weight_floor) break;
            acc.add(w * f(x));
        }
    }
    HPReal integral = acc.value();  // h = 1

    for (int level = 1; level <= max_level; ++level) {
        mpfr_div_2ui(h.raw(), h.raw(), 1, MPFR_RNDN);
        // new nodes at odd multiples of the refined h
        CompensatedAccumulator fresh(p);
        for (int sgn : {+1, -1}) {
            for (long j = 1;; j += 2) {
                node(h * (sgn * j), x, w);
                if (w < weight_floor) break;
                fresh.add(w * f(x));
            }
        }
        HPReal refined = integral * half + fresh.value() * h;
        HPReal delta = abs(refined - integral);
        integral = refined;
        if (level >= 3 && delta < tol) break;
    }
    return integral.round_to(prec);
}

}  // namespace bbg

#endif  // BBG_QUADRATURE_HPP
