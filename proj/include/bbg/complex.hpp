#ifndef BBG_COMPLEX_HPP
#define BBG_COMPLEX_HPP

#include "bbg/real.hpp"

namespace bbg {

/// Extended-precision complex scalar made of two HPReal parts.
struct HPComplex {
    HPReal re;
    HPReal im;

    HPComplex() = default;
    explicit HPComplex(Prec prec) : re(prec), im(prec) {}
    HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}

    Prec precision() const { return std::max(re.precision(), im.precision()); }

    HPReal modulus() const { return hypot(re, im); }
    HPReal argument() const { return atan2(im, re); }
    HPComplex conj() const { return {re, -im}; }

    friend HPComplex operator+(const HPComplex& a, const HPComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend HPComplex operator-(const HPComplex& a, const HPComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend HPComplex operator*(const HPComplex& a, const HPComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend HPComplex operator*(const HPComplex& a, const HPReal& s) { return {a.re * s, a.im * s}; }
    friend HPComplex operator*(const HPReal& s, const HPComplex& a) { return a * s; }
    friend HPComplex operator/(const HPComplex& a, const HPReal& s) { return {a.re / s, a.im / s}; }
    friend HPComplex operator/(const HPComplex& a, long s) { return {a.re / s, a.im / s}; }
    HPComplex& operator+=(const HPComplex& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
};

/// e^{i t} at the precision of t.
inline HPComplex unit_phase(const HPReal& t) {
    HPComplex z(t.precision());
    mpfr_sin_cos(z.im.raw(), z.re.raw(), t.raw(), MPFR_RNDN);
    return z;
}

}  // namespace bbg

#endif  // BBG_COMPLEX_HPP
