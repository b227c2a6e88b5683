#ifndef BBG_REAL_HPP
#define BBG_REAL_HPP

#include <mpfr.h>

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace bbg {

using Prec = mpfr_prec_t;

/// Thrown when an argument violates an operation's stated bound.
/// The message names the violated bound so CLI callers can surface it.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Extended-precision real scalar backed by MPFR.
///
/// Every value carries its own precision; binary operations round to the
/// wider of the two operand precisions. Copy and assignment preserve the
/// source precision exactly, so an HPReal behaves as an immutable value.
class HPReal {
public:
    explicit HPReal(Prec prec) {
        assert(prec >= MPFR_PREC_MIN);
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    HPReal() : HPReal(Prec{64}) {}

    HPReal(long value, Prec prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    HPReal(unsigned long value, Prec prec) {
        mpfr_init2(v_, prec);
        mpfr_set_ui(v_, value, MPFR_RNDN);
    }
    HPReal(long long value, Prec prec) {
        static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
    }

    HPReal(const HPReal& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    HPReal& operator=(const HPReal& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    Prec precision() const { return mpfr_get_prec(v_); }

    /// Raw handle for tight loops that drive mpfr directly.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Value rounded (to nearest) into a new precision.
    HPReal round_to(Prec prec) const {
        HPReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend HPReal operator+(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(const HPReal& a, const HPReal& b) {
        HPReal r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a) {
        HPReal r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator*(long a, const HPReal& b) { return b * a; }
    friend HPReal operator/(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(long a, const HPReal& b) {
        HPReal r(b.precision());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator+(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(const HPReal& a, long b) {
        HPReal r(a.precision());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend HPReal operator-(long a, const HPReal& b) {
        HPReal r(b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    HPReal& operator+=(const HPReal& b) {
        mpfr_add(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator-=(const HPReal& b) {
        mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(const HPReal& b) {
        mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    HPReal& operator/=(const HPReal& b) {
        mpfr_div(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const HPReal& a, const HPReal& b) { return !(a == b); }
    friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

private:
    static Prec join(const HPReal& a, const HPReal& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

// -- elementary functions -------------------------------------------------

inline HPReal abs(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal sqrt(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal exp(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal log(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal log1p(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal expm1(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_expm1(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal sin(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal cos(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal floor(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_floor(r.raw(), x.raw());
    return r;
}
inline HPReal hypot(const HPReal& a, const HPReal& b) {
    HPReal r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline HPReal atan2(const HPReal& y, const HPReal& x) {
    HPReal r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline HPReal pow_si(const HPReal& x, long e) {
    HPReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}
inline HPReal pow(const HPReal& x, const HPReal& e) {
    HPReal r(std::max(x.precision(), e.precision()));
    mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline HPReal min(const HPReal& a, const HPReal& b) { return a <= b ? a : b; }
inline HPReal max(const HPReal& a, const HPReal& b) { return a >= b ? a : b; }

inline HPReal pi(Prec prec) {
    HPReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline HPReal euler_constant(Prec prec) {
    HPReal r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
/// 2^e as an exact value (one bit of mantissa suffices).
inline HPReal pow2(long e, Prec prec) {
    HPReal r(prec);
    mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
}

// -- decimal-string serialization -----------------------------------------

/// Parse a decimal string at the given precision (round to nearest).
inline HPReal real_from_string(const std::string& s, Prec prec) {
    HPReal r(prec);
    if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw precondition_error("real_from_string: unparsable decimal string '" + s + "'");
    return r;
}

namespace detail {

inline std::string compose_decimal(const std::string& digits, long exp10, bool negative) {
    // digits are the mantissa of 0.digits x 10^exp10.
    std::string m = digits;
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    std::string out;
    const bool scientific = exp10 < -3 || exp10 > 17;
    if (scientific) {
        out += m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    } else if (exp10 <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + m;
    } else if (static_cast<size_t>(exp10) >= m.size()) {
        out = m + std::string(static_cast<size_t>(exp10) - m.size(), '0');
    } else {
        out = m.substr(0, static_cast<size_t>(exp10)) + "." + m.substr(static_cast<size_t>(exp10));
    }
    return negative ? "-" + out : out;
}

}  // namespace detail

/// Shortest decimal string that parses back to x exactly at x's precision.
/// Scientific notation outside |x| in [1e-4, 1e16], positional inside.
inline std::string to_string(const HPReal& x) {
    if (x.is_nan()) return "nan";
    if (mpfr_inf_p(x.raw())) return x.is_negative() ? "-inf" : "inf";
    if (x.is_zero()) return "0";

    const Prec prec = x.precision();
    const size_t max_digits = static_cast<size_t>(std::ceil(static_cast<double>(prec) * 0.3010299956639812)) + 2;
    const bool negative = x.is_negative();

    for (size_t d = 1; d <= max_digits; ++d) {
        mpfr_exp_t e = 0;
        char* raw = mpfr_get_str(nullptr, &e, 10, d, x.raw(), MPFR_RNDN);
        std::string digits(raw);
        mpfr_free_str(raw);
        if (negative) digits.erase(0, 1);
        std::string candidate = detail::compose_decimal(digits, static_cast<long>(e), negative);
        HPReal back(prec);
        if (mpfr_set_str(back.raw(), candidate.c_str(), 10, MPFR_RNDN) == 0 && back == x)
            return candidate;
    }
    // max_digits always round-trips; reaching here would be a logic error.
    assert(false && "to_string: round-trip not found");
    return "nan";
}

}  // namespace bbg

#endif  // BBG_REAL_HPP
