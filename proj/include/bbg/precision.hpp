#ifndef BBG_PRECISION_HPP
#define BBG_PRECISION_HPP

#include <cstdint>
#include <string>

#include "bbg/real.hpp"

namespace bbg {

/// Global working-precision contract.
///
/// Immutable once constructed. The stored 2*pi carries
/// mantissa_bits + guard_bits + ceil(log2(max_index_hint)) bits so that the
/// fractional part of n/(2*pi) keeps mantissa_bits of accuracy for every
/// index n up to max_index_hint.
class PrecisionContext {
public:
    static constexpr long kDefaultMantissaBits = 128;
    static constexpr long kDefaultGuardBits = 32;
    static constexpr long long kDefaultMaxIndexHint = 1LL << 24;  // > 10^7

    PrecisionContext(long mantissa_bits = kDefaultMantissaBits,
                     long guard_bits = kDefaultGuardBits,
                     long long max_index_hint = kDefaultMaxIndexHint)
        : mantissa_bits_(mantissa_bits),
          guard_bits_(guard_bits),
          max_index_hint_(max_index_hint),
          two_pi_(Prec{2}),
          gamma_(Prec{2}) {
        if (mantissa_bits < 64)
            throw precondition_error("PrecisionContext: mantissa_bits must be >= 64 (got " +
                                     std::to_string(mantissa_bits) + ")");
        if (guard_bits < 1)
            throw precondition_error("PrecisionContext: guard_bits must be >= 1");
        if (max_index_hint < 1)
            throw precondition_error("PrecisionContext: max_index_hint must be >= 1");
        two_pi_ = HPReal(pi_precision());
        mpfr_const_pi(two_pi_.raw(), MPFR_RNDN);
        mpfr_mul_2ui(two_pi_.raw(), two_pi_.raw(), 1, MPFR_RNDN);
        gamma_ = euler_constant(working_precision());
    }

    long mantissa_bits() const { return mantissa_bits_; }
    long guard_bits() const { return guard_bits_; }
    long long max_index_hint() const { return max_index_hint_; }

    Prec working_precision() const { return mantissa_bits_ + guard_bits_; }
    Prec pi_precision() const { return working_precision() + ceil_log2(max_index_hint_); }

    /// 2*pi at pi_precision(); the constant all argument reduction uses.
    const HPReal& two_pi_ext() const { return two_pi_; }
    /// Euler-Mascheroni constant, computed once per context.
    const HPReal& euler_gamma() const { return gamma_; }

    HPReal make_real() const { return HPReal(working_precision()); }
    HPReal make_real(long v) const { return HPReal(v, working_precision()); }

    /// Context with twice the mantissa, for oracle-style cross checks.
    PrecisionContext doubled() const {
        return PrecisionContext(2 * mantissa_bits_, guard_bits_, max_index_hint_);
    }

    /// 2^-(mantissa_bits - slack) as an HPReal, the recurring tolerance shape.
    HPReal tolerance(long slack) const { return pow2(-(mantissa_bits_ - slack), working_precision()); }

    static long ceil_log2(long long n) {
        long b = 0;
        unsigned long long v = static_cast<unsigned long long>(n > 0 ? n : 1);
        while ((1ULL << b) < v) ++b;
        return b;
    }

private:
    long mantissa_bits_;
    long guard_bits_;
    long long max_index_hint_;
    HPReal two_pi_;
    HPReal gamma_;
};

}  // namespace bbg

#endif  // BBG_PRECISION_HPP
