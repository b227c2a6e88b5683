#ifndef BBG_SUMMATION_HPP
#define BBG_SUMMATION_HPP

#include <span>
#include <vector>

#include "bbg/real.hpp"

namespace bbg {

/// Neumaier-compensated accumulator at a fixed precision.
class CompensatedAccumulator {
public:
    explicit CompensatedAccumulator(Prec prec)
        : sum_(prec), comp_(prec), t_(prec), u_(prec) {}

    void add(const HPReal& x) {
        mpfr_add(t_.raw(), sum_.raw(), x.raw(), MPFR_RNDN);
        if (mpfr_cmpabs(sum_.raw(), x.raw()) >= 0) {
            mpfr_sub(u_.raw(), sum_.raw(), t_.raw(), MPFR_RNDN);
            mpfr_add(u_.raw(), u_.raw(), x.raw(), MPFR_RNDN);
        } else {
            mpfr_sub(u_.raw(), x.raw(), t_.raw(), MPFR_RNDN);
            mpfr_add(u_.raw(), u_.raw(), sum_.raw(), MPFR_RNDN);
        }
        mpfr_add(comp_.raw(), comp_.raw(), u_.raw(), MPFR_RNDN);
        mpfr_swap(sum_.raw(), t_.raw());
    }

    HPReal value() const { return sum_ + comp_; }

    void reset() {
        mpfr_set_zero(sum_.raw(), 1);
        mpfr_set_zero(comp_.raw(), 1);
    }

private:
    HPReal sum_, comp_, t_, u_;
};

/// Deterministic chunked summation: terms are grouped into fixed-size chunks
/// in arrival order, each chunk is summed with compensation, and the chunk
/// totals are combined in ascending chunk order. The result depends only on
/// the term sequence and the chunk size, never on scheduling.
class ChunkedAccumulator {
public:
    static constexpr size_t kDefaultChunk = 4096;

    explicit ChunkedAccumulator(Prec prec, size_t chunk_size = kDefaultChunk)
        : prec_(prec), chunk_size_(chunk_size ? chunk_size : 1), current_(prec) {}

    void add(const HPReal& x) {
        current_.add(x);
        ++terms_;
        if (++filled_ == chunk_size_) flush();
    }

    HPReal total() const {
        CompensatedAccumulator combine(prec_);
        for (const HPReal& c : chunk_totals_) combine.add(c);
        if (filled_ > 0) combine.add(current_.value());
        return combine.value();
    }

    long long terms_seen() const { return terms_; }

private:
    void flush() {
        chunk_totals_.push_back(current_.value());
        current_.reset();
        filled_ = 0;
    }

    Prec prec_;
    size_t chunk_size_;
    size_t filled_ = 0;
    long long terms_ = 0;
    CompensatedAccumulator current_;
    std::vector<HPReal> chunk_totals_;
};

/// Sum of a finite sequence under the deterministic chunked contract.
/// Empty input sums to 0 at the given precision.
inline HPReal compensated_sum(std::span<const HPReal> terms, size_t chunk_size, Prec prec) {
    ChunkedAccumulator acc(prec, chunk_size);
    for (const HPReal& t : terms) acc.add(t);
    return acc.total();
}

inline HPReal compensated_sum(const std::vector<HPReal>& terms, size_t chunk_size, Prec prec) {
    return compensated_sum(std::span<const HPReal>(terms.data(), terms.size()), chunk_size, prec);
}

}  // namespace bbg

#endif  // BBG_SUMMATION_HPP
