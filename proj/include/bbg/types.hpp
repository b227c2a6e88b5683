#ifndef BBG_TYPES_HPP
#define BBG_TYPES_HPP

#include <string>

#include "bbg/real.hpp"

namespace bbg {

enum class ErrorEstimateKind {
    rigorous_bound,  // analytic tail bound, true error is provably smaller
    heuristic        // extrapolated from observed partial sums
};

/// Value of a truncated series together with how far it was summed and an
/// error estimate whose nature (rigorous vs heuristic) is flagged.
struct SeriesResult {
    HPReal value;
    long long truncation_index = 0;
    HPReal error_estimate;
    ErrorEstimateKind error_kind = ErrorEstimateKind::heuristic;
    std::string provenance;
};

inline const char* to_string(ErrorEstimateKind k) {
    return k == ErrorEstimateKind::rigorous_bound ? "rigorous" : "heuristic";
}

}  // namespace bbg

#endif  // BBG_TYPES_HPP
