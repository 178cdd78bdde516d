#ifndef AASCORE_DREAD_HPP
#define AASCORE_DREAD_HPP

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

struct DreadScoreResult {
    double score{0.0}; // factor mean, half-up to one decimal
    NumericSeverity label{NumericSeverity::Low};
};

/// Mean of the five factors, rounded half-up to one decimal.
DreadScoreResult dread_score(const DreadVector& v);

/// [1,4) Low, [4,7) Medium, >= 7 High.
NumericSeverity dread_label(double score);

/// Rounds half-up to one decimal (0.05 goes up); all scores are nonnegative.
double round_half_up_1(double value);

} // namespace aascore

#endif
