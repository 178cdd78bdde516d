#include "aascore/dread.hpp"

#include <cmath>

namespace aascore {

double round_half_up_1(double value) {
    return std::floor(value * 10.0 + 0.5) / 10.0;
}

DreadScoreResult dread_score(const DreadVector& v) {
    const double mean = (v.damage + v.reproducibility + v.exploitability + v.affected_users +
                         v.discoverability) /
                        5.0;
    DreadScoreResult result;
    result.score = round_half_up_1(mean);
    result.label = dread_label(result.score);
    return result;
}

NumericSeverity dread_label(double score) {
    if (score < 4.0) return NumericSeverity::Low;
    if (score < 7.0) return NumericSeverity::Medium;
    return NumericSeverity::High;
}

} // namespace aascore
