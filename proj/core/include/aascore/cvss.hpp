#ifndef AASCORE_CVSS_HPP
#define AASCORE_CVSS_HPP

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

/// CVSS v3.1 factor coefficients. PR depends on scope.
namespace cvss_weights {

double weight(CvssAv v);
double weight(CvssAc v);
double weight(CvssPr v, CvssScope scope);
double weight(CvssUi v);
double weight(CvssImpactValue v);

} // namespace cvss_weights

struct CvssScoreResult {
    double iss{0.0};            // 1 - (1-C)(1-I)(1-A)
    double impact{0.0};         // scope-dependent impact sub-score
    double exploitability{0.0}; // 8.22 * AV * AC * PR * UI
    double base{0.0};           // one-decimal base score
    NumericSeverity label{NumericSeverity::Note};
};

/// 8.22 * w(AV) * w(AC) * w(PR|scope) * w(UI); strictly positive.
double cvss_exploitability(const CvssVector& v);

struct CvssImpact {
    double iss;
    double impact;
};

/// ISS and the scope-dependent impact sub-score.
/// S:U -> 6.42*iss; S:C -> 7.52*(iss-0.029) - 3.25*(iss-0.02)^15.
CvssImpact cvss_impact(const CvssVector& v);

/// Base score. Zero impact (iss <= 0) forces base = 0. Otherwise
/// S:U -> roundup(min(impact+exploitability, 10)) and
/// S:C -> roundup(min(1.08*(impact+exploitability), 10)), where roundup is
/// the smallest one-decimal value >= the argument (with a small epsilon
/// guard against binary representation overshoot).
CvssScoreResult cvss_base(const CvssVector& v);

/// Severity banding over [0,10]: [0,1) Note, [1,4) Low, [4,7) Medium,
/// [7,9) High, [9,10] Critical.
NumericSeverity cvss_label(double base);

/// Ceiling to one decimal, the v3.1 "roundup".
double cvss_roundup(double value);

} // namespace aascore

#endif
