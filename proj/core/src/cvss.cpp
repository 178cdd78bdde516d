#include "aascore/cvss.hpp"

#include <algorithm>
#include <cmath>

namespace aascore {

namespace cvss_weights {

double weight(CvssAv v) {
    switch (v) {
    case CvssAv::Network: return 0.85;
    case CvssAv::Adjacent: return 0.62;
    case CvssAv::Local: return 0.55;
    case CvssAv::Physical: return 0.22;
    }
    return 0.0;
}

double weight(CvssAc v) { return v == CvssAc::Low ? 0.77 : 0.44; }

double weight(CvssPr v, CvssScope scope) {
    if (scope == CvssScope::Changed) {
        switch (v) {
        case CvssPr::None: return 0.85;
        case CvssPr::Low: return 0.68;
        case CvssPr::High: return 0.50;
        }
    } else {
        switch (v) {
        case CvssPr::None: return 0.85;
        case CvssPr::Low: return 0.62;
        case CvssPr::High: return 0.27;
        }
    }
    return 0.0;
}

double weight(CvssUi v) { return v == CvssUi::None ? 0.85 : 0.62; }

double weight(CvssImpactValue v) {
    switch (v) {
    case CvssImpactValue::None: return 0.00;
    case CvssImpactValue::Low: return 0.22;
    case CvssImpactValue::High: return 0.56;
    }
    return 0.0;
}

} // namespace cvss_weights

double cvss_roundup(double value) {
    // Smallest one-decimal value >= value; the 1e-9 guard keeps inputs that
    // are one ulp above an exact tenth (e.g. 8.6000000000000005) from being
    // pushed to the next tenth.
    return std::ceil(value * 10.0 - 1e-9) / 10.0;
}

double cvss_exploitability(const CvssVector& v) {
    using namespace cvss_weights;
    return 8.22 * weight(v.attack_vector) * weight(v.attack_complexity) *
           weight(v.privileges_required, v.scope) * weight(v.user_interaction);
}

CvssImpact cvss_impact(const CvssVector& v) {
    using namespace cvss_weights;
    const double c = weight(v.confidentiality);
    const double i = weight(v.integrity);
    const double a = weight(v.availability);
    const double iss = 1.0 - (1.0 - c) * (1.0 - i) * (1.0 - a);
    double impact;
    if (v.scope == CvssScope::Unchanged)
        impact = 6.42 * iss;
    else
        impact = 7.52 * (iss - 0.029) - 3.25 * std::pow(iss - 0.02, 15.0);
    return {iss, impact};
}

CvssScoreResult cvss_base(const CvssVector& v) {
    CvssScoreResult result;
    const CvssImpact imp = cvss_impact(v);
    result.iss = imp.iss;
    result.impact = imp.impact;
    result.exploitability = cvss_exploitability(v);
    if (imp.iss <= 0.0) {
        result.base = 0.0;
    } else if (v.scope == CvssScope::Unchanged) {
        result.base = cvss_roundup(std::min(imp.impact + result.exploitability, 10.0));
    } else {
        result.base = cvss_roundup(std::min(1.08 * (imp.impact + result.exploitability), 10.0));
    }
    result.label = cvss_label(result.base);
    return result;
}

NumericSeverity cvss_label(double base) {
    if (base < 1.0) return NumericSeverity::Note;
    if (base < 4.0) return NumericSeverity::Low;
    if (base < 7.0) return NumericSeverity::Medium;
    if (base < 9.0) return NumericSeverity::High;
    return NumericSeverity::Critical;
}

} // namespace aascore
