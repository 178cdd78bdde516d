#include "aascore/owasp.hpp"

#include "aascore/dread.hpp"

namespace aascore {

std::string_view to_string(OwaspBand b) {
    switch (b) {
    case OwaspBand::Low: return "Low";
    case OwaspBand::Medium: return "Medium";
    case OwaspBand::High: return "High";
    }
    return "?";
}

OwaspSubscores owasp_subscores(const OwaspVector& v) {
    OwaspSubscores s;
    s.threat_agent = (v.skill_level + v.motivation + v.opportunity + v.size) / 4.0;
    s.vulnerability =
        (v.ease_of_discovery + v.ease_of_exploit + v.awareness + v.intrusion_detection) / 4.0;
    s.technical_impact =
        (v.loss_confidentiality + v.loss_integrity + v.loss_availability) / 3.0;
    s.business_impact =
        (v.financial_damage + v.reputation_damage + v.non_compliance + v.privacy_violation) /
        4.0;
    return s;
}

OwaspBand owasp_band(double value) {
    if (value < 3.0) return OwaspBand::Low;
    if (value < 6.0) return OwaspBand::Medium;
    return OwaspBand::High;
}

NumericSeverity owasp_matrix_label(OwaspBand likelihood_level, OwaspBand impact_level) {
    static constexpr NumericSeverity matrix[3][3] = {
        // likelihood:  Low                     Medium                  High
        {NumericSeverity::Note, NumericSeverity::Low, NumericSeverity::Medium},      // impact Low
        {NumericSeverity::Low, NumericSeverity::Medium, NumericSeverity::High},      // impact Medium
        {NumericSeverity::Medium, NumericSeverity::High, NumericSeverity::Critical}, // impact High
    };
    return matrix[static_cast<int>(impact_level)][static_cast<int>(likelihood_level)];
}

OwaspScoreResult owasp_evaluate(const OwaspVector& v) {
    OwaspScoreResult result;
    result.subscores = owasp_subscores(v);
    result.likelihood = (result.subscores.threat_agent + result.subscores.vulnerability) / 2.0;
    result.impact = (result.subscores.technical_impact + result.subscores.business_impact) / 2.0;
    // Likelihood and impact both live on [0,10]; the product is scaled back
    // to [0,10] and rounded once, at the end.
    result.numeric = round_half_up_1(result.likelihood * result.impact / 10.0);
    result.likelihood_level = owasp_band(result.likelihood);
    result.impact_level = owasp_band(result.impact);
    result.label = owasp_matrix_label(result.likelihood_level, result.impact_level);
    return result;
}

} // namespace aascore
