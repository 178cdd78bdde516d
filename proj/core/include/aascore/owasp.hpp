#ifndef AASCORE_OWASP_HPP
#define AASCORE_OWASP_HPP

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

enum class OwaspBand : std::uint8_t { Low, Medium, High };

std::string_view to_string(OwaspBand b);

struct OwaspSubscores {
    double threat_agent{0.0};     // mean(SL, M, O, S)
    double vulnerability{0.0};    // mean(ED, EE, A, ID)
    double technical_impact{0.0}; // mean(LC, LI, LA)
    double business_impact{0.0};  // mean(FD, RD, NC, PV)
};

struct OwaspScoreResult {
    OwaspSubscores subscores;
    double likelihood{0.0}; // (TA + V) / 2
    double impact{0.0};     // (TI + BI) / 2
    double numeric{0.0};    // likelihood * impact / 10, half-up to one decimal
    OwaspBand likelihood_level{OwaspBand::Low};
    OwaspBand impact_level{OwaspBand::Low};
    NumericSeverity label{NumericSeverity::Note}; // from the criticality matrix
};

/// The four group means at full precision, no intermediate rounding.
OwaspSubscores owasp_subscores(const OwaspVector& v);

/// [0,3) Low, [3,6) Medium, [6,10] High.
OwaspBand owasp_band(double value);

/// Criticality-matrix lookup. Impact selects the row, likelihood the column:
///   impact High:   Low->Medium, Medium->High,   High->Critical
///   impact Medium: Low->Low,    Medium->Medium, High->High
///   impact Low:    Low->Note,   Medium->Low,    High->Medium
NumericSeverity owasp_matrix_label(OwaspBand likelihood_level, OwaspBand impact_level);

OwaspScoreResult owasp_evaluate(const OwaspVector& v);

} // namespace aascore

#endif
