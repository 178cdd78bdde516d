#include "aascore/chart.hpp"

namespace aascore {

std::vector<ChartPoint> chart_encode(const CvssVector& v) {
    auto av = [](CvssAv x) {
        switch (x) {
        case CvssAv::Network: return 1;
        case CvssAv::Adjacent: return 2;
        case CvssAv::Local: return 3;
        case CvssAv::Physical: return 4;
        }
        return 0;
    };
    auto three = [](int listing_rank) { return listing_rank + 1; };  // 1..3
    auto two = [](bool second) { return second ? 4 : 2; };           // {2,4}
    return {
        {"AV", av(v.attack_vector)},
        {"AC", two(v.attack_complexity == CvssAc::High)},
        {"PR", three(static_cast<int>(v.privileges_required))},
        {"UI", two(v.user_interaction == CvssUi::Required)},
        {"S", two(v.scope == CvssScope::Changed)},
        {"C", three(static_cast<int>(v.confidentiality))},
        {"I", three(static_cast<int>(v.integrity))},
        {"A", three(static_cast<int>(v.availability))},
    };
}

std::vector<ChartPoint> chart_encode(const SsvcVector& v) {
    auto three = [](int listing_rank) { return listing_rank + 1; };  // 1..3
    auto two = [](bool second) { return second ? 3 : 1; };           // {1,3}
    return {
        {"E", three(static_cast<int>(v.exploitation))},
        {"A", two(v.automatable == SsvcAutomatable::Yes)},
        {"V", two(v.value_density == SsvcValueDensity::Concentrated)},
        {"U", three(static_cast<int>(v.utility))},
        {"T", two(v.technical_impact == SsvcTechImpact::Total)},
        {"P", two(v.safety_impact == SsvcSafetyImpact::Significant)},
    };
}

} // namespace aascore
