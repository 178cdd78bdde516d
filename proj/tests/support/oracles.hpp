// Test-only reference implementations, kept independent of the library code
// they check: a straight-line CVSS evaluator in long double with its own
// coefficient tables, a two-pass standard deviation, and generators for
// random valid vectors.

#ifndef AASCORE_TESTS_ORACLES_HPP
#define AASCORE_TESTS_ORACLES_HPP

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "aascore/ssvc.hpp"
#include "aascore/vectors.hpp"

namespace oracle {

// Brute-force CVSS v3.1 base evaluation straight from the coefficient
// tables. Shares no code with aascore::cvss_base.
inline double cvss_base_reference(const aascore::CvssVector& v) {
    using namespace aascore;
    long double av = 0, ac = 0, pr = 0, ui = 0, c = 0, i = 0, a = 0;
    switch (v.attack_vector) {
    case CvssAv::Network: av = 0.85L; break;
    case CvssAv::Adjacent: av = 0.62L; break;
    case CvssAv::Local: av = 0.55L; break;
    case CvssAv::Physical: av = 0.22L; break;
    }
    ac = v.attack_complexity == CvssAc::Low ? 0.77L : 0.44L;
    const bool changed = v.scope == CvssScope::Changed;
    switch (v.privileges_required) {
    case CvssPr::None: pr = 0.85L; break;
    case CvssPr::Low: pr = changed ? 0.68L : 0.62L; break;
    case CvssPr::High: pr = changed ? 0.50L : 0.27L; break;
    }
    ui = v.user_interaction == CvssUi::None ? 0.85L : 0.62L;
    auto impact_weight = [](CvssImpactValue w) -> long double {
        switch (w) {
        case CvssImpactValue::None: return 0.0L;
        case CvssImpactValue::Low: return 0.22L;
        case CvssImpactValue::High: return 0.56L;
        }
        return 0.0L;
    };
    c = impact_weight(v.confidentiality);
    i = impact_weight(v.integrity);
    a = impact_weight(v.availability);

    const long double exploitability = 8.22L * av * ac * pr * ui;
    const long double iss = 1.0L - (1.0L - c) * (1.0L - i) * (1.0L - a);
    if (iss <= 0.0L) return 0.0;
    long double raw;
    if (!changed) {
        const long double impact = 6.42L * iss;
        raw = impact + exploitability;
        if (raw > 10.0L) raw = 10.0L;
    } else {
        const long double impact =
            7.52L * (iss - 0.029L) - 3.25L * std::pow(iss - 0.02L, 15.0L);
        raw = 1.08L * (impact + exploitability);
        if (raw > 10.0L) raw = 10.0L;
    }
    // ceiling to one decimal with the same representation guard the adopted
    // rule uses
    return static_cast<double>(std::ceil(raw * 10.0L - 1e-9L) / 10.0L);
}

/// All 4*2*3*2*2*3*3*3 = 2592 possible CVSS base vectors.
inline std::vector<aascore::CvssVector> all_cvss_vectors() {
    using namespace aascore;
    std::vector<CvssVector> out;
    out.reserve(2592);
    for (auto av : {CvssAv::Network, CvssAv::Adjacent, CvssAv::Local, CvssAv::Physical})
        for (auto ac : {CvssAc::Low, CvssAc::High})
            for (auto pr : {CvssPr::None, CvssPr::Low, CvssPr::High})
                for (auto ui : {CvssUi::None, CvssUi::Required})
                    for (auto s : {CvssScope::Unchanged, CvssScope::Changed})
                        for (auto c : {CvssImpactValue::None, CvssImpactValue::Low,
                                       CvssImpactValue::High})
                            for (auto i : {CvssImpactValue::None, CvssImpactValue::Low,
                                           CvssImpactValue::High})
                                for (auto a : {CvssImpactValue::None, CvssImpactValue::Low,
                                               CvssImpactValue::High})
                                    out.push_back({av, ac, pr, ui, s, c, i, a});
    return out;
}

/// Two-pass population standard deviation.
inline double sigma_reference(std::span<const double> xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size()));
}

// ---------------------------------------------------------------------------
// Random valid vectors (fixed seeds keep runs reproducible).

inline aascore::CvssVector random_cvss(std::mt19937& rng) {
    using namespace aascore;
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    return {static_cast<CvssAv>(pick(4)),          static_cast<CvssAc>(pick(2)),
            static_cast<CvssPr>(pick(3)),          static_cast<CvssUi>(pick(2)),
            static_cast<CvssScope>(pick(2)),       static_cast<CvssImpactValue>(pick(3)),
            static_cast<CvssImpactValue>(pick(3)), static_cast<CvssImpactValue>(pick(3))};
}

inline aascore::DreadVector random_dread(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(1, 10);
    return {d(rng), d(rng), d(rng), d(rng), d(rng)};
}

inline aascore::OwaspVector random_owasp(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 10);
    aascore::OwaspVector v;
    for (int i = 0; i < aascore::kOwaspFactorCount; ++i) v.factor(i) = d(rng);
    return v;
}

inline aascore::SsvcVector random_ssvc(std::mt19937& rng) {
    using namespace aascore;
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    SsvcVector v;
    v.exploitation = static_cast<SsvcExploitation>(pick(3));
    v.automatable = static_cast<SsvcAutomatable>(pick(2));
    v.value_density = static_cast<SsvcValueDensity>(pick(2));
    v.technical_impact = static_cast<SsvcTechImpact>(pick(2));
    v.safety_impact = static_cast<SsvcSafetyImpact>(pick(2));
    v.utility = derive_utility(v.automatable, v.value_density);
    return v;
}

} // namespace oracle

#endif
