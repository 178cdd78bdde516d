#ifndef AASCORE_AGGREGATE_HPP
#define AASCORE_AGGREGATE_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

class AggregationError : public std::runtime_error {
public:
    enum class Code { EmptyInput, FrameworkMismatch };
    AggregationError(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Arithmetic mean rounded half-up to the nearest integer.
int aggregate_numeric(std::span<const int> values);

/// Risk-increasing ordinal scale for one qualitative factor: values listed
/// from least to most severe, mapped to 0..k-1. Mixing factors is made
/// unrepresentable by the typed wrappers below.
template <typename Value, std::size_t N>
struct OrdinalScale {
    std::array<Value, N> ascending;

    int rank(Value v) const {
        for (std::size_t i = 0; i < N; ++i)
            if (ascending[i] == v) return static_cast<int>(i);
        return -1; // unreachable for closed enums
    }
    Value at(int rank) const { return ascending[static_cast<std::size_t>(rank)]; }
};

namespace scales {
// CVSS: AV P<L<A<N; AC H<L; PR H<L<N; UI R<N; S U<C; C/I/A N<L<H.
inline constexpr OrdinalScale<CvssAv, 4> av{
    {CvssAv::Physical, CvssAv::Local, CvssAv::Adjacent, CvssAv::Network}};
inline constexpr OrdinalScale<CvssAc, 2> ac{{CvssAc::High, CvssAc::Low}};
inline constexpr OrdinalScale<CvssPr, 3> pr{{CvssPr::High, CvssPr::Low, CvssPr::None}};
inline constexpr OrdinalScale<CvssUi, 2> ui{{CvssUi::Required, CvssUi::None}};
inline constexpr OrdinalScale<CvssScope, 2> scope{{CvssScope::Unchanged, CvssScope::Changed}};
inline constexpr OrdinalScale<CvssImpactValue, 3> impact{
    {CvssImpactValue::None, CvssImpactValue::Low, CvssImpactValue::High}};
// SSVC: E N<P<A; A N<Y; V D<C; T P<T; P M<S.
inline constexpr OrdinalScale<SsvcExploitation, 3> exploitation{
    {SsvcExploitation::None, SsvcExploitation::Poc, SsvcExploitation::Active}};
inline constexpr OrdinalScale<SsvcAutomatable, 2> automatable{
    {SsvcAutomatable::No, SsvcAutomatable::Yes}};
inline constexpr OrdinalScale<SsvcValueDensity, 2> value_density{
    {SsvcValueDensity::Diffuse, SsvcValueDensity::Concentrated}};
inline constexpr OrdinalScale<SsvcTechImpact, 2> tech_impact{
    {SsvcTechImpact::Partial, SsvcTechImpact::Total}};
inline constexpr OrdinalScale<SsvcSafetyImpact, 2> safety_impact{
    {SsvcSafetyImpact::Minimal, SsvcSafetyImpact::Significant}};
} // namespace scales

/// Ordinal consensus: map to ranks, take the mean, round half-up (an exact
/// half rounds toward the more severe value), map back. The result always
/// lies between the least and most severe input.
template <typename Value, std::size_t N>
Value aggregate_ordinal(std::span<const Value> values, const OrdinalScale<Value, N>& scale) {
    if (values.empty())
        throw AggregationError(AggregationError::Code::EmptyInput,
                               "aggregate_ordinal: no values");
    int sum = 0;
    for (Value v : values) sum += scale.rank(v);
    const double mean = static_cast<double>(sum) / static_cast<double>(values.size());
    // floor(mean + 0.5) on a nonnegative mean; risk-increasing scales make
    // "up" the more severe direction.
    const int rank = static_cast<int>(mean + 0.5);
    return scale.at(rank);
}

/// A consensus FactorVector plus the assessors that produced it.
struct ConsensusVector {
    FactorVector consensus;
    std::vector<AssessorId> contributors;
};

DreadVector aggregate_dread(std::span<const DreadVector> inputs);
CvssVector aggregate_cvss(std::span<const CvssVector> inputs);
OwaspVector aggregate_owasp(std::span<const OwaspVector> inputs);
/// SSVC consensus re-derives U from the consensus (A,V) instead of
/// aggregating the stored U values, so it can never violate the utility rule.
SsvcVector aggregate_ssvc(std::span<const SsvcVector> inputs);

/// Per-factor aggregation of same-framework vectors. Throws EmptyInput when
/// the bundle is empty and FrameworkMismatch when the vectors disagree on
/// framework or `framework` names a different one.
ConsensusVector aggregate_bundle(std::span<const FactorVector> assessor_vectors,
                                 FrameworkId framework,
                                 std::vector<AssessorId> contributors = {});

} // namespace aascore

#endif
