#include "aascore/aggregate.hpp"

#include <cmath>

#include "aascore/ssvc.hpp"

namespace aascore {

int aggregate_numeric(std::span<const int> values) {
    if (values.empty())
        throw AggregationError(AggregationError::Code::EmptyInput,
                               "aggregate_numeric: no values");
    long sum = 0;
    for (int v : values) sum += v;
    const double mean = static_cast<double>(sum) / static_cast<double>(values.size());
    return static_cast<int>(std::floor(mean + 0.5));
}

namespace {

template <typename Vec, typename Value>
std::vector<Value> column(std::span<const Vec> inputs, Value Vec::* member) {
    std::vector<Value> out;
    out.reserve(inputs.size());
    for (const Vec& v : inputs) out.push_back(v.*member);
    return out;
}

template <typename Vec>
int numeric_column(std::span<const Vec> inputs, int Vec::* member) {
    std::vector<int> vals;
    vals.reserve(inputs.size());
    for (const Vec& v : inputs) vals.push_back(v.*member);
    return aggregate_numeric(vals);
}

void require_nonempty(size_t n, const char* what) {
    if (n == 0)
        throw AggregationError(AggregationError::Code::EmptyInput,
                               std::string(what) + ": empty bundle");
}

} // namespace

DreadVector aggregate_dread(std::span<const DreadVector> inputs) {
    require_nonempty(inputs.size(), "aggregate_dread");
    DreadVector out;
    out.damage = numeric_column(inputs, &DreadVector::damage);
    out.reproducibility = numeric_column(inputs, &DreadVector::reproducibility);
    out.exploitability = numeric_column(inputs, &DreadVector::exploitability);
    out.affected_users = numeric_column(inputs, &DreadVector::affected_users);
    out.discoverability = numeric_column(inputs, &DreadVector::discoverability);
    return out;
}

CvssVector aggregate_cvss(std::span<const CvssVector> inputs) {
    require_nonempty(inputs.size(), "aggregate_cvss");
    CvssVector out;
    auto agg = [&](auto member, const auto& scale) {
        auto vals = column(inputs, member);
        return aggregate_ordinal(std::span(std::as_const(vals)), scale);
    };
    out.attack_vector = agg(&CvssVector::attack_vector, scales::av);
    out.attack_complexity = agg(&CvssVector::attack_complexity, scales::ac);
    out.privileges_required = agg(&CvssVector::privileges_required, scales::pr);
    out.user_interaction = agg(&CvssVector::user_interaction, scales::ui);
    out.scope = agg(&CvssVector::scope, scales::scope);
    out.confidentiality = agg(&CvssVector::confidentiality, scales::impact);
    out.integrity = agg(&CvssVector::integrity, scales::impact);
    out.availability = agg(&CvssVector::availability, scales::impact);
    return out;
}

OwaspVector aggregate_owasp(std::span<const OwaspVector> inputs) {
    require_nonempty(inputs.size(), "aggregate_owasp");
    OwaspVector out;
    for (int f = 0; f < kOwaspFactorCount; ++f) {
        std::vector<int> vals;
        vals.reserve(inputs.size());
        for (const OwaspVector& v : inputs) vals.push_back(v.factor(f));
        out.factor(f) = aggregate_numeric(vals);
    }
    return out;
}

SsvcVector aggregate_ssvc(std::span<const SsvcVector> inputs) {
    require_nonempty(inputs.size(), "aggregate_ssvc");
    SsvcVector out;
    auto agg = [&](auto member, const auto& scale) {
        auto vals = column(inputs, member);
        return aggregate_ordinal(std::span(std::as_const(vals)), scale);
    };
    out.exploitation = agg(&SsvcVector::exploitation, scales::exploitation);
    out.automatable = agg(&SsvcVector::automatable, scales::automatable);
    out.value_density = agg(&SsvcVector::value_density, scales::value_density);
    out.technical_impact = agg(&SsvcVector::technical_impact, scales::tech_impact);
    out.safety_impact = agg(&SsvcVector::safety_impact, scales::safety_impact);
    out.utility = derive_utility(out.automatable, out.value_density);
    return out;
}

ConsensusVector aggregate_bundle(std::span<const FactorVector> assessor_vectors,
                                 FrameworkId framework, std::vector<AssessorId> contributors) {
    require_nonempty(assessor_vectors.size(), "aggregate_bundle");
    for (const FactorVector& v : assessor_vectors)
        if (framework_of(v) != framework)
            throw AggregationError(AggregationError::Code::FrameworkMismatch,
                                   "aggregate_bundle: vector framework " +
                                       std::string(to_string(framework_of(v))) +
                                       " does not match " + std::string(to_string(framework)));
    ConsensusVector out;
    out.contributors = std::move(contributors);
    switch (framework) {
    case FrameworkId::Dread: {
        std::vector<DreadVector> vs;
        for (const auto& v : assessor_vectors) vs.push_back(std::get<DreadVector>(v));
        out.consensus = aggregate_dread(vs);
        break;
    }
    case FrameworkId::Cvss31Base: {
        std::vector<CvssVector> vs;
        for (const auto& v : assessor_vectors) vs.push_back(std::get<CvssVector>(v));
        out.consensus = aggregate_cvss(vs);
        break;
    }
    case FrameworkId::OwaspRR: {
        std::vector<OwaspVector> vs;
        for (const auto& v : assessor_vectors) vs.push_back(std::get<OwaspVector>(v));
        out.consensus = aggregate_owasp(vs);
        break;
    }
    case FrameworkId::SsvcSupplier: {
        std::vector<SsvcVector> vs;
        for (const auto& v : assessor_vectors) vs.push_back(std::get<SsvcVector>(v));
        out.consensus = aggregate_ssvc(vs);
        break;
    }
    }
    return out;
}

} // namespace aascore
