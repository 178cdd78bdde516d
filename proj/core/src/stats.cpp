#include "aascore/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace aascore {

CovResult cov_percent(std::span<const double> series) {
    if (series.empty())
        throw StatsError(StatsError::Code::EmptyInput, "cov_percent: empty series");
    const double n = static_cast<double>(series.size());
    double sum = 0.0;
    for (double x : series) sum += x;
    const double mean = sum / n;
    double sq = 0.0;
    for (double x : series) sq += (x - mean) * (x - mean);
    const double sigma = std::sqrt(sq / n);
    if (mean == 0.0)
        throw StatsError(StatsError::Code::ZeroMean,
                         "cov_percent: zero mean, coefficient of variation undefined");
    return {mean, sigma, 100.0 * sigma / mean};
}

CovResult cov_percent(std::span<const int> series) {
    std::vector<double> d(series.begin(), series.end());
    return cov_percent(std::span<const double>(d));
}

EntropyResult shannon_entropy(std::span<const std::string> series) {
    if (series.empty())
        throw StatsError(StatsError::Code::EmptyInput, "shannon_entropy: empty series");
    std::map<std::string, int> counts;
    for (const auto& v : series) ++counts[v];
    EntropyResult out;
    out.total = static_cast<int>(series.size());
    const double n = static_cast<double>(out.total);
    for (const auto& [value, count] : counts) {
        const double p = count / n;
        out.entropy_bits -= p * std::log2(p);
        if (count > out.mode_count) out.mode_count = count;
    }
    if (out.entropy_bits < 0.0) out.entropy_bits = 0.0; // -0 from a constant series
    for (const auto& [value, count] : counts)
        if (count == out.mode_count) out.modes.push_back(value);
    out.p = out.mode_count / n;
    return out;
}

std::vector<std::string> factor_names(FrameworkId framework) {
    std::vector<std::string> out;
    switch (framework) {
    case FrameworkId::Dread:
        out.assign(kDreadFactorNames.begin(), kDreadFactorNames.end());
        break;
    case FrameworkId::Cvss31Base:
        out.assign(kCvssFactorNames.begin(), kCvssFactorNames.end());
        break;
    case FrameworkId::OwaspRR:
        out.assign(kOwaspFactorKeys.begin(), kOwaspFactorKeys.end());
        break;
    case FrameworkId::SsvcSupplier:
        out.assign(kSsvcFactorNames.begin(), kSsvcFactorNames.end());
        break;
    }
    return out;
}

std::vector<std::string> factor_values(const FactorVector& fv) {
    std::vector<std::string> out;
    if (const auto* d = std::get_if<DreadVector>(&fv)) {
        out = {std::to_string(d->damage), std::to_string(d->reproducibility),
               std::to_string(d->exploitability), std::to_string(d->affected_users),
               std::to_string(d->discoverability)};
    } else if (const auto* c = std::get_if<CvssVector>(&fv)) {
        for (char ch : {code_of(c->attack_vector), code_of(c->attack_complexity),
                        code_of(c->privileges_required), code_of(c->user_interaction),
                        code_of(c->scope), code_of(c->confidentiality), code_of(c->integrity),
                        code_of(c->availability)})
            out.emplace_back(1, ch);
    } else if (const auto* o = std::get_if<OwaspVector>(&fv)) {
        for (int i = 0; i < kOwaspFactorCount; ++i) out.push_back(std::to_string(o->factor(i)));
    } else {
        const auto& s = std::get<SsvcVector>(fv);
        for (char ch : {code_of(s.exploitation), code_of(s.automatable),
                        code_of(s.value_density), code_of(s.utility),
                        code_of(s.technical_impact), code_of(s.safety_impact)})
            out.emplace_back(1, ch);
    }
    return out;
}

namespace {

bool is_numeric_framework(FrameworkId f) {
    return f == FrameworkId::Dread || f == FrameworkId::OwaspRR;
}

} // namespace

std::vector<VariabilityRow> build_class_tables(std::span<const AssessedAttack> attacks) {
    // class -> framework -> factor -> column of values across the class
    std::map<AttackClass, std::map<FrameworkId, std::vector<std::vector<std::string>>>> columns;
    std::map<FrameworkId, bool> framework_seen;

    for (const AssessedAttack& a : attacks) {
        for (const auto& [fw, vec] : a.consensus) {
            framework_seen[fw] = true;
            auto values = factor_values(vec);
            auto& cols = columns[a.record.attack_class][fw];
            cols.resize(values.size());
            for (size_t i = 0; i < values.size(); ++i) cols[i].push_back(values[i]);
        }
    }

    std::vector<VariabilityRow> rows;
    for (const auto& [cls, by_framework] : columns) {
        for (const auto& [fw, seen] : framework_seen) {
            if (!seen) continue;
            auto it = by_framework.find(fw);
            if (it == by_framework.end())
                throw StatsError(StatsError::Code::MissingClassData,
                                 "class " + std::string(to_string(cls)) +
                                     " has no assessments for framework " +
                                     std::string(to_string(fw)));
            const auto names = factor_names(fw);
            for (size_t f = 0; f < it->second.size(); ++f) {
                VariabilityRow row;
                row.attack_class = cls;
                row.framework = fw;
                row.factor = names[f];
                if (is_numeric_framework(fw)) {
                    std::vector<int> series;
                    for (const auto& s : it->second[f]) series.push_back(std::stoi(s));
                    bool all_zero = std::all_of(series.begin(), series.end(),
                                                [](int x) { return x == 0; });
                    if (all_zero) {
                        // CoV undefined at zero mean; keep the row with an
                        // unusable CoV instead of aborting the whole table.
                        row.cov = CovResult{0.0, 0.0, std::numeric_limits<double>::quiet_NaN()};
                    } else {
                        row.cov = cov_percent(series);
                    }
                } else {
                    row.entropy = shannon_entropy(it->second[f]);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

} // namespace aascore
