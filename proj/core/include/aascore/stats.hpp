#ifndef AASCORE_STATS_HPP
#define AASCORE_STATS_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

class StatsError : public std::runtime_error {
public:
    enum class Code { EmptyInput, ZeroMean, MissingClassData };
    StatsError(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

struct CovResult {
    double mean{0.0};
    double sigma{0.0};       // population standard deviation (divide by n)
    double cov_percent{0.0}; // 100 * sigma / mean
};

/// Mean, population sigma, and coefficient of variation of a numeric series.
/// Throws EmptyInput on an empty series, ZeroMean when the mean is zero
/// (the CoV is undefined there).
CovResult cov_percent(std::span<const double> series);
CovResult cov_percent(std::span<const int> series);

struct EntropyResult {
    std::vector<std::string> modes; // all values attaining the maximum count
    int mode_count{0};
    int total{0};
    double p{0.0};            // mode_count / total
    double entropy_bits{0.0}; // base-2 Shannon entropy over observed values
};

/// Shannon entropy of a categorical series, with the mode set and its
/// relative frequency. Ties are listed in sorted order.
EntropyResult shannon_entropy(std::span<const std::string> series);

/// One (class x framework x factor) row of the variability analysis:
/// CoV statistics for numeric factors, mode/p/entropy for qualitative ones.
struct VariabilityRow {
    AttackClass attack_class{AttackClass::WhiteBoxJailbreak};
    FrameworkId framework{FrameworkId::Dread};
    std::string factor;
    std::optional<CovResult> cov;          // DREAD and OWASP factors
    std::optional<EntropyResult> entropy;  // CVSS and SSVC factors
};

/// A consensus assignment for one attack, the statistics module's input.
struct AssessedAttack {
    AttackRecord record;
    std::map<FrameworkId, FactorVector> consensus;
};

inline constexpr std::array<std::string_view, 5> kDreadFactorNames = {
    "D", "R", "E", "A", "Dsc"};
inline constexpr std::array<std::string_view, 8> kCvssFactorNames = {
    "AV", "AC", "PR", "UI", "S", "C", "I", "A"};
inline constexpr std::array<std::string_view, 6> kSsvcFactorNames = {
    "E", "A", "V", "U", "T", "P"};

/// Per-class, per-factor rows over the attacks that carry the framework:
/// CoV rows for DREAD and OWASP, entropy rows for CVSS and SSVC. Classes
/// appear in enum order, factors in vector order. Throws MissingClassData
/// when a class present in the corpus has no assessment for a framework
/// that other classes carry.
std::vector<VariabilityRow> build_class_tables(std::span<const AssessedAttack> attacks);

/// The factor values of `v` as display strings, in canonical factor order.
std::vector<std::string> factor_values(const FactorVector& v);

/// Factor names for a framework, in canonical order.
std::vector<std::string> factor_names(FrameworkId framework);

} // namespace aascore

#endif
