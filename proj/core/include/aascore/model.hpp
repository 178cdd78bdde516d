#ifndef AASCORE_MODEL_HPP
#define AASCORE_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aascore {

/// The seven attack classes of the corpus. Closed enumeration: nothing
/// outside this list is representable.
enum class AttackClass : std::uint8_t {
    WhiteBoxJailbreak,
    BlackBoxJailbreak,
    PromptInjection,
    Evasion,
    ModelExtraction,
    ModelInference,
    PoisoningTrojanBackdoor,
};

inline constexpr int kAttackClassCount = 7;

enum class FrameworkId : std::uint8_t {
    Dread,
    Cvss31Base,
    OwaspRR,
    SsvcSupplier,
};

inline constexpr int kFrameworkCount = 4;

/// Severity band for the numeric frameworks (DREAD, CVSS, OWASP).
enum class NumericSeverity : std::uint8_t { Note, Low, Medium, High, Critical };

/// Patch-priority decision of the SSVC supplier tree, ordered from least
/// to most urgent.
enum class SsvcDecision : std::uint8_t { Defer, Scheduled, OutOfCycle, Immediate };

/// A severity label is either a numeric-framework band or an SSVC decision;
/// the two sub-enumerations are disjoint and a label always knows which
/// family it belongs to.
class SeverityLabel {
public:
    static SeverityLabel numeric(NumericSeverity s) { return SeverityLabel(s); }
    static SeverityLabel decision(SsvcDecision d) { return SeverityLabel(d); }

    bool is_numeric() const { return numeric_; }
    bool is_decision() const { return !numeric_; }

    NumericSeverity as_numeric() const {
        if (!numeric_) throw std::logic_error("SeverityLabel: not a numeric band");
        return band_;
    }
    SsvcDecision as_decision() const {
        if (numeric_) throw std::logic_error("SeverityLabel: not an SSVC decision");
        return decision_;
    }

    bool operator==(const SeverityLabel&) const = default;

private:
    explicit SeverityLabel(NumericSeverity s) : numeric_(true), band_(s) {}
    explicit SeverityLabel(SsvcDecision d) : numeric_(false), decision_(d) {}

    bool numeric_;
    NumericSeverity band_{NumericSeverity::Note};
    SsvcDecision decision_{SsvcDecision::Defer};
};

using AssessorId = std::string;

/// One of the 56 corpus attacks: identity and provenance only, no attack
/// mechanics.
struct AttackRecord {
    std::string id;
    std::string name;
    AttackClass attack_class{AttackClass::WhiteBoxJailbreak};
    bool open_source{false};
    std::string citation_key;

    bool operator==(const AttackRecord&) const = default;
};

/// Raised by validate_record and the enum parsers; `field` names the
/// offending field.
class ValidationError : public std::runtime_error {
public:
    enum class Code { EmptyId, UnknownClass };

    ValidationError(Code code, std::string field, const std::string& message)
        : std::runtime_error(message), code_(code), field_(std::move(field)) {}

    Code code() const { return code_; }
    const std::string& field() const { return field_; }

private:
    Code code_;
    std::string field_;
};

std::string_view to_string(AttackClass c);
std::string_view to_string(FrameworkId f);
std::string_view to_string(NumericSeverity s);
std::string_view to_string(SsvcDecision d);
std::string_view to_string(const SeverityLabel& label);

/// Parses a class token as written in corpus files (e.g. "PromptInjection").
/// Throws ValidationError{UnknownClass} for anything else.
AttackClass attack_class_from_string(std::string_view token);

/// Parses a framework token ("dread", "cvss", "owasp", "ssvc").
FrameworkId framework_from_string(std::string_view token);

/// Returns the record unchanged if all invariants hold; throws
/// ValidationError naming the offending field otherwise.
AttackRecord validate_record(AttackRecord record);

} // namespace aascore

#endif
