#include "aascore/model.hpp"

namespace aascore {

std::string_view to_string(AttackClass c) {
    switch (c) {
    case AttackClass::WhiteBoxJailbreak: return "WhiteBoxJailbreak";
    case AttackClass::BlackBoxJailbreak: return "BlackBoxJailbreak";
    case AttackClass::PromptInjection: return "PromptInjection";
    case AttackClass::Evasion: return "Evasion";
    case AttackClass::ModelExtraction: return "ModelExtraction";
    case AttackClass::ModelInference: return "ModelInference";
    case AttackClass::PoisoningTrojanBackdoor: return "PoisoningTrojanBackdoor";
    }
    return "?";
}

std::string_view to_string(FrameworkId f) {
    switch (f) {
    case FrameworkId::Dread: return "dread";
    case FrameworkId::Cvss31Base: return "cvss";
    case FrameworkId::OwaspRR: return "owasp";
    case FrameworkId::SsvcSupplier: return "ssvc";
    }
    return "?";
}

std::string_view to_string(NumericSeverity s) {
    switch (s) {
    case NumericSeverity::Note: return "Note";
    case NumericSeverity::Low: return "Low";
    case NumericSeverity::Medium: return "Medium";
    case NumericSeverity::High: return "High";
    case NumericSeverity::Critical: return "Critical";
    }
    return "?";
}

std::string_view to_string(SsvcDecision d) {
    switch (d) {
    case SsvcDecision::Defer: return "Defer";
    case SsvcDecision::Scheduled: return "Scheduled";
    case SsvcDecision::OutOfCycle: return "OutOfCycle";
    case SsvcDecision::Immediate: return "Immediate";
    }
    return "?";
}

std::string_view to_string(const SeverityLabel& label) {
    return label.is_numeric() ? to_string(label.as_numeric())
                              : to_string(label.as_decision());
}

AttackClass attack_class_from_string(std::string_view token) {
    static constexpr AttackClass all[] = {
        AttackClass::WhiteBoxJailbreak,    AttackClass::BlackBoxJailbreak,
        AttackClass::PromptInjection,      AttackClass::Evasion,
        AttackClass::ModelExtraction,      AttackClass::ModelInference,
        AttackClass::PoisoningTrojanBackdoor,
    };
    for (AttackClass c : all)
        if (token == to_string(c)) return c;
    throw ValidationError(ValidationError::Code::UnknownClass, "class",
                          "unknown attack class: " + std::string(token));
}

FrameworkId framework_from_string(std::string_view token) {
    static constexpr FrameworkId all[] = {
        FrameworkId::Dread, FrameworkId::Cvss31Base,
        FrameworkId::OwaspRR, FrameworkId::SsvcSupplier,
    };
    for (FrameworkId f : all)
        if (token == to_string(f)) return f;
    throw ValidationError(ValidationError::Code::UnknownClass, "framework",
                          "unknown framework: " + std::string(token));
}

AttackRecord validate_record(AttackRecord record) {
    if (record.id.empty())
        throw ValidationError(ValidationError::Code::EmptyId, "id",
                              "attack record has an empty id");
    // attack_class is a closed enum; anything that got this far is one of
    // the seven values. Textual input is funnelled through
    // attack_class_from_string, which rejects unknown tokens.
    return record;
}

} // namespace aascore
