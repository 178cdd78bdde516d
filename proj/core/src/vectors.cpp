#include "aascore/vectors.hpp"

#include <charconv>
#include <vector>

#include "aascore/ssvc.hpp"

namespace aascore {

int OwaspVector::factor(int index) const {
    return const_cast<OwaspVector*>(this)->factor(index);
}

int& OwaspVector::factor(int index) {
    switch (index) {
    case 0: return skill_level;
    case 1: return motivation;
    case 2: return opportunity;
    case 3: return size;
    case 4: return ease_of_discovery;
    case 5: return ease_of_exploit;
    case 6: return awareness;
    case 7: return intrusion_detection;
    case 8: return loss_confidentiality;
    case 9: return loss_integrity;
    case 10: return loss_availability;
    case 11: return financial_damage;
    case 12: return reputation_damage;
    case 13: return non_compliance;
    case 14: return privacy_violation;
    }
    throw std::out_of_range("OwaspVector::factor index");
}

FrameworkId framework_of(const FactorVector& v) {
    switch (v.index()) {
    case 0: return FrameworkId::Dread;
    case 1: return FrameworkId::Cvss31Base;
    case 2: return FrameworkId::OwaspRR;
    default: return std::holds_alternative<OwaspVector>(v) ? FrameworkId::OwaspRR
                                                           : FrameworkId::SsvcSupplier;
    }
}

namespace {

struct KeyValue {
    std::string key;
    std::string value;
    int position;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Strips whitespace and at most one pair of enclosing parentheses, then
// splits on '/' into KEY:VALUE pairs.
std::vector<KeyValue> split_pairs(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
    if (s.empty())
        throw ParseError(ParseError::Code::Malformed, "", std::string(text), -1,
                         "empty vector string");
    std::vector<KeyValue> out;
    int pos = 0;
    while (true) {
        size_t slash = s.find('/');
        std::string_view part = trim(slash == std::string_view::npos ? s : s.substr(0, slash));
        size_t colon = part.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 > part.size())
            throw ParseError(ParseError::Code::Malformed, "", std::string(part), pos,
                             "expected KEY:VALUE at element " + std::to_string(pos));
        out.push_back({std::string(trim(part.substr(0, colon))),
                       std::string(trim(part.substr(colon + 1))), pos});
        if (slash == std::string_view::npos) break;
        s = s.substr(slash + 1);
        ++pos;
    }
    return out;
}

int parse_int(const KeyValue& kv) {
    int value = 0;
    const char* b = kv.value.data();
    const char* e = b + kv.value.size();
    auto [p, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || p != e)
        throw ParseError(ParseError::Code::UnknownValue, kv.key, kv.value, kv.position,
                         kv.key + ": expected an integer, got \"" + kv.value + "\"");
    return value;
}

[[noreturn]] void throw_unknown_value(const KeyValue& kv, std::string_view allowed) {
    throw ParseError(ParseError::Code::UnknownValue, kv.key, kv.value, kv.position,
                     kv.key + ": value \"" + kv.value + "\" not in {" + std::string(allowed) +
                         "}");
}

char single_letter(const KeyValue& kv, std::string_view allowed) {
    if (kv.value.size() != 1 || allowed.find(kv.value[0]) == std::string_view::npos)
        throw_unknown_value(kv, allowed);
    return kv.value[0];
}

} // namespace

// ---------------------------------------------------------------------------
// CVSS

CvssVector parse_cvss(std::string_view text) {
    auto pairs = split_pairs(text);
    static constexpr std::array<std::string_view, 8> order = {"AV", "AC", "PR", "UI",
                                                              "S",  "C",  "I",  "A"};
    if (pairs.size() != order.size()) {
        // Identify a missing factor by name when possible.
        for (std::string_view key : order) {
            bool found = false;
            for (const auto& kv : pairs)
                if (kv.key == key) { found = true; break; }
            if (!found)
                throw ParseError(ParseError::Code::MissingFactor, std::string(key), "", -1,
                                 "missing CVSS factor " + std::string(key));
        }
        throw ParseError(ParseError::Code::DuplicateKey, pairs.back().key, "", -1,
                         "expected 8 CVSS factors, got " + std::to_string(pairs.size()));
    }
    for (size_t i = 0; i < order.size(); ++i) {
        if (pairs[i].key != order[i]) {
            bool known = false;
            for (std::string_view key : order)
                if (pairs[i].key == key) { known = true; break; }
            if (!known)
                throw ParseError(ParseError::Code::UnknownKey, pairs[i].key, pairs[i].value,
                                 pairs[i].position, "unknown CVSS factor " + pairs[i].key);
            throw ParseError(ParseError::Code::WrongOrder, pairs[i].key, pairs[i].value,
                             pairs[i].position,
                             "CVSS factor " + pairs[i].key + " out of order at position " +
                                 std::to_string(pairs[i].position) + ", expected " +
                                 std::string(order[i]));
        }
    }
    CvssVector v;
    switch (single_letter(pairs[0], "NALP")) {
    case 'N': v.attack_vector = CvssAv::Network; break;
    case 'A': v.attack_vector = CvssAv::Adjacent; break;
    case 'L': v.attack_vector = CvssAv::Local; break;
    default: v.attack_vector = CvssAv::Physical; break;
    }
    v.attack_complexity = single_letter(pairs[1], "LH") == 'L' ? CvssAc::Low : CvssAc::High;
    switch (single_letter(pairs[2], "NLH")) {
    case 'N': v.privileges_required = CvssPr::None; break;
    case 'L': v.privileges_required = CvssPr::Low; break;
    default: v.privileges_required = CvssPr::High; break;
    }
    v.user_interaction = single_letter(pairs[3], "NR") == 'N' ? CvssUi::None : CvssUi::Required;
    v.scope = single_letter(pairs[4], "UC") == 'U' ? CvssScope::Unchanged : CvssScope::Changed;
    auto impact = [](const KeyValue& kv) {
        switch (single_letter(kv, "NLH")) {
        case 'N': return CvssImpactValue::None;
        case 'L': return CvssImpactValue::Low;
        default: return CvssImpactValue::High;
        }
    };
    v.confidentiality = impact(pairs[5]);
    v.integrity = impact(pairs[6]);
    v.availability = impact(pairs[7]);
    return v;
}

// ---------------------------------------------------------------------------
// DREAD

DreadVector parse_dread(std::string_view text) {
    auto pairs = split_pairs(text);
    static constexpr std::array<std::string_view, 5> canonical = {"DMG", "REP", "EXP", "AFF",
                                                                  "DSC"};
    static constexpr std::array<std::string_view, 5> names = {
        "damage", "reproducibility", "exploitability", "affected_users", "discoverability"};

    bool canonical_keys = !pairs.empty() && pairs[0].key.size() > 1;
    int values[5];
    if (canonical_keys) {
        if (pairs.size() != 5)
            throw ParseError(ParseError::Code::MissingFactor,
                             pairs.size() < 5 ? std::string(canonical[pairs.size()]) : "", "", -1,
                             "expected 5 DREAD factors, got " + std::to_string(pairs.size()));
        for (size_t i = 0; i < 5; ++i) {
            if (pairs[i].key != canonical[i])
                throw ParseError(ParseError::Code::WrongOrder, pairs[i].key, pairs[i].value,
                                 pairs[i].position,
                                 "DREAD factor " + pairs[i].key + " out of order, expected " +
                                     std::string(canonical[i]));
            values[i] = parse_int(pairs[i]);
        }
    } else {
        // Paper notation D/R/E/A/D: the duplicate D keys are resolved
        // positionally, first = damage, last = discoverability.
        static constexpr std::array<std::string_view, 5> order = {"D", "R", "E", "A", "D"};
        if (pairs.size() != 5) {
            for (size_t i = 0; i < std::min<size_t>(pairs.size(), 5); ++i)
                if (pairs[i].key != order[i])
                    throw ParseError(ParseError::Code::WrongOrder, pairs[i].key, pairs[i].value,
                                     pairs[i].position, "unexpected DREAD key " + pairs[i].key);
            throw ParseError(ParseError::Code::MissingFactor,
                             pairs.size() < 5 ? std::string(names[pairs.size()]) : "", "", -1,
                             "expected 5 DREAD factors, got " + std::to_string(pairs.size()));
        }
        for (size_t i = 0; i < 5; ++i) {
            if (pairs[i].key == "D" && i != 0 && i != 4)
                throw ParseError(ParseError::Code::AmbiguousKeys, "D", pairs[i].value,
                                 pairs[i].position,
                                 "duplicate key D must be the first and last factor");
            if (pairs[i].key != order[i])
                throw ParseError(ParseError::Code::WrongOrder, pairs[i].key, pairs[i].value,
                                 pairs[i].position,
                                 "DREAD factor " + pairs[i].key + " out of order, expected " +
                                     std::string(order[i]));
            values[i] = parse_int(pairs[i]);
        }
    }
    for (size_t i = 0; i < 5; ++i)
        if (values[i] < 1 || values[i] > 10)
            throw ParseError(ParseError::Code::OutOfRange, std::string(names[i]),
                             std::to_string(values[i]), static_cast<int>(i),
                             std::string(names[i]) + ": " + std::to_string(values[i]) +
                                 " outside [1,10]");
    return DreadVector{values[0], values[1], values[2], values[3], values[4]};
}

// ---------------------------------------------------------------------------
// OWASP

OwaspVector parse_owasp(std::string_view text) {
    auto pairs = split_pairs(text);
    OwaspVector v;
    bool seen[kOwaspFactorCount] = {};
    for (const auto& kv : pairs) {
        std::string key = kv.key == "LAV" ? "LA" : kv.key; // Availability alias
        int index = -1;
        for (int i = 0; i < kOwaspFactorCount; ++i)
            if (key == kOwaspFactorKeys[i]) { index = i; break; }
        if (index < 0)
            throw ParseError(ParseError::Code::UnknownKey, kv.key, kv.value, kv.position,
                             "unknown OWASP factor " + kv.key);
        if (seen[index])
            throw ParseError(ParseError::Code::DuplicateKey, key, kv.value, kv.position,
                             "duplicate OWASP factor " + key);
        seen[index] = true;
        int value = parse_int(kv);
        if (value < 0 || value > 10)
            throw ParseError(ParseError::Code::OutOfRange, key, std::to_string(value),
                             kv.position,
                             key + ": " + std::to_string(value) + " outside [0,10]");
        v.factor(index) = value;
    }
    for (int i = 0; i < kOwaspFactorCount; ++i)
        if (!seen[i])
            throw ParseError(ParseError::Code::MissingFactor, std::string(kOwaspFactorKeys[i]),
                             "", -1, "missing OWASP factor " + std::string(kOwaspFactorKeys[i]));
    return v;
}

// ---------------------------------------------------------------------------
// SSVC

SsvcVector parse_ssvc(std::string_view text) {
    auto pairs = split_pairs(text);
    SsvcVector v;
    bool seen_e = false, seen_a = false, seen_v = false, seen_t = false, seen_p = false;
    bool seen_u = false;
    SsvcUtility stored_u = SsvcUtility::Laborious;
    for (const auto& kv : pairs) {
        if (kv.key == "E") {
            if (seen_e)
                throw ParseError(ParseError::Code::DuplicateKey, "E", kv.value, kv.position,
                                 "duplicate SSVC factor E");
            seen_e = true;
            switch (single_letter(kv, "NPA")) {
            case 'N': v.exploitation = SsvcExploitation::None; break;
            case 'P': v.exploitation = SsvcExploitation::Poc; break;
            default: v.exploitation = SsvcExploitation::Active; break;
            }
        } else if (kv.key == "A") {
            if (seen_a)
                throw ParseError(ParseError::Code::DuplicateKey, "A", kv.value, kv.position,
                                 "duplicate SSVC factor A");
            seen_a = true;
            v.automatable = single_letter(kv, "NY") == 'N' ? SsvcAutomatable::No
                                                           : SsvcAutomatable::Yes;
        } else if (kv.key == "V") {
            if (seen_v)
                throw ParseError(ParseError::Code::DuplicateKey, "V", kv.value, kv.position,
                                 "duplicate SSVC factor V");
            seen_v = true;
            v.value_density = single_letter(kv, "DC") == 'D' ? SsvcValueDensity::Diffuse
                                                             : SsvcValueDensity::Concentrated;
        } else if (kv.key == "U") {
            if (seen_u)
                throw ParseError(ParseError::Code::DuplicateKey, "U", kv.value, kv.position,
                                 "duplicate SSVC factor U");
            seen_u = true;
            switch (single_letter(kv, "LES")) {
            case 'L': stored_u = SsvcUtility::Laborious; break;
            case 'E': stored_u = SsvcUtility::Efficient; break;
            default: stored_u = SsvcUtility::SuperEffective; break;
            }
        } else if (kv.key == "T") {
            if (seen_t)
                throw ParseError(ParseError::Code::DuplicateKey, "T", kv.value, kv.position,
                                 "duplicate SSVC factor T");
            seen_t = true;
            v.technical_impact = single_letter(kv, "PT") == 'P' ? SsvcTechImpact::Partial
                                                                : SsvcTechImpact::Total;
        } else if (kv.key == "P") {
            if (seen_p)
                throw ParseError(ParseError::Code::DuplicateKey, "P", kv.value, kv.position,
                                 "duplicate SSVC factor P");
            seen_p = true;
            v.safety_impact = single_letter(kv, "MS") == 'M' ? SsvcSafetyImpact::Minimal
                                                             : SsvcSafetyImpact::Significant;
        } else {
            throw ParseError(ParseError::Code::UnknownKey, kv.key, kv.value, kv.position,
                             "unknown SSVC factor " + kv.key);
        }
    }
    if (!seen_e)
        throw ParseError(ParseError::Code::MissingFactor, "E", "", -1, "missing SSVC factor E");
    if (!seen_a)
        throw ParseError(ParseError::Code::MissingFactor, "A", "", -1, "missing SSVC factor A");
    if (!seen_v)
        throw ParseError(ParseError::Code::MissingFactor, "V", "", -1, "missing SSVC factor V");
    if (!seen_t)
        throw ParseError(ParseError::Code::MissingFactor, "T", "", -1, "missing SSVC factor T");
    if (!seen_p)
        throw ParseError(ParseError::Code::MissingFactor, "P", "", -1, "missing SSVC factor P");

    v.utility = derive_utility(v.automatable, v.value_density);
    if (seen_u && stored_u != v.utility)
        throw ParseError(ParseError::Code::UtilityMismatch, "U",
                         std::string(1, code_of(stored_u)), -1,
                         std::string("stored U contradicts (A,V); expected ") +
                             code_of(v.utility));
    return v;
}

FactorVector parse_vector(FrameworkId framework, std::string_view text) {
    switch (framework) {
    case FrameworkId::Dread: return parse_dread(text);
    case FrameworkId::Cvss31Base: return parse_cvss(text);
    case FrameworkId::OwaspRR: return parse_owasp(text);
    case FrameworkId::SsvcSupplier: return parse_ssvc(text);
    }
    throw std::logic_error("parse_vector: bad framework");
}

// ---------------------------------------------------------------------------
// Serialization

char code_of(CvssAv v) {
    switch (v) {
    case CvssAv::Network: return 'N';
    case CvssAv::Adjacent: return 'A';
    case CvssAv::Local: return 'L';
    case CvssAv::Physical: return 'P';
    }
    return '?';
}
char code_of(CvssAc v) { return v == CvssAc::Low ? 'L' : 'H'; }
char code_of(CvssPr v) {
    switch (v) {
    case CvssPr::None: return 'N';
    case CvssPr::Low: return 'L';
    case CvssPr::High: return 'H';
    }
    return '?';
}
char code_of(CvssUi v) { return v == CvssUi::None ? 'N' : 'R'; }
char code_of(CvssScope v) { return v == CvssScope::Unchanged ? 'U' : 'C'; }
char code_of(CvssImpactValue v) {
    switch (v) {
    case CvssImpactValue::None: return 'N';
    case CvssImpactValue::Low: return 'L';
    case CvssImpactValue::High: return 'H';
    }
    return '?';
}
char code_of(SsvcExploitation v) {
    switch (v) {
    case SsvcExploitation::None: return 'N';
    case SsvcExploitation::Poc: return 'P';
    case SsvcExploitation::Active: return 'A';
    }
    return '?';
}
char code_of(SsvcAutomatable v) { return v == SsvcAutomatable::No ? 'N' : 'Y'; }
char code_of(SsvcValueDensity v) { return v == SsvcValueDensity::Diffuse ? 'D' : 'C'; }
char code_of(SsvcUtility v) {
    switch (v) {
    case SsvcUtility::Laborious: return 'L';
    case SsvcUtility::Efficient: return 'E';
    case SsvcUtility::SuperEffective: return 'S';
    }
    return '?';
}
char code_of(SsvcTechImpact v) { return v == SsvcTechImpact::Partial ? 'P' : 'T'; }
char code_of(SsvcSafetyImpact v) { return v == SsvcSafetyImpact::Minimal ? 'M' : 'S'; }

std::string serialize(const CvssVector& v) {
    std::string out;
    out.reserve(40);
    out += "AV:"; out += code_of(v.attack_vector);
    out += "/AC:"; out += code_of(v.attack_complexity);
    out += "/PR:"; out += code_of(v.privileges_required);
    out += "/UI:"; out += code_of(v.user_interaction);
    out += "/S:"; out += code_of(v.scope);
    out += "/C:"; out += code_of(v.confidentiality);
    out += "/I:"; out += code_of(v.integrity);
    out += "/A:"; out += code_of(v.availability);
    return out;
}

std::string serialize(const DreadVector& v) {
    std::string out;
    out += "D:" + std::to_string(v.damage);
    out += "/R:" + std::to_string(v.reproducibility);
    out += "/E:" + std::to_string(v.exploitability);
    out += "/A:" + std::to_string(v.affected_users);
    out += "/D:" + std::to_string(v.discoverability);
    return out;
}

std::string serialize(const OwaspVector& v) {
    std::string out;
    for (int i = 0; i < kOwaspFactorCount; ++i) {
        if (i) out += '/';
        out += std::string(kOwaspFactorKeys[i]) + ':' + std::to_string(v.factor(i));
    }
    return out;
}

std::string serialize(const SsvcVector& v) {
    std::string out;
    out += "E:"; out += code_of(v.exploitation);
    out += "/A:"; out += code_of(v.automatable);
    out += "/V:"; out += code_of(v.value_density);
    out += "/U:"; out += code_of(v.utility);
    out += "/T:"; out += code_of(v.technical_impact);
    out += "/P:"; out += code_of(v.safety_impact);
    return out;
}

std::string serialize(const FactorVector& v) {
    return std::visit([](const auto& inner) { return serialize(inner); }, v);
}

} // namespace aascore
