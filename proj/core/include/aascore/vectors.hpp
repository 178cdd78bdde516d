#ifndef AASCORE_VECTORS_HPP
#define AASCORE_VECTORS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "aascore/model.hpp"

namespace aascore {

// ---------------------------------------------------------------------------
// CVSS v3.1 base-metric factors

enum class CvssAv : std::uint8_t { Network, Adjacent, Local, Physical };
enum class CvssAc : std::uint8_t { Low, High };
enum class CvssPr : std::uint8_t { None, Low, High };
enum class CvssUi : std::uint8_t { None, Required };
enum class CvssScope : std::uint8_t { Unchanged, Changed };
enum class CvssImpactValue : std::uint8_t { None, Low, High };

struct CvssVector {
    CvssAv attack_vector{CvssAv::Network};
    CvssAc attack_complexity{CvssAc::Low};
    CvssPr privileges_required{CvssPr::None};
    CvssUi user_interaction{CvssUi::None};
    CvssScope scope{CvssScope::Unchanged};
    CvssImpactValue confidentiality{CvssImpactValue::None};
    CvssImpactValue integrity{CvssImpactValue::None};
    CvssImpactValue availability{CvssImpactValue::None};

    bool operator==(const CvssVector&) const = default;
};

// ---------------------------------------------------------------------------
// DREAD: five integer factors in [1,10]

struct DreadVector {
    int damage{1};
    int reproducibility{1};
    int exploitability{1};
    int affected_users{1};
    int discoverability{1};

    bool operator==(const DreadVector&) const = default;
};

// ---------------------------------------------------------------------------
// OWASP Risk Rating: fifteen integer factors in [0,10]

struct OwaspVector {
    // threat agent
    int skill_level{0};
    int motivation{0};
    int opportunity{0};
    int size{0};
    // vulnerability
    int ease_of_discovery{0};
    int ease_of_exploit{0};
    int awareness{0};
    int intrusion_detection{0};
    // technical impact
    int loss_confidentiality{0};
    int loss_integrity{0};
    int loss_availability{0};
    // business impact
    int financial_damage{0};
    int reputation_damage{0};
    int non_compliance{0};
    int privacy_violation{0};

    bool operator==(const OwaspVector&) const = default;

    int factor(int index) const;
    int& factor(int index);
};

inline constexpr int kOwaspFactorCount = 15;
inline constexpr std::array<std::string_view, kOwaspFactorCount> kOwaspFactorKeys = {
    "SL", "M", "O", "S", "ED", "EE", "A", "ID", "LC", "LI", "LA", "FD", "RD", "NC", "PV",
};

// ---------------------------------------------------------------------------
// SSVC supplier factors

enum class SsvcExploitation : std::uint8_t { None, Poc, Active };
enum class SsvcAutomatable : std::uint8_t { No, Yes };
enum class SsvcValueDensity : std::uint8_t { Diffuse, Concentrated };
enum class SsvcUtility : std::uint8_t { Laborious, Efficient, SuperEffective };
enum class SsvcTechImpact : std::uint8_t { Partial, Total };
enum class SsvcSafetyImpact : std::uint8_t { Minimal, Significant };

struct SsvcVector {
    SsvcExploitation exploitation{SsvcExploitation::None};
    SsvcAutomatable automatable{SsvcAutomatable::No};
    SsvcValueDensity value_density{SsvcValueDensity::Diffuse};
    SsvcUtility utility{SsvcUtility::Laborious}; // derived from (A,V), stored
    SsvcTechImpact technical_impact{SsvcTechImpact::Partial};
    SsvcSafetyImpact safety_impact{SsvcSafetyImpact::Minimal};

    bool operator==(const SsvcVector&) const = default;
};

using FactorVector = std::variant<DreadVector, CvssVector, OwaspVector, SsvcVector>;

FrameworkId framework_of(const FactorVector& v);

// ---------------------------------------------------------------------------
// Parsing

/// Structured parse failure. `factor` names the offending factor (when
/// known), `token` the offending text, `position` the index of the
/// slash-separated element the error was found in (-1 when not tied to one).
class ParseError : public std::runtime_error {
public:
    enum class Code {
        MissingFactor,
        UnknownValue,
        UnknownKey,
        WrongOrder,
        OutOfRange,
        AmbiguousKeys,
        DuplicateKey,
        UtilityMismatch,
        Malformed,
    };

    ParseError(Code code, std::string factor, std::string token, int position,
               const std::string& message)
        : std::runtime_error(message),
          code_(code),
          factor_(std::move(factor)),
          token_(std::move(token)),
          position_(position) {}

    Code code() const { return code_; }
    const std::string& factor() const { return factor_; }
    const std::string& token() const { return token_; }
    int position() const { return position_; }

private:
    Code code_;
    std::string factor_;
    std::string token_;
    int position_;
};

/// Parses "AV:N/AC:H/PR:N/UI:N/S:C/C:L/I:H/A:N". The eight factors must
/// appear in exactly this order; surrounding whitespace and one pair of
/// enclosing parentheses are tolerated (for all four grammars).
CvssVector parse_cvss(std::string_view text);

/// Parses the slash notation with positional duplicate-D resolution:
/// in "D:8/R:9/E:8/A:8/D:6" the first D is damage and the last is
/// discoverability. The unambiguous keys DMG/REP/EXP/AFF/DSC are accepted
/// as an alternative spelling (same order).
DreadVector parse_dread(std::string_view text);

/// Parses the fifteen keyed integers; "LAV" is accepted as an alias of "LA".
OwaspVector parse_owasp(std::string_view text);

/// Parses "E:P/A:Y/V:C/U:S/T:T/P:S". U may be omitted, in which case it is
/// derived from (A,V); when present it must match the derived value.
SsvcVector parse_ssvc(std::string_view text);

FactorVector parse_vector(FrameworkId framework, std::string_view text);

// ---------------------------------------------------------------------------
// Serialization: canonical slash notation, field order fixed. For every
// valid vector v, parse(serialize(v)) == v.

std::string serialize(const CvssVector& v);
std::string serialize(const DreadVector& v);
std::string serialize(const OwaspVector& v);
std::string serialize(const SsvcVector& v);
std::string serialize(const FactorVector& v);

// Single-letter factor codes used by the vector notation.
char code_of(CvssAv v);
char code_of(CvssAc v);
char code_of(CvssPr v);
char code_of(CvssUi v);
char code_of(CvssScope v);
char code_of(CvssImpactValue v);
char code_of(SsvcExploitation v);
char code_of(SsvcAutomatable v);
char code_of(SsvcValueDensity v);
char code_of(SsvcUtility v);
char code_of(SsvcTechImpact v);
char code_of(SsvcSafetyImpact v);

} // namespace aascore

#endif
