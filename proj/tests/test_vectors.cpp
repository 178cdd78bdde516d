#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aascore/vectors.hpp"
#include "support/oracles.hpp"

namespace { inline bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
} }


using namespace aascore;

namespace {

ParseError capture(void (*fn)(const char*), const char* text) {
    try {
        fn(text);
    } catch (const ParseError& err) {
        return err;
    }
    FAIL("expected a ParseError for: ", text);
    throw std::logic_error("unreachable");
}

void run_cvss(const char* t) { parse_cvss(t); }
void run_dread(const char* t) { parse_dread(t); }
void run_owasp(const char* t) { parse_owasp(t); }
void run_ssvc(const char* t) { parse_ssvc(t); }

} // namespace

TEST_CASE("cvss parsing") {
    CvssVector v = parse_cvss("AV:N/AC:H/PR:N/UI:N/S:C/C:L/I:H/A:N");
    CHECK(v.attack_vector == CvssAv::Network);
    CHECK(v.attack_complexity == CvssAc::High);
    CHECK(v.privileges_required == CvssPr::None);
    CHECK(v.user_interaction == CvssUi::None);
    CHECK(v.scope == CvssScope::Changed);
    CHECK(v.confidentiality == CvssImpactValue::Low);
    CHECK(v.integrity == CvssImpactValue::High);
    CHECK(v.availability == CvssImpactValue::None);

    SUBCASE("whitespace and enclosing parentheses are tolerated") {
        CHECK(parse_cvss("  (AV:N/AC:H/PR:N/UI:N/S:C/C:L/I:H/A:N)  ") == v);
    }
    SUBCASE("all-minimal-impact vector") {
        CvssVector zero = parse_cvss("AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:N/A:N");
        CHECK(zero.confidentiality == CvssImpactValue::None);
        CHECK(zero.integrity == CvssImpactValue::None);
        CHECK(zero.availability == CvssImpactValue::None);
        CHECK(zero.scope == CvssScope::Unchanged);
    }
    SUBCASE("unknown value names the factor and token") {
        ParseError err = capture(run_cvss, "AV:N/AC:X/PR:N/UI:N/S:C/C:L/I:H/A:N");
        CHECK(err.code() == ParseError::Code::UnknownValue);
        CHECK(err.factor() == "AC");
        CHECK(err.token() == "X");
    }
    SUBCASE("missing factor") {
        ParseError err = capture(run_cvss, "AV:N/AC:H/PR:N/UI:N/S:C/C:L/I:H");
        CHECK(err.code() == ParseError::Code::MissingFactor);
        CHECK(err.factor() == "A");
    }
    SUBCASE("wrong order is rejected, position reported") {
        ParseError err = capture(run_cvss, "AC:H/AV:N/PR:N/UI:N/S:C/C:L/I:H/A:N");
        CHECK(err.code() == ParseError::Code::WrongOrder);
        CHECK(err.factor() == "AC");
        CHECK(err.position() == 0);
    }
}

TEST_CASE("dread parsing") {
    CHECK(parse_dread("D:8/R:9/E:8/A:8/D:6") == DreadVector{8, 9, 8, 8, 6});
    CHECK(parse_dread("DMG:1/REP:1/EXP:1/AFF:1/DSC:1") == DreadVector{1, 1, 1, 1, 1});

    SUBCASE("first D is damage, last D is discoverability") {
        DreadVector v = parse_dread("D:2/R:3/E:4/A:5/D:6");
        CHECK(v.damage == 2);
        CHECK(v.discoverability == 6);
    }
    SUBCASE("out of range") {
        ParseError err = capture(run_dread, "D:8/R:9/E:8/A:8/D:11");
        CHECK(err.code() == ParseError::Code::OutOfRange);
        CHECK(err.factor() == "discoverability");
        CHECK(err.token() == "11");
        err = capture(run_dread, "D:0/R:9/E:8/A:8/D:6");
        CHECK(err.code() == ParseError::Code::OutOfRange);
        CHECK(err.factor() == "damage");
    }
    SUBCASE("a D anywhere but first/last is ambiguous") {
        ParseError err = capture(run_dread, "D:8/R:9/D:8/A:8/E:6");
        CHECK(err.code() == ParseError::Code::AmbiguousKeys);
    }
    SUBCASE("missing factor") {
        ParseError err = capture(run_dread, "D:8/R:9/E:8/A:8");
        CHECK(err.code() == ParseError::Code::MissingFactor);
    }
}

TEST_CASE("owasp parsing") {
    OwaspVector v = parse_owasp(
        "SL:5/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LA:1/FD:5/RD:6/NC:3/PV:4");
    CHECK(v.skill_level == 5);
    CHECK(v.privacy_violation == 4);
    CHECK(v.loss_availability == 1);

    SUBCASE("LAV accepted as alias of LA") {
        OwaspVector w = parse_owasp(
            "SL:5/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LAV:1/FD:5/RD:6/NC:3/PV:4");
        CHECK(w == v);
    }
    SUBCASE("zeros are legal") {
        OwaspVector zeros = parse_owasp(
            "SL:0/M:0/O:0/S:0/ED:0/EE:0/A:0/ID:0/LC:0/LI:0/LA:0/FD:0/RD:0/NC:0/PV:0");
        for (int i = 0; i < kOwaspFactorCount; ++i) CHECK(zeros.factor(i) == 0);
    }
    SUBCASE("missing factor named") {
        ParseError err = capture(
            run_owasp, "SL:5/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LA:1/FD:5/RD:6/NC:3");
        CHECK(err.code() == ParseError::Code::MissingFactor);
        CHECK(err.factor() == "PV");
    }
    SUBCASE("duplicate key") {
        ParseError err = capture(
            run_owasp,
            "SL:5/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LA:1/LAV:2/FD:5/RD:6/NC:3/PV:4");
        CHECK(err.code() == ParseError::Code::DuplicateKey);
        CHECK(err.factor() == "LA");
    }
    SUBCASE("out of range") {
        ParseError err = capture(
            run_owasp, "SL:11/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LA:1/FD:5/RD:6/NC:3/PV:4");
        CHECK(err.code() == ParseError::Code::OutOfRange);
        CHECK(err.factor() == "SL");
    }
}

TEST_CASE("ssvc parsing") {
    SsvcVector v = parse_ssvc("E:P/A:Y/V:C/U:S/T:T/P:S");
    CHECK(v.exploitation == SsvcExploitation::Poc);
    CHECK(v.automatable == SsvcAutomatable::Yes);
    CHECK(v.value_density == SsvcValueDensity::Concentrated);
    CHECK(v.utility == SsvcUtility::SuperEffective);
    CHECK(v.technical_impact == SsvcTechImpact::Total);
    CHECK(v.safety_impact == SsvcSafetyImpact::Significant);

    SUBCASE("omitted U is derived") {
        SsvcVector w = parse_ssvc("E:N/A:N/V:D/T:P/P:M");
        CHECK(w.utility == SsvcUtility::Laborious);
        CHECK(serialize(w) == "E:N/A:N/V:D/U:L/T:P/P:M");
    }
    SUBCASE("stored U contradicting (A,V) is rejected") {
        ParseError err = capture(run_ssvc, "E:P/A:N/V:D/U:S/T:P/P:M");
        CHECK(err.code() == ParseError::Code::UtilityMismatch);
        CHECK(contains(err.what(), "expected L"));
    }
    SUBCASE("missing factor") {
        ParseError err = capture(run_ssvc, "E:P/A:Y/V:C/U:S/T:T");
        CHECK(err.code() == ParseError::Code::MissingFactor);
        CHECK(err.factor() == "P");
    }
    SUBCASE("unknown value") {
        ParseError err = capture(run_ssvc, "E:X/A:Y/V:C/T:T/P:S");
        CHECK(err.code() == ParseError::Code::UnknownValue);
        CHECK(err.factor() == "E");
    }
}

TEST_CASE("serialization uses the canonical notation") {
    CHECK(serialize(CvssVector{CvssAv::Network, CvssAc::High, CvssPr::None, CvssUi::None,
                               CvssScope::Changed, CvssImpactValue::Low, CvssImpactValue::High,
                               CvssImpactValue::None}) == "AV:N/AC:H/PR:N/UI:N/S:C/C:L/I:H/A:N");
    CHECK(serialize(DreadVector{8, 9, 8, 8, 6}) == "D:8/R:9/E:8/A:8/D:6");
    SsvcVector s;
    s.exploitation = SsvcExploitation::None;
    s.automatable = SsvcAutomatable::No;
    s.value_density = SsvcValueDensity::Diffuse;
    s.utility = SsvcUtility::Laborious;
    s.technical_impact = SsvcTechImpact::Partial;
    s.safety_impact = SsvcSafetyImpact::Minimal;
    CHECK(serialize(s) == "E:N/A:N/V:D/U:L/T:P/P:M");
}

TEST_CASE("property: parse(serialize(v)) == v for generated vectors") {
    std::mt19937 rng(20240531);
    for (int i = 0; i < 500; ++i) {
        CvssVector c = oracle::random_cvss(rng);
        CHECK(parse_cvss(serialize(c)) == c);
        DreadVector d = oracle::random_dread(rng);
        CHECK(parse_dread(serialize(d)) == d);
        OwaspVector o = oracle::random_owasp(rng);
        CHECK(parse_owasp(serialize(o)) == o);
        SsvcVector s = oracle::random_ssvc(rng);
        CHECK(parse_ssvc(serialize(s)) == s);
    }
}

TEST_CASE("property: parsers are total, garbage yields one structured error") {
    std::mt19937 rng(271828);
    const char charset[] = "AVCPRUISLHNDETM:/0123456789()x ";
    for (int i = 0; i < 2000; ++i) {
        int n = std::uniform_int_distribution<int>(0, 40)(rng);
        std::string s;
        for (int j = 0; j < n; ++j)
            s += charset[std::uniform_int_distribution<int>(0, sizeof(charset) - 2)(rng)];
        for (int fw = 0; fw < 4; ++fw) {
            try {
                parse_vector(static_cast<FrameworkId>(fw), s);
            } catch (const ParseError&) {
                // the entire error domain is ParseError; nothing else escapes
            }
        }
    }
    // mutated valid strings stay inside the error domain too
    for (int i = 0; i < 500; ++i) {
        std::string s = serialize(oracle::random_cvss(rng));
        s[std::uniform_int_distribution<size_t>(0, s.size() - 1)(rng)] =
            charset[std::uniform_int_distribution<int>(0, sizeof(charset) - 2)(rng)];
        try {
            CvssVector v = parse_cvss(s);
            (void)v; // some mutations stay grammatical
        } catch (const ParseError&) {
        }
    }
    CHECK(true);
}

TEST_CASE("property: serialize(parse(s)) is the canonical form of s") {
    std::mt19937 rng(812741);
    for (int i = 0; i < 200; ++i) {
        std::string canonical = serialize(oracle::random_cvss(rng));
        std::string noisy = "  (" + canonical + ")\t";
        CHECK(serialize(parse_cvss(noisy)) == canonical);
    }
    // the alternative DREAD spelling normalizes to the slash notation
    CHECK(serialize(parse_dread("DMG:2/REP:3/EXP:4/AFF:5/DSC:6")) == "D:2/R:3/E:4/A:5/D:6");
    // LAV normalizes to LA
    std::string with_alias =
        "SL:5/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LAV:1/FD:5/RD:6/NC:3/PV:4";
    CHECK(serialize(parse_owasp(with_alias)) ==
          "SL:5/M:6/O:4/S:3/ED:4/EE:6/A:5/ID:4/LC:4/LI:6/LA:1/FD:5/RD:6/NC:3/PV:4");
}
