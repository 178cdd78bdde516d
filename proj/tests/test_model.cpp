#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aascore/model.hpp"

using namespace aascore;

TEST_CASE("validate_record accepts a well-formed record") {
    AttackRecord r{"wb-1", "GCG", AttackClass::WhiteBoxJailbreak, true,
                   "zou2023universaltransferableadversarialattacks"};
    CHECK(validate_record(r) == r);
}

TEST_CASE("validate_record rejects an empty id") {
    AttackRecord r{"", "x", AttackClass::Evasion, false, ""};
    CHECK_THROWS_WITH_AS(validate_record(r), "attack record has an empty id", ValidationError);
    try {
        validate_record(r);
    } catch (const ValidationError& err) {
        CHECK(err.code() == ValidationError::Code::EmptyId);
        CHECK(err.field() == "id");
    }
}

TEST_CASE("attack classes form a closed enumeration of seven") {
    const char* names[] = {"WhiteBoxJailbreak", "BlackBoxJailbreak", "PromptInjection",
                           "Evasion",           "ModelExtraction",   "ModelInference",
                           "PoisoningTrojanBackdoor"};
    CHECK(kAttackClassCount == 7);
    for (const char* name : names) CHECK(to_string(attack_class_from_string(name)) == name);
    CHECK_THROWS_AS(attack_class_from_string("Surveys"), ValidationError);
    try {
        attack_class_from_string("Surveys");
    } catch (const ValidationError& err) {
        CHECK(err.code() == ValidationError::Code::UnknownClass);
        CHECK(err.field() == "class");
    }
}

TEST_CASE("severity label sub-enumerations stay disjoint") {
    SeverityLabel numeric = SeverityLabel::numeric(NumericSeverity::High);
    SeverityLabel decision = SeverityLabel::decision(SsvcDecision::Immediate);
    CHECK(numeric.is_numeric());
    CHECK(!numeric.is_decision());
    CHECK(decision.is_decision());
    CHECK_FALSE(numeric == decision);
    CHECK_THROWS_AS(numeric.as_decision(), std::logic_error);
    CHECK_THROWS_AS(decision.as_numeric(), std::logic_error);
    CHECK(to_string(numeric) == "High");
    CHECK(to_string(decision) == "Immediate");
}

TEST_CASE("framework tokens round-trip") {
    for (auto fw : {FrameworkId::Dread, FrameworkId::Cvss31Base, FrameworkId::OwaspRR,
                    FrameworkId::SsvcSupplier})
        CHECK(framework_from_string(std::string(to_string(fw))) == fw);
    CHECK_THROWS_AS(framework_from_string("cvss2"), ValidationError);
}
