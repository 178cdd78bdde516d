#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "aascore/stats.hpp"
#include "support/oracles.hpp"

using namespace aascore;

TEST_CASE("published numeric columns") {
    // White-box damage column
    std::array damage{8, 6, 7, 7, 8, 8, 7, 8};
    CovResult r = cov_percent(std::span<const int>(damage));
    CHECK(std::fabs(r.mean - 7.38) <= 0.01);
    CHECK(std::fabs(r.sigma - 0.69) <= 0.01);
    CHECK(std::fabs(r.cov_percent - 9.44) <= 0.01);

    // White-box reproducibility column
    std::array repro{9, 6, 7, 6, 9, 8, 6, 9};
    r = cov_percent(std::span<const int>(repro));
    CHECK(r.mean == doctest::Approx(7.5));
    CHECK(std::fabs(r.sigma - 1.32) <= 0.01);
    CHECK(std::fabs(r.cov_percent - 17.64) <= 0.01);

    // constant series
    std::array flat{5, 5, 5, 5};
    r = cov_percent(std::span<const int>(flat));
    CHECK(r.sigma == 0.0);
    CHECK(r.cov_percent == 0.0);
}

TEST_CASE("cov errors") {
    CHECK_THROWS_AS(cov_percent(std::span<const int>{}), StatsError);
    std::array zeros{0, 0, 0};
    try {
        cov_percent(std::span<const int>(zeros));
        FAIL("expected ZeroMean");
    } catch (const StatsError& err) {
        CHECK(err.code() == StatsError::Code::ZeroMean);
    }
}

TEST_CASE("published categorical columns") {
    auto series = [](std::initializer_list<const char*> xs) {
        std::vector<std::string> out;
        for (const char* x : xs) out.emplace_back(x);
        return out;
    };
    // AC column of the white-box table
    auto ac = series({"H", "H", "H", "H", "L", "L", "H", "L"});
    EntropyResult r = shannon_entropy(ac);
    CHECK(r.modes == std::vector<std::string>{"H"});
    CHECK(r.mode_count == 5);
    CHECK(r.total == 8);
    CHECK(std::fabs(r.entropy_bits - 0.95) <= 0.005);

    // I column of the black-box table: tied modes
    auto integ = series({"L", "H", "L", "N", "N", "L", "H", "H"});
    r = shannon_entropy(integ);
    CHECK(r.modes == std::vector<std::string>{"H", "L"}); // sorted tie set
    CHECK(r.mode_count == 3);
    CHECK(std::fabs(r.p - 3.0 / 8.0) <= 1e-12);
    CHECK(std::fabs(r.entropy_bits - 1.56) <= 0.005);

    // constant column
    auto flat = series({"N", "N", "N", "N", "N", "N", "N", "N"});
    r = shannon_entropy(flat);
    CHECK(r.modes == std::vector<std::string>{"N"});
    CHECK(r.p == 1.0);
    CHECK(r.entropy_bits == 0.0);

    CHECK_THROWS_AS(shannon_entropy({}), StatsError);
}

TEST_CASE("property: entropy bounds, zero iff constant") {
    std::mt19937 rng(5150);
    const char* alphabet[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 500; ++i) {
        int n = 1 + i % 12;
        int k = 1 + std::uniform_int_distribution<int>(0, 3)(rng);
        std::vector<std::string> xs;
        for (int j = 0; j < n; ++j)
            xs.push_back(alphabet[std::uniform_int_distribution<int>(0, k - 1)(rng)]);
        EntropyResult r = shannon_entropy(xs);
        int distinct = 0;
        for (const char* a : alphabet)
            if (std::count(xs.begin(), xs.end(), a)) ++distinct;
        CHECK(r.entropy_bits >= 0.0);
        CHECK(r.entropy_bits <= std::log2(std::max(distinct, 1)) + 1e-12);
        CHECK((r.entropy_bits == 0.0) == (distinct == 1));
    }
}

TEST_CASE("property: CoV invariant under positive scaling") {
    std::mt19937 rng(9000);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + i % 10;
        std::vector<double> xs;
        for (int j = 0; j < n; ++j)
            xs.push_back(std::uniform_real_distribution<double>(0.5, 10.0)(rng));
        double c = std::uniform_real_distribution<double>(0.1, 25.0)(rng);
        std::vector<double> scaled;
        for (double x : xs) scaled.push_back(c * x);
        CovResult a = cov_percent(std::span<const double>(xs));
        CovResult b = cov_percent(std::span<const double>(scaled));
        CHECK(a.cov_percent == doctest::Approx(b.cov_percent).epsilon(1e-9));
    }
}

TEST_CASE("property: sigma matches the two-pass oracle") {
    std::mt19937 rng(64);
    for (int i = 0; i < 300; ++i) {
        int n = 1 + i % 16;
        std::vector<double> xs;
        for (int j = 0; j < n; ++j)
            xs.push_back(std::uniform_real_distribution<double>(0.5, 10.0)(rng));
        CovResult r = cov_percent(std::span<const double>(xs));
        CHECK(r.sigma == doctest::Approx(oracle::sigma_reference(xs)).epsilon(1e-12));
    }
}

TEST_CASE("build_class_tables shapes and degenerate grouping") {
    AssessedAttack one;
    one.record = {"x-1", "solo", AttackClass::Evasion, false, ""};
    one.consensus[FrameworkId::Dread] = parse_dread("D:8/R:9/E:8/A:8/D:6");
    one.consensus[FrameworkId::Cvss31Base] = parse_cvss("AV:N/AC:L/PR:N/UI:N/S:U/C:L/I:H/A:N");
    std::vector<AssessedAttack> attacks{one};

    auto rows = build_class_tables(attacks);
    REQUIRE(rows.size() == 5 + 8);
    for (const auto& row : rows) {
        if (row.cov) CHECK(row.cov->sigma == 0.0);      // single attack: no spread
        if (row.entropy) CHECK(row.entropy->entropy_bits == 0.0);
    }

    // a second class carrying only one of the two frameworks is incomplete
    AssessedAttack other;
    other.record = {"y-1", "partial", AttackClass::ModelExtraction, false, ""};
    other.consensus[FrameworkId::Dread] = parse_dread("D:5/R:5/E:5/A:5/D:5");
    attacks.push_back(other);
    try {
        build_class_tables(attacks);
        FAIL("expected MissingClassData");
    } catch (const StatsError& err) {
        CHECK(err.code() == StatsError::Code::MissingClassData);
    }
}
