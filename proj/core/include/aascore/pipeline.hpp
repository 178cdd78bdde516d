#ifndef AASCORE_PIPELINE_HPP
#define AASCORE_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aascore/aggregate.hpp"
#include "aascore/chart.hpp"
#include "aascore/corpus.hpp"
#include "aascore/cvss.hpp"
#include "aascore/dread.hpp"
#include "aascore/model.hpp"
#include "aascore/owasp.hpp"
#include "aascore/ssvc.hpp"
#include "aascore/stats.hpp"

namespace aascore {

enum class ReportFormat { Text, Csv, Json };

struct ReportSpec {
    ReportFormat format{ReportFormat::Text};
    std::optional<std::string> attack_filter;            // restrict to one attack id
    std::optional<std::filesystem::path> stats_reference; // published tables to diff against
};

/// Scores of one attack under all four frameworks, computed from the
/// recorded consensus vectors.
struct AttackScores {
    std::string attack_id;
    AttackClass attack_class{AttackClass::WhiteBoxJailbreak};
    std::optional<DreadScoreResult> dread;
    std::optional<CvssScoreResult> cvss;
    std::optional<OwaspScoreResult> owasp;
    std::optional<SsvcDecision> ssvc;
};

/// One divergence between a recomputed value and a stored reference.
struct Mismatch {
    std::string attack_id;  // empty for statistics rows
    FrameworkId framework{FrameworkId::Dread};
    std::string subject;    // what was compared (factor, score, stat cell)
    std::string recomputed;
    std::string stored;
};

struct PipelineReport {
    std::vector<AttackScores> scores;            // class, then id, then framework order
    std::vector<VariabilityRow> variability;     // per class x framework x factor
    std::vector<Mismatch> mismatches;
    int checks_total{0};   // stored reference values examined
    int checks_matched{0}; // of which matched the recomputation
};

/// Full pipeline: re-aggregates assessor vectors and diffs them against the
/// recorded consensus, scores every (attack x framework) pair from the
/// recorded consensus, builds per-class variability tables, and diffs every
/// stored reference value (scores, alternate rows, published statistics).
PipelineReport run_pipeline(const CorpusDocument& corpus, const ReportSpec& spec = {});

std::string render_text(const PipelineReport& report);
std::string render_csv(const PipelineReport& report);
std::string render_json(const PipelineReport& report);
std::string render(const PipelineReport& report, ReportFormat format);

/// Variability tables alone (the analyze subcommand).
std::vector<VariabilityRow> analyze_corpus(const CorpusDocument& corpus);

/// Chart-point series for every attack that has a CVSS or SSVC consensus.
struct ChartSeries {
    std::string attack_id;
    FrameworkId framework{FrameworkId::Cvss31Base};
    std::vector<ChartPoint> points;
};
std::vector<ChartSeries> chart_data(const CorpusDocument& corpus);

/// Formats a numeric framework score the way reports print it (one decimal).
std::string format_score(double value);

} // namespace aascore

#endif
