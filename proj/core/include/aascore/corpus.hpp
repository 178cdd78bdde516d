#ifndef AASCORE_CORPUS_HPP
#define AASCORE_CORPUS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aascore/model.hpp"
#include "aascore/vectors.hpp"

namespace aascore {

class CorpusError : public std::runtime_error {
public:
    enum class Code { Io, Schema, Vector, Referential };

    CorpusError(Code code, const std::string& message, std::string attack_id = {},
                std::string assessor = {})
        : std::runtime_error(message),
          code_(code),
          attack_id_(std::move(attack_id)),
          assessor_(std::move(assessor)) {}

    Code code() const { return code_; }
    const std::string& attack_id() const { return attack_id_; }
    const std::string& assessor() const { return assessor_; }

private:
    Code code_;
    std::string attack_id_;
    std::string assessor_;
};

/// A published score kept for cross-checking: the verbatim text plus its
/// parsed meaning (numeric score + band, or an SSVC decision).
struct ReferenceScore {
    std::string raw;
    std::optional<double> numeric;
    std::optional<SeverityLabel> label;
};

/// Everything recorded for one attack under one framework.
struct FrameworkAssessment {
    /// assessor -> verbatim vector string, insertion order preserved
    std::vector<std::pair<AssessorId, std::string>> assessor_rows;
    std::vector<FactorVector> assessor_vectors; // parallel to assessor_rows

    std::string consensus_text; // recorded post-review consensus
    std::optional<FactorVector> consensus;

    std::optional<ReferenceScore> reference;      // primary published score
    std::optional<std::string> reference_vector;  // published vector when it differs
    std::optional<std::string> alt_consensus;     // secondary published consensus row
    std::optional<ReferenceScore> alt_reference;  // secondary published score
};

struct CorpusAttack {
    AttackRecord record;
    std::map<FrameworkId, FrameworkAssessment> assessments;
};

struct CorpusDocument {
    int version{0};
    std::vector<AssessorId> assessors;
    std::vector<CorpusAttack> attacks;

    const CorpusAttack* find(const std::string& id) const;
};

/// The assessor-replay seam: anything that yields
/// (attack id, framework, assessor, vector string) tuples can feed a corpus.
struct ReplayEntry {
    std::string attack_id;
    FrameworkId framework;
    AssessorId assessor;
    std::string vector_text;
};

class ReplaySource {
public:
    virtual ~ReplaySource() = default;
    /// Returns entries until exhausted.
    virtual std::optional<ReplayEntry> next() = 0;
};

/// Replays recorded entries from memory.
class VectorReplaySource final : public ReplaySource {
public:
    explicit VectorReplaySource(std::vector<ReplayEntry> entries)
        : entries_(std::move(entries)) {}
    std::optional<ReplayEntry> next() override {
        if (index_ >= entries_.size()) return std::nullopt;
        return entries_[index_++];
    }

private:
    std::vector<ReplayEntry> entries_;
    size_t index_{0};
};

/// Adds assessor rows to an existing document, parsing and validating each
/// vector. Unknown attack ids raise Referential errors; parse failures are
/// wrapped as Vector errors naming the attack and assessor.
void ingest(CorpusDocument& doc, ReplaySource& source);

/// Loads and fully validates a corpus file. All vector strings are parsed
/// eagerly so later stages cannot fail on syntax.
CorpusDocument load_corpus(const std::filesystem::path& path);

/// Parses corpus text (same format as the file).
CorpusDocument parse_corpus(const std::string& text, const std::string& origin = "<memory>");

/// Machine-readable JSON export mirroring the document exactly.
std::string corpus_to_json(const CorpusDocument& doc);

// ---------------------------------------------------------------------------
// Published per-class statistics tables, used by the analyze cross-check.

struct StatsReferenceRow {
    FrameworkId framework{FrameworkId::Dread};
    AttackClass attack_class{AttackClass::WhiteBoxJailbreak};
    std::string stat;                // mean | sigma | cov | mode | p | entropy
    std::vector<std::string> values; // one per factor, in canonical order
};

std::vector<StatsReferenceRow> load_stats_reference(const std::filesystem::path& path);

} // namespace aascore

#endif
