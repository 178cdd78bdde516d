#include "aascore/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace aascore {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_list(std::string_view s, char sep) {
    std::vector<std::string> out;
    while (true) {
        size_t p = s.find(sep);
        out.emplace_back(trim(s.substr(0, p)));
        if (p == std::string_view::npos) break;
        s = s.substr(p + 1);
    }
    return out;
}

NumericSeverity band_from_string(std::string_view token, const std::string& context) {
    for (NumericSeverity s : {NumericSeverity::Note, NumericSeverity::Low,
                              NumericSeverity::Medium, NumericSeverity::High,
                              NumericSeverity::Critical})
        if (token == to_string(s)) return s;
    throw CorpusError(CorpusError::Code::Schema,
                      context + ": unknown severity band \"" + std::string(token) + "\"");
}

std::optional<SsvcDecision> decision_from_string(std::string_view token) {
    for (SsvcDecision d : {SsvcDecision::Defer, SsvcDecision::Scheduled,
                           SsvcDecision::OutOfCycle, SsvcDecision::Immediate})
        if (token == to_string(d)) return d;
    return std::nullopt;
}

ReferenceScore parse_reference(FrameworkId framework, std::string_view text,
                               const std::string& context) {
    ReferenceScore ref;
    ref.raw = std::string(trim(text));
    if (framework == FrameworkId::SsvcSupplier) {
        auto decision = decision_from_string(ref.raw);
        if (!decision)
            throw CorpusError(CorpusError::Code::Schema,
                              context + ": unknown decision \"" + ref.raw + "\"");
        ref.label = SeverityLabel::decision(*decision);
        return ref;
    }
    auto parts = split_list(ref.raw, ' ');
    if (parts.empty() || parts.size() > 2)
        throw CorpusError(CorpusError::Code::Schema,
                          context + ": expected \"<score> <band>\", got \"" + ref.raw + "\"");
    double numeric = 0.0;
    const char* b = parts[0].data();
    const char* e = b + parts[0].size();
    auto [p, ec] = std::from_chars(b, e, numeric);
    if (ec != std::errc() || p != e)
        throw CorpusError(CorpusError::Code::Schema,
                          context + ": bad reference score \"" + parts[0] + "\"");
    ref.numeric = numeric;
    if (parts.size() == 2)
        ref.label = SeverityLabel::numeric(band_from_string(parts[1], context));
    return ref;
}

FactorVector parse_checked(FrameworkId framework, const std::string& text,
                           const std::string& attack_id, const std::string& assessor) {
    try {
        return parse_vector(framework, text);
    } catch (const ParseError& err) {
        std::string who = assessor.empty() ? std::string("consensus") : assessor;
        throw CorpusError(CorpusError::Code::Vector,
                          attack_id + " / " + std::string(to_string(framework)) + " / " + who +
                              ": " + err.what(),
                          attack_id, assessor);
    }
}

} // namespace

const CorpusAttack* CorpusDocument::find(const std::string& id) const {
    for (const auto& a : attacks)
        if (a.record.id == id) return &a;
    return nullptr;
}

void ingest(CorpusDocument& doc, ReplaySource& source) {
    while (auto entry = source.next()) {
        CorpusAttack* attack = nullptr;
        for (auto& a : doc.attacks)
            if (a.record.id == entry->attack_id) { attack = &a; break; }
        if (!attack)
            throw CorpusError(CorpusError::Code::Referential,
                              "replay entry references unknown attack \"" + entry->attack_id +
                                  "\"",
                              entry->attack_id, entry->assessor);
        if (!doc.assessors.empty() &&
            std::find(doc.assessors.begin(), doc.assessors.end(), entry->assessor) ==
                doc.assessors.end())
            throw CorpusError(CorpusError::Code::Referential,
                              "replay entry references undeclared assessor \"" +
                                  entry->assessor + "\"",
                              entry->attack_id, entry->assessor);
        FactorVector parsed =
            parse_checked(entry->framework, entry->vector_text, entry->attack_id,
                          entry->assessor);
        auto& assessment = attack->assessments[entry->framework];
        bool replaced = false;
        for (size_t i = 0; i < assessment.assessor_rows.size(); ++i) {
            if (assessment.assessor_rows[i].first == entry->assessor) {
                assessment.assessor_rows[i].second = entry->vector_text;
                assessment.assessor_vectors[i] = std::move(parsed);
                replaced = true;
                break;
            }
        }
        if (!replaced) {
            assessment.assessor_rows.emplace_back(entry->assessor, entry->vector_text);
            assessment.assessor_vectors.push_back(std::move(parsed));
        }
    }
}

CorpusDocument load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw CorpusError(CorpusError::Code::Io, "cannot open corpus file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str(), path.string());
}

CorpusDocument parse_corpus(const std::string& text, const std::string& origin) {
    CorpusDocument doc;
    CorpusAttack* current = nullptr;
    int line_no = 0;
    std::istringstream in(text);
    std::string raw_line;

    auto context = [&](const std::string& what) {
        return origin + ":" + std::to_string(line_no) + ": " + what;
    };

    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.substr(1, 7) != "attack ")
                throw CorpusError(CorpusError::Code::Schema,
                                  context("expected [attack <id>], got \"" + std::string(line) +
                                          "\""));
            std::string id(trim(line.substr(8, line.size() - 9)));
            if (id.empty())
                throw CorpusError(CorpusError::Code::Schema, context("empty attack id"));
            if (doc.find(id))
                throw CorpusError(CorpusError::Code::Referential,
                                  context("duplicate attack id \"" + id + "\""), id);
            doc.attacks.emplace_back();
            current = &doc.attacks.back();
            current->record.id = id;
            continue;
        }

        size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw CorpusError(CorpusError::Code::Schema,
                              context("expected key: value, got \"" + std::string(line) + "\""));
        std::string key(trim(line.substr(0, colon)));
        std::string value(trim(line.substr(colon + 1)));

        if (!current) {
            if (key == "aa-corpus-version") {
                int v = 0;
                auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
                if (ec != std::errc() || p != value.data() + value.size() || v < 1)
                    throw CorpusError(CorpusError::Code::Schema,
                                      context("bad corpus version \"" + value + "\""));
                doc.version = v;
            } else if (key == "assessors") {
                doc.assessors = split_list(value, ',');
                for (const auto& name : doc.assessors)
                    if (name.empty())
                        throw CorpusError(CorpusError::Code::Schema,
                                          context("empty assessor name"));
            } else {
                throw CorpusError(CorpusError::Code::Schema,
                                  context("unknown header key \"" + key + "\""));
            }
            continue;
        }

        if (key == "name") {
            current->record.name = value;
        } else if (key == "class") {
            try {
                current->record.attack_class = attack_class_from_string(value);
            } catch (const ValidationError& err) {
                throw CorpusError(CorpusError::Code::Schema, context(err.what()),
                                  current->record.id);
            }
        } else if (key == "open-source") {
            if (value == "yes" || value == "true") current->record.open_source = true;
            else if (value == "no" || value == "false") current->record.open_source = false;
            else
                throw CorpusError(CorpusError::Code::Schema,
                                  context("open-source must be yes/no, got \"" + value + "\""),
                                  current->record.id);
        } else if (key == "citation") {
            current->record.citation_key = value;
        } else {
            // "<framework> <field>"
            auto space = key.find(' ');
            if (space == std::string::npos)
                throw CorpusError(CorpusError::Code::Schema,
                                  context("unknown key \"" + key + "\""), current->record.id);
            FrameworkId fw;
            try {
                fw = framework_from_string(key.substr(0, space));
            } catch (const ValidationError&) {
                throw CorpusError(CorpusError::Code::Schema,
                                  context("unknown framework in key \"" + key + "\""),
                                  current->record.id);
            }
            std::string field = key.substr(space + 1);
            auto& assessment = current->assessments[fw];
            const std::string& id = current->record.id;
            if (field == "consensus") {
                assessment.consensus_text = value;
                assessment.consensus = parse_checked(fw, value, id, "");
            } else if (field == "reference") {
                assessment.reference = parse_reference(fw, value, context(key));
            } else if (field == "reference-vector") {
                // published text kept verbatim for diffing; some published
                // rows are internally inconsistent and would not parse
                assessment.reference_vector = value;
            } else if (field == "alt-consensus") {
                assessment.alt_consensus = value;
            } else if (field == "alt-reference") {
                assessment.alt_reference = parse_reference(fw, value, context(key));
            } else {
                // assessor row
                assessment.assessor_rows.emplace_back(field, value);
                assessment.assessor_vectors.push_back(parse_checked(fw, value, id, field));
            }
        }
    }

    if (doc.version == 0)
        throw CorpusError(CorpusError::Code::Schema,
                          origin + ": missing aa-corpus-version header");

    // Referential checks: declared assessors, record invariants.
    for (auto& attack : doc.attacks) {
        attack.record = validate_record(attack.record);
        for (const auto& [fw, assessment] : attack.assessments) {
            for (const auto& [assessor, text] : assessment.assessor_rows) {
                if (!doc.assessors.empty() &&
                    std::find(doc.assessors.begin(), doc.assessors.end(), assessor) ==
                        doc.assessors.end())
                    throw CorpusError(CorpusError::Code::Referential,
                                      origin + ": attack " + attack.record.id + " " +
                                          std::string(to_string(fw)) +
                                          " row for undeclared assessor \"" + assessor + "\"",
                                      attack.record.id, assessor);
            }
        }
    }
    return doc;
}

std::string corpus_to_json(const CorpusDocument& doc) {
    nlohmann::ordered_json j;
    j["version"] = doc.version;
    j["assessors"] = doc.assessors;
    j["attacks"] = nlohmann::ordered_json::array();
    for (const auto& attack : doc.attacks) {
        nlohmann::ordered_json a;
        a["id"] = attack.record.id;
        a["name"] = attack.record.name;
        a["class"] = to_string(attack.record.attack_class);
        a["open_source"] = attack.record.open_source;
        a["citation"] = attack.record.citation_key;
        for (const auto& [fw, assessment] : attack.assessments) {
            nlohmann::ordered_json f;
            for (const auto& [assessor, text] : assessment.assessor_rows)
                f["assessors"][assessor] = text;
            f["consensus"] = assessment.consensus_text;
            if (assessment.reference) f["reference"] = assessment.reference->raw;
            if (assessment.reference_vector) f["reference_vector"] = *assessment.reference_vector;
            if (assessment.alt_consensus) f["alt_consensus"] = *assessment.alt_consensus;
            if (assessment.alt_reference) f["alt_reference"] = assessment.alt_reference->raw;
            a[std::string(to_string(fw))] = std::move(f);
        }
        j["attacks"].push_back(std::move(a));
    }
    return j.dump(2);
}

std::vector<StatsReferenceRow> load_stats_reference(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw CorpusError(CorpusError::Code::Io,
                          "cannot open stats reference file " + path.string());
    std::vector<StatsReferenceRow> rows;
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw CorpusError(CorpusError::Code::Schema,
                              path.string() + ":" + std::to_string(line_no) + ": expected ':'");
        std::string head(trim(line.substr(0, colon)));
        if (head == "stats-ref-version") continue;
        auto parts = split_list(head, ' ');
        if (parts.size() != 3)
            throw CorpusError(CorpusError::Code::Schema,
                              path.string() + ":" + std::to_string(line_no) +
                                  ": expected \"<framework> <class> <stat>:\"");
        StatsReferenceRow row;
        try {
            row.framework = framework_from_string(parts[0]);
            row.attack_class = attack_class_from_string(parts[1]);
        } catch (const ValidationError& err) {
            throw CorpusError(CorpusError::Code::Schema,
                              path.string() + ":" + std::to_string(line_no) + ": " + err.what());
        }
        row.stat = parts[2];
        std::istringstream vals{std::string(trim(line.substr(colon + 1)))};
        std::string token;
        while (vals >> token) row.values.push_back(token);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace aascore
