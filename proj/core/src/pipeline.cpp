#include "aascore/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace aascore {

std::string format_score(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", value);
    return buf;
}

namespace {

std::string format_stat(double value) {
    if (std::isnan(value)) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Sort key for deterministic report order: class, then id (natural number
// compare on the trailing index), then framework.
std::pair<int, int> id_sort_key(const CorpusAttack& a) {
    int cls = static_cast<int>(a.record.attack_class);
    int num = 0;
    auto dash = a.record.id.rfind('-');
    if (dash != std::string::npos)
        num = std::atoi(a.record.id.c_str() + dash + 1);
    return {cls, num};
}

struct ScoredConsensus {
    std::optional<double> numeric;
    std::optional<SeverityLabel> label;
};

ScoredConsensus score_consensus(FrameworkId fw, const FactorVector& v, AttackScores& out) {
    ScoredConsensus s;
    switch (fw) {
    case FrameworkId::Dread: {
        auto r = dread_score(std::get<DreadVector>(v));
        out.dread = r;
        s.numeric = r.score;
        s.label = SeverityLabel::numeric(r.label);
        break;
    }
    case FrameworkId::Cvss31Base: {
        auto r = cvss_base(std::get<CvssVector>(v));
        out.cvss = r;
        s.numeric = r.base;
        s.label = SeverityLabel::numeric(r.label);
        break;
    }
    case FrameworkId::OwaspRR: {
        auto r = owasp_evaluate(std::get<OwaspVector>(v));
        out.owasp = r;
        s.numeric = r.numeric;
        s.label = SeverityLabel::numeric(r.label);
        break;
    }
    case FrameworkId::SsvcSupplier: {
        auto d = ssvc_decide(std::get<SsvcVector>(v));
        out.ssvc = d;
        s.label = SeverityLabel::decision(d);
        break;
    }
    }
    return s;
}

std::string describe(const ScoredConsensus& s) {
    if (s.numeric) {
        std::string out = format_score(*s.numeric);
        if (s.label) out += " " + std::string(to_string(*s.label));
        return out;
    }
    return s.label ? std::string(to_string(*s.label)) : std::string("?");
}

// Compares factor-by-factor and records one mismatch per differing factor.
void diff_factors(const std::string& attack_id, FrameworkId fw, const FactorVector& recomputed,
                  const FactorVector& stored, const char* what, PipelineReport& report) {
    auto rec = factor_values(recomputed);
    auto sto = factor_values(stored);
    auto names = factor_names(fw);
    for (size_t i = 0; i < rec.size(); ++i) {
        ++report.checks_total;
        if (rec[i] == sto[i]) {
            ++report.checks_matched;
        } else {
            report.mismatches.push_back({attack_id, fw, std::string(what) + " " + names[i],
                                         rec[i], sto[i]});
        }
    }
}

bool score_matches(const ScoredConsensus& got, const ReferenceScore& ref) {
    if (ref.numeric && got.numeric && std::fabs(*got.numeric - *ref.numeric) > 1e-9)
        return false;
    if (ref.label && got.label && !(*ref.label == *got.label)) return false;
    return true;
}

void check_stats_reference(const CorpusDocument& corpus,
                           const std::vector<VariabilityRow>& rows,
                           const std::filesystem::path& path, PipelineReport& report) {
    auto refs = load_stats_reference(path);
    auto find_row = [&](FrameworkId fw, AttackClass cls,
                        size_t factor) -> const VariabilityRow* {
        auto names = factor_names(fw);
        if (factor >= names.size()) return nullptr;
        for (const auto& r : rows)
            if (r.framework == fw && r.attack_class == cls && r.factor == names[factor])
                return &r;
        return nullptr;
    };
    for (const auto& ref : refs) {
        // The published SSVC tables omit the derived U column.
        bool skip_u = ref.framework == FrameworkId::SsvcSupplier;
        for (size_t i = 0; i < ref.values.size(); ++i) {
            size_t factor = skip_u && i >= 3 ? i + 1 : i;
            const VariabilityRow* row = find_row(ref.framework, ref.attack_class, factor);
            if (!row) continue;
            ++report.checks_total;
            std::string recomputed, stored = ref.values[i];
            bool match = false;
            if (row->cov) {
                double got = ref.stat == "mean"    ? row->cov->mean
                             : ref.stat == "sigma" ? row->cov->sigma
                                                   : row->cov->cov_percent;
                recomputed = format_stat(got);
                match = std::fabs(got - std::atof(stored.c_str())) <= 0.011;
            } else if (row->entropy) {
                if (ref.stat == "entropy") {
                    recomputed = format_stat(row->entropy->entropy_bits);
                    match = std::fabs(row->entropy->entropy_bits - std::atof(stored.c_str())) <=
                            0.0051;
                } else if (ref.stat == "p") {
                    recomputed = std::to_string(row->entropy->mode_count) + "/" +
                                 std::to_string(row->entropy->total);
                    double want;
                    if (auto slash = stored.find('/'); slash != std::string::npos)
                        want = std::atof(stored.c_str()) /
                               std::atof(stored.c_str() + slash + 1);
                    else
                        want = std::atof(stored.c_str());
                    match = std::fabs(row->entropy->p - want) <= 1e-9;
                } else { // mode
                    recomputed = join(row->entropy->modes, ",");
                    auto want = ref.values[i];
                    auto parts_want = std::vector<std::string>{};
                    std::istringstream ws(want);
                    std::string tok;
                    while (std::getline(ws, tok, ',')) parts_want.push_back(tok);
                    std::sort(parts_want.begin(), parts_want.end());
                    auto got_modes = row->entropy->modes;
                    std::sort(got_modes.begin(), got_modes.end());
                    match = got_modes == parts_want;
                }
            }
            if (match) {
                ++report.checks_matched;
            } else {
                report.mismatches.push_back({"", ref.framework,
                                             std::string(to_string(ref.attack_class)) + " " +
                                                 factor_names(ref.framework)[factor] + " " +
                                                 ref.stat,
                                             recomputed, stored});
            }
        }
    }
    (void)corpus;
}

} // namespace

PipelineReport run_pipeline(const CorpusDocument& corpus, const ReportSpec& spec) {
    PipelineReport report;

    std::vector<const CorpusAttack*> ordered;
    for (const auto& attack : corpus.attacks) {
        if (spec.attack_filter && attack.record.id != *spec.attack_filter) continue;
        ordered.push_back(&attack);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const CorpusAttack* a, const CorpusAttack* b) {
                         return id_sort_key(*a) < id_sort_key(*b);
                     });

    std::vector<AssessedAttack> assessed;
    for (const CorpusAttack* attack : ordered) {
        AttackScores scores;
        scores.attack_id = attack->record.id;
        scores.attack_class = attack->record.attack_class;
        AssessedAttack for_stats;
        for_stats.record = attack->record;

        for (const auto& [fw, assessment] : attack->assessments) {
            // 1. consensus recomputation vs recorded consensus
            if (!assessment.assessor_vectors.empty() && assessment.consensus) {
                std::vector<AssessorId> names;
                for (const auto& [assessor, text] : assessment.assessor_rows)
                    names.push_back(assessor);
                ConsensusVector recomputed =
                    aggregate_bundle(assessment.assessor_vectors, fw, names);
                diff_factors(attack->record.id, fw, recomputed.consensus,
                             *assessment.consensus, "consensus", report);
            }
            if (!assessment.consensus) continue;

            // 2. scores from the recorded consensus vs published references
            ScoredConsensus got = score_consensus(fw, *assessment.consensus, scores);
            if (assessment.reference) {
                ++report.checks_total;
                if (score_matches(got, *assessment.reference))
                    ++report.checks_matched;
                else
                    report.mismatches.push_back({attack->record.id, fw, "reference score",
                                                 describe(got), assessment.reference->raw});
            }
            if (assessment.alt_reference) {
                ++report.checks_total;
                if (score_matches(got, *assessment.alt_reference))
                    ++report.checks_matched;
                else
                    report.mismatches.push_back({attack->record.id, fw,
                                                 "alternate reference score", describe(got),
                                                 assessment.alt_reference->raw});
            }
            // 3. published rows that differ from the recorded consensus
            if (assessment.reference_vector) {
                ++report.checks_total;
                if (*assessment.reference_vector == assessment.consensus_text)
                    ++report.checks_matched;
                else
                    report.mismatches.push_back({attack->record.id, fw, "published vector",
                                                 assessment.consensus_text,
                                                 *assessment.reference_vector});
            }
            if (assessment.alt_consensus) {
                ++report.checks_total;
                if (*assessment.alt_consensus == assessment.consensus_text)
                    ++report.checks_matched;
                else
                    report.mismatches.push_back({attack->record.id, fw,
                                                 "alternate consensus row",
                                                 assessment.consensus_text,
                                                 *assessment.alt_consensus});
            }
            for_stats.consensus[fw] = *assessment.consensus;
        }
        report.scores.push_back(std::move(scores));
        assessed.push_back(std::move(for_stats));
    }

    if (!assessed.empty()) report.variability = build_class_tables(assessed);

    if (spec.stats_reference)
        check_stats_reference(corpus, report.variability, *spec.stats_reference, report);

    return report;
}

std::vector<VariabilityRow> analyze_corpus(const CorpusDocument& corpus) {
    std::vector<AssessedAttack> assessed;
    for (const auto& attack : corpus.attacks) {
        AssessedAttack a;
        a.record = attack.record;
        for (const auto& [fw, assessment] : attack.assessments)
            if (assessment.consensus) a.consensus[fw] = *assessment.consensus;
        assessed.push_back(std::move(a));
    }
    return build_class_tables(assessed);
}

std::vector<ChartSeries> chart_data(const CorpusDocument& corpus) {
    std::vector<ChartSeries> out;
    for (const auto& attack : corpus.attacks) {
        for (FrameworkId fw : {FrameworkId::Cvss31Base, FrameworkId::SsvcSupplier}) {
            auto it = attack.assessments.find(fw);
            if (it == attack.assessments.end() || !it->second.consensus) continue;
            ChartSeries series;
            series.attack_id = attack.record.id;
            series.framework = fw;
            if (fw == FrameworkId::Cvss31Base)
                series.points = chart_encode(std::get<CvssVector>(*it->second.consensus));
            else
                series.points = chart_encode(std::get<SsvcVector>(*it->second.consensus));
            out.push_back(std::move(series));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_text(const PipelineReport& report) {
    std::ostringstream out;
    out << "== Scores ==\n";
    for (const auto& s : report.scores) {
        out << s.attack_id << " (" << to_string(s.attack_class) << ")\n";
        if (s.dread)
            out << "  dread  " << format_score(s.dread->score) << " ("
                << to_string(s.dread->label) << ")\n";
        if (s.cvss)
            out << "  cvss   " << format_score(s.cvss->base) << " (" << to_string(s.cvss->label)
                << ")\n";
        if (s.owasp)
            out << "  owasp  " << format_score(s.owasp->numeric) << " ("
                << to_string(s.owasp->label) << ")  likelihood "
                << format_stat(s.owasp->likelihood) << " impact " << format_stat(s.owasp->impact)
                << "\n";
        if (s.ssvc) out << "  ssvc   " << to_string(*s.ssvc) << "\n";
    }
    out << "\n== Variability by class ==\n";
    AttackClass last_class{};
    FrameworkId last_fw{};
    bool first = true;
    for (const auto& row : report.variability) {
        if (first || row.attack_class != last_class || row.framework != last_fw) {
            out << "[" << to_string(row.attack_class) << " / " << to_string(row.framework)
                << "]\n";
            last_class = row.attack_class;
            last_fw = row.framework;
            first = false;
        }
        out << "  " << row.factor << ": ";
        if (row.cov) {
            out << "mean " << format_stat(row.cov->mean) << "  sigma "
                << format_stat(row.cov->sigma) << "  cov " << format_stat(row.cov->cov_percent)
                << "%";
        } else if (row.entropy) {
            out << "mode " << join(row.entropy->modes, ",") << "  p "
                << row.entropy->mode_count << "/" << row.entropy->total << "  H "
                << format_stat(row.entropy->entropy_bits);
        }
        out << "\n";
    }
    out << "\n== Cross-check ==\n";
    out << "checked " << report.checks_total << ", matched " << report.checks_matched
        << ", mismatched " << report.mismatches.size() << "\n";
    for (const auto& m : report.mismatches) {
        out << "  ";
        if (!m.attack_id.empty()) out << m.attack_id << " ";
        out << to_string(m.framework) << " " << m.subject << ": recomputed " << m.recomputed
            << " / stored " << m.stored << "\n";
    }
    return out.str();
}

std::string render_csv(const PipelineReport& report) {
    std::ostringstream out;
    out << "record,class,framework,factor,mean,sigma,cov_percent,modes,p,entropy_bits\n";
    for (const auto& row : report.variability) {
        out << "variability," << to_string(row.attack_class) << "," << to_string(row.framework)
            << "," << row.factor << ",";
        if (row.cov) {
            out << format_stat(row.cov->mean) << "," << format_stat(row.cov->sigma) << ","
                << format_stat(row.cov->cov_percent) << ",,,";
        } else if (row.entropy) {
            out << ",,," << join(row.entropy->modes, ";") << "," << row.entropy->mode_count
                << "/" << row.entropy->total << "," << format_stat(row.entropy->entropy_bits);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const PipelineReport& report) {
    nlohmann::ordered_json j;
    j["scores"] = nlohmann::ordered_json::array();
    for (const auto& s : report.scores) {
        nlohmann::ordered_json e;
        e["id"] = s.attack_id;
        e["class"] = to_string(s.attack_class);
        if (s.dread) {
            e["dread"] = {{"score", s.dread->score},
                          {"label", to_string(s.dread->label)}};
        }
        if (s.cvss) {
            e["cvss"] = {{"base", s.cvss->base},
                         {"label", to_string(s.cvss->label)},
                         {"iss", s.cvss->iss},
                         {"impact", s.cvss->impact},
                         {"exploitability", s.cvss->exploitability}};
        }
        if (s.owasp) {
            e["owasp"] = {{"numeric", s.owasp->numeric},
                          {"label", to_string(s.owasp->label)},
                          {"likelihood", s.owasp->likelihood},
                          {"impact", s.owasp->impact},
                          {"likelihood_level", to_string(s.owasp->likelihood_level)},
                          {"impact_level", to_string(s.owasp->impact_level)}};
        }
        if (s.ssvc) e["ssvc"] = to_string(*s.ssvc);
        j["scores"].push_back(std::move(e));
    }
    j["variability"] = nlohmann::ordered_json::array();
    for (const auto& row : report.variability) {
        nlohmann::ordered_json r;
        r["class"] = to_string(row.attack_class);
        r["framework"] = to_string(row.framework);
        r["factor"] = row.factor;
        if (row.cov) {
            r["mean"] = row.cov->mean;
            r["sigma"] = row.cov->sigma;
            if (!std::isnan(row.cov->cov_percent)) r["cov_percent"] = row.cov->cov_percent;
        } else if (row.entropy) {
            r["modes"] = row.entropy->modes;
            r["p"] = row.entropy->p;
            r["entropy_bits"] = row.entropy->entropy_bits;
        }
        j["variability"].push_back(std::move(r));
    }
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const auto& m : report.mismatches) {
        j["mismatches"].push_back({{"attack", m.attack_id},
                                   {"framework", to_string(m.framework)},
                                   {"subject", m.subject},
                                   {"recomputed", m.recomputed},
                                   {"stored", m.stored}});
    }
    j["checks"] = {{"total", report.checks_total}, {"matched", report.checks_matched}};
    return j.dump(2);
}

std::string render(const PipelineReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Text: return render_text(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Json: return render_json(report);
    }
    return {};
}

} // namespace aascore
