// Command-line front end: scoring single vectors, replaying the corpus
// through aggregation, and emitting analysis reports.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aascore/aggregate.hpp"
#include "aascore/chart.hpp"
#include "aascore/corpus.hpp"
#include "aascore/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

using namespace aascore;

void print_score(FrameworkId fw, const std::string& text) {
    FactorVector v = parse_vector(fw, text);
    switch (fw) {
    case FrameworkId::Dread: {
        auto r = dread_score(std::get<DreadVector>(v));
        std::cout << format_score(r.score) << " (" << to_string(r.label) << ")\n";
        break;
    }
    case FrameworkId::Cvss31Base: {
        auto r = cvss_base(std::get<CvssVector>(v));
        std::cout << format_score(r.base) << " (" << to_string(r.label) << ")\n";
        std::cout << "  iss " << r.iss << "  impact " << r.impact << "  exploitability "
                  << r.exploitability << "\n";
        break;
    }
    case FrameworkId::OwaspRR: {
        auto r = owasp_evaluate(std::get<OwaspVector>(v));
        std::cout << format_score(r.numeric) << " (" << to_string(r.label) << ")\n";
        std::cout << "  threat-agent " << r.subscores.threat_agent << "  vulnerability "
                  << r.subscores.vulnerability << "  technical-impact "
                  << r.subscores.technical_impact << "  business-impact "
                  << r.subscores.business_impact << "\n";
        std::cout << "  likelihood " << r.likelihood << " (" << to_string(r.likelihood_level)
                  << ")  impact " << r.impact << " (" << to_string(r.impact_level) << ")\n";
        break;
    }
    case FrameworkId::SsvcSupplier: {
        const auto& sv = std::get<SsvcVector>(v);
        std::cout << to_string(ssvc_decide(sv)) << "\n";
        std::cout << "  utility " << code_of(sv.utility) << " (from A:" << code_of(sv.automatable)
                  << " V:" << code_of(sv.value_density) << ")\n";
        break;
    }
    }
}

void print_aggregate(const CorpusDocument& corpus, const std::string& attack_filter) {
    for (const auto& attack : corpus.attacks) {
        if (!attack_filter.empty() && attack.record.id != attack_filter) continue;
        std::cout << attack.record.id << " (" << to_string(attack.record.attack_class) << ")\n";
        for (const auto& [fw, assessment] : attack.assessments) {
            if (assessment.assessor_vectors.empty()) continue;
            std::vector<AssessorId> names;
            for (const auto& [assessor, text] : assessment.assessor_rows)
                names.push_back(assessor);
            auto consensus = aggregate_bundle(assessment.assessor_vectors, fw, names);
            std::cout << "  " << to_string(fw) << " " << serialize(consensus.consensus);
            if (assessment.consensus && !(consensus.consensus == *assessment.consensus))
                std::cout << "   [recorded: " << assessment.consensus_text << "]";
            std::cout << "\n";
        }
    }
}

void print_chart_data(const CorpusDocument& corpus) {
    for (const auto& series : chart_data(corpus)) {
        std::cout << series.attack_id << " " << to_string(series.framework) << ":";
        for (const auto& point : series.points)
            std::cout << " " << point.factor << "=" << point.encoded;
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vulnerability-scoring engines (DREAD, CVSS v3.1 base, OWASP Risk Rating, "
                 "SSVC supplier) with consensus aggregation and variability analysis"};
    app.require_subcommand(1);

    std::string framework_name, vector_text;
    auto* score = app.add_subcommand("score", "Score a single vector string");
    score->add_option("--framework", framework_name, "dread|cvss|owasp|ssvc")->required();
    score->add_option("--vector", vector_text, "vector string in slash notation")->required();

    std::string corpus_path, attack_filter;
    auto* aggregate = app.add_subcommand("aggregate", "Recompute consensus vectors");
    aggregate->add_option("--corpus", corpus_path, "corpus file")->required();
    aggregate->add_option("--attack", attack_filter, "restrict to one attack id");

    std::string group_by = "class";
    auto* analyze = app.add_subcommand("analyze", "Per-class factor variability tables");
    analyze->add_option("--corpus", corpus_path, "corpus file")->required();
    analyze->add_option("--group-by", group_by, "grouping (only: class)");

    std::string format_name = "text", stats_ref;
    auto* report = app.add_subcommand("report", "Full pipeline report");
    report->add_option("--corpus", corpus_path, "corpus file")->required();
    report->add_option("--format", format_name, "text|csv|json");
    report->add_option("--stats-ref", stats_ref, "published statistics reference file");

    auto* chart = app.add_subcommand("chart-data", "Spider-chart point series");
    chart->add_option("--corpus", corpus_path, "corpus file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (score->parsed()) {
            print_score(framework_from_string(framework_name), vector_text);
        } else if (aggregate->parsed()) {
            print_aggregate(load_corpus(corpus_path), attack_filter);
        } else if (analyze->parsed()) {
            if (group_by != "class") {
                std::cerr << "error: unsupported --group-by \"" << group_by << "\"\n";
                return kExitValidation;
            }
            CorpusDocument corpus = load_corpus(corpus_path);
            PipelineReport r;
            r.variability = analyze_corpus(corpus);
            std::cout << render_text(r);
        } else if (report->parsed()) {
            ReportSpec spec;
            if (format_name == "text") spec.format = ReportFormat::Text;
            else if (format_name == "csv") spec.format = ReportFormat::Csv;
            else if (format_name == "json") spec.format = ReportFormat::Json;
            else {
                std::cerr << "error: unknown --format \"" << format_name << "\"\n";
                return kExitValidation;
            }
            if (!stats_ref.empty()) spec.stats_reference = stats_ref;
            CorpusDocument corpus = load_corpus(corpus_path);
            std::cout << render(run_pipeline(corpus, spec), spec.format);
        } else if (chart->parsed()) {
            print_chart_data(load_corpus(corpus_path));
        }
    } catch (const CorpusError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return err.code() == CorpusError::Code::Io ? kExitIo : kExitValidation;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
