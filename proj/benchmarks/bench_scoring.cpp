#include <benchmark/benchmark.h>

#include "aascore/pipeline.hpp"

using namespace aascore;

namespace {
const std::string kFixture = std::string(AASCORE_DATA_DIR) + "/aa56.corpus";
}

static void BM_CvssBaseFullEnumeration(benchmark::State& state) {
    std::vector<CvssVector> vectors;
    for (auto av : {CvssAv::Network, CvssAv::Adjacent, CvssAv::Local, CvssAv::Physical})
        for (auto ac : {CvssAc::Low, CvssAc::High})
            for (auto pr : {CvssPr::None, CvssPr::Low, CvssPr::High})
                for (auto ui : {CvssUi::None, CvssUi::Required})
                    for (auto s : {CvssScope::Unchanged, CvssScope::Changed})
                        for (auto c : {CvssImpactValue::None, CvssImpactValue::Low,
                                       CvssImpactValue::High})
                            for (auto i : {CvssImpactValue::None, CvssImpactValue::Low,
                                           CvssImpactValue::High})
                                for (auto a : {CvssImpactValue::None, CvssImpactValue::Low,
                                               CvssImpactValue::High})
                                    vectors.push_back({av, ac, pr, ui, s, c, i, a});
    for (auto _ : state) {
        double acc = 0.0;
        for (const auto& v : vectors) acc += cvss_base(v).base;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(vectors.size()));
}
BENCHMARK(BM_CvssBaseFullEnumeration);

static void BM_ParseCvss(benchmark::State& state) {
    const std::string text = "AV:N/AC:H/PR:L/UI:R/S:C/C:H/I:L/A:N";
    for (auto _ : state) {
        CvssVector v = parse_cvss(text);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ParseCvss);

static void BM_LoadCorpus(benchmark::State& state) {
    for (auto _ : state) {
        CorpusDocument doc = load_corpus(kFixture);
        benchmark::DoNotOptimize(doc);
    }
}
BENCHMARK(BM_LoadCorpus);

static void BM_FullPipeline(benchmark::State& state) {
    CorpusDocument doc = load_corpus(kFixture);
    for (auto _ : state) {
        PipelineReport report = run_pipeline(doc);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_FullPipeline);

BENCHMARK_MAIN();
