#include <benchmark/benchmark.h>

#include "stonepore/detector.hpp"
#include "stonepore/features.hpp"
#include "stonepore/gray_image.hpp"
#include "stonepore/lbp.hpp"
#include "stonepore/retinex.hpp"
#include "stonepore/synth.hpp"

using namespace stonepore;

namespace {

GrayImage texture(int size) {
    return synth_texture(TextureKind::kBlotchy, size, size, 42);
}

void BM_Lbp1dLabels(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const GrayImage img = texture(size);
    const Lbp1dConfig cfg = Lbp1dConfig::with_length(8);
    const RegionView region = full_region(img);
    for (auto _ : state) {
        long long sink = 0;
        for_each_horizontal_segment(region, cfg.segment_length,
                                    [&](const SegmentView& s) {
                                        sink += lbp1d_label(s, cfg);
                                    });
        for_each_vertical_segment(region, cfg.segment_length,
                                  [&](const SegmentView& s) {
                                      sink += lbp1d_label(s, cfg);
                                  });
        benchmark::DoNotOptimize(sink);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(size) * size);
}

void BM_Lbp2dCircularLabels(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const GrayImage img = texture(size);
    Lbp2dConfig cfg;
    const Lbp2dLabeler labeler(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(labeler.labels(img));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(size) * size);
}

void BM_Lbp2dSquareLabels(benchmark::State& state) {
    const int size = static_cast<int>(state.range(0));
    const GrayImage img = texture(size);
    Lbp2dConfig cfg;
    cfg.neighborhood = Lbp2dConfig::Neighborhood::kSquare;
    const Lbp2dLabeler labeler(cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(labeler.labels(img));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(size) * size);
}

void BM_WindowFeatures(benchmark::State& state) {
    const GrayImage img = texture(64);
    const Lbp1dConfig cfg = Lbp1dConfig::with_length(8);
    const RegionView window = RegionView(img, 16, 16, 16, 16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_features(window, cfg));
    }
}

void BM_GaussianBlur(benchmark::State& state) {
    const GrayImage img = texture(static_cast<int>(state.range(0)));
    RetinexConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ssr_normalize(img, cfg));
    }
}

void BM_TrainDetect(benchmark::State& state) {
    const GrayImage clean = synth_texture(TextureKind::kPeriodic, 512, 512, 7);
    PoreSpec spec;
    spec.count = 5;
    spec.contrast = 40.0;
    const SynthResult porous = inject_pores(clean, spec, 1007);
    const TrainedModel model = train(clean, DetectorConfig{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect(porous.image, model));
    }
}

} // namespace

BENCHMARK(BM_Lbp1dLabels)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lbp2dCircularLabels)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lbp2dSquareLabels)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowFeatures);
BENCHMARK(BM_GaussianBlur)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrainDetect)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
