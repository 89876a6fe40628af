#include "stonepore/bench.hpp"

#include <algorithm>
#include <chrono>

#include "stonepore/error.hpp"

namespace stonepore {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

LabelBenchResult run_label_benchmark(const GrayImage& img, const Lbp1dConfig& cfg1d,
                                     const Lbp2dConfig& cfg2d, int repeats) {
    cfg1d.validate();
    const Lbp2dLabeler labeler(cfg2d);
    if (repeats < 1) {
        throw DomainError("benchmark needs at least one repeat");
    }
    const int margin = cfg2d.border_margin();
    const int rows = img.height() - 2 * margin;
    const int cols = img.width() - 2 * margin;
    if (rows < cfg1d.segment_length || cols < cfg1d.segment_length || rows < 1) {
        throw DomainError("image too small for the benchmark operators");
    }
    const RegionView interior(img, margin, margin, rows, cols);

    LabelBenchResult result;
    result.interior_pixels = static_cast<long>(rows) * cols;
    result.repeats = repeats;
    result.seconds_1d = result.seconds_2d = 1e300;

    std::vector<long> counts(static_cast<std::size_t>(cfg1d.label_space()));
    for (int rep = 0; rep < repeats; ++rep) {
        std::fill(counts.begin(), counts.end(), 0L);
        const auto start = Clock::now();
        accumulate_lbp1d_labels(interior, cfg1d, Orientation::kHorizontal,
                                counts.data());
        accumulate_lbp1d_labels(interior, cfg1d, Orientation::kVertical,
                                counts.data());
        result.seconds_1d = std::min(result.seconds_1d, seconds_since(start));
        long long sink = 0;
        for (std::size_t k = 0; k < counts.size(); ++k) {
            sink += static_cast<long long>(k) * counts[k];
        }
        result.sink_1d = sink;
    }

    for (int rep = 0; rep < repeats; ++rep) {
        long long sink = 0;
        const auto start = Clock::now();
        for (int r = margin; r < margin + rows; ++r) {
            for (int c = margin; c < margin + cols; ++c) {
                sink += labeler.label(img, r, c);
            }
        }
        result.seconds_2d = std::min(result.seconds_2d, seconds_since(start));
        result.sink_2d = sink;
    }
    return result;
}

} // namespace stonepore
