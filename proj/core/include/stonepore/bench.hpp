#pragma once

#include "stonepore/gray_image.hpp"
#include "stonepore/lbp.hpp"

namespace stonepore {

/// Wall-time comparison of dense 1D labeling (both orientations)
/// against dense 2D labeling over the same interior pixels (the 2D
/// operator's border margin is excluded for both).
struct LabelBenchResult {
    double seconds_1d = 0.0;
    double seconds_2d = 0.0;
    long interior_pixels = 0;
    int repeats = 0;
    // Accumulated label sums; published so the timed loops cannot be
    // optimized away.
    long long sink_1d = 0;
    long long sink_2d = 0;

    double ratio() const { return seconds_1d / seconds_2d; }
};

/// Times `repeats` full passes of each operator and keeps the fastest
/// pass per operator (minimum is the standard noise-resistant choice).
LabelBenchResult run_label_benchmark(const GrayImage& img, const Lbp1dConfig& cfg1d,
                                     const Lbp2dConfig& cfg2d, int repeats);

} // namespace stonepore
