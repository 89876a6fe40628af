#pragma once

#include <optional>
#include <vector>

#include "stonepore/features.hpp"
#include "stonepore/gray_image.hpp"
#include "stonepore/lbp.hpp"
#include "stonepore/retinex.hpp"

namespace stonepore {

struct DetectorConfig {
    int window_size = 16;
    /// Overlap between neighboring training windows; stride is
    /// window_size - train_overlap. Detection always tiles without
    /// overlap.
    int train_overlap = 8;
    Lbp1dConfig lbp;
    /// When set, images are retinex-normalized before any feature
    /// extraction (training and detection alike).
    std::optional<RetinexConfig> retinex;

    void validate() const;

    /// Operator placements per window and orientation:
    /// (window_size - L + 1) * window_size.
    long operators_per_window() const;
};

/// Reference model learned from one defect-free sample: the whole-image
/// feature pair and the per-orientation decision thresholds (largest
/// training-window divergence from the reference).
struct TrainedModel {
    DetectorConfig config;
    FeatureVector model_x;
    FeatureVector model_y;
    double threshold_x = 0.0;
    double threshold_y = 0.0;
};

TrainedModel train(const GrayImage& defect_free, const DetectorConfig& cfg);

/// Per-window detection record, in grid order.
struct WindowStats {
    Window origin;
    double divergence_x = 0.0;
    double divergence_y = 0.0;
    bool porous = false;
};

struct DetectionResult {
    DefectPattern pattern;
    std::vector<WindowStats> windows;
};

/// Tiles the image with non-overlapping windows and flags each window
/// whose divergence exceeds the trained threshold in either
/// orientation. Flagged windows are set wholesale in the pattern.
DetectionResult detect(const GrayImage& img, const TrainedModel& model);

} // namespace stonepore
