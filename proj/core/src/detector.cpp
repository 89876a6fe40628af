#include "stonepore/detector.hpp"

#include <algorithm>

#include "stonepore/error.hpp"

namespace stonepore {

void DetectorConfig::validate() const {
    lbp.validate();
    if (window_size < lbp.segment_length) {
        throw DomainError("window size must be at least the segment length");
    }
    if (train_overlap < 0 || train_overlap >= window_size) {
        throw DomainError("training overlap must lie in [0, window_size)");
    }
    if (retinex) {
        retinex->validate();
    }
}

long DetectorConfig::operators_per_window() const {
    return static_cast<long>(window_size - lbp.segment_length + 1) * window_size;
}

namespace {

GrayImage preprocess(const GrayImage& img, const DetectorConfig& cfg) {
    if (cfg.retinex) {
        return ssr_normalize(img, *cfg.retinex);
    }
    return img;
}

} // namespace

TrainedModel train(const GrayImage& defect_free, const DetectorConfig& cfg) {
    cfg.validate();
    const GrayImage img = preprocess(defect_free, cfg);

    auto [model_x, model_y] = extract_features(img, cfg.lbp);

    const WindowGrid grid =
        partition_windows(img, cfg.window_size, cfg.train_overlap);
    double tx = 0.0;
    double ty = 0.0;
    for (const Window& w : grid.windows) {
        const RegionView region = window_region(img, w, cfg.window_size);
        auto [sx, sy] = extract_features(region, cfg.lbp);
        tx = std::max(tx, log_likelihood_ratio(sx, model_x));
        ty = std::max(ty, log_likelihood_ratio(sy, model_y));
    }

    return TrainedModel{cfg, std::move(model_x), std::move(model_y), tx, ty};
}

DetectionResult detect(const GrayImage& input, const TrainedModel& model) {
    model.config.validate();
    if (model.model_x.dimension() != model.config.lbp.label_space() ||
        model.model_y.dimension() != model.config.lbp.label_space()) {
        throw DomainError("model feature dimension does not match its configuration");
    }
    const GrayImage img = preprocess(input, model.config);
    const int w = model.config.window_size;

    DetectionResult result;
    result.pattern = DefectPattern::zeros(img.width(), img.height());
    const WindowGrid grid = partition_windows(img, w, 0);
    result.windows.reserve(grid.windows.size());

    for (const Window& origin : grid.windows) {
        const RegionView region = window_region(img, origin, w);
        auto [sx, sy] = extract_features(region, model.config.lbp);
        WindowStats stats;
        stats.origin = origin;
        stats.divergence_x = log_likelihood_ratio(sx, model.model_x);
        stats.divergence_y = log_likelihood_ratio(sy, model.model_y);
        stats.porous = stats.divergence_x > model.threshold_x ||
                       stats.divergence_y > model.threshold_y;
        if (stats.porous) {
            for (int r = 0; r < w; ++r) {
                for (int c = 0; c < w; ++c) {
                    result.pattern.set(origin.row0 + r, origin.col0 + c, true);
                }
            }
        }
        result.windows.push_back(stats);
    }
    return result;
}

} // namespace stonepore
