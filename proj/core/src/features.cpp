#include "stonepore/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stonepore/error.hpp"

namespace stonepore {

namespace {

constexpr double kSmoothingEps = 1e-6;

} // namespace

FeatureVector label_histogram(const std::vector<int>& labels, int label_space) {
    if (label_space < 1) {
        throw DomainError("label space must be positive");
    }
    if (labels.empty()) {
        throw DomainError("cannot build a histogram from zero labels");
    }
    std::vector<double> counts(static_cast<std::size_t>(label_space), 0.0);
    for (int label : labels) {
        if (label < 0 || label >= label_space) {
            throw DomainError("label " + std::to_string(label) +
                              " outside [0, " + std::to_string(label_space) + ")");
        }
        counts[static_cast<std::size_t>(label)] += 1.0;
    }
    const double total = static_cast<double>(labels.size());
    for (double& c : counts) {
        c /= total;
    }
    return FeatureVector{std::move(counts), static_cast<long>(labels.size())};
}

namespace {

FeatureVector histogram_from_counts(const std::vector<long>& counts) {
    long total = 0;
    for (long c : counts) {
        total += c;
    }
    FeatureVector f;
    f.sample_count = total;
    f.probs.reserve(counts.size());
    for (long c : counts) {
        f.probs.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    return f;
}

} // namespace

std::pair<FeatureVector, FeatureVector> extract_features(const RegionView& region,
                                                         const Lbp1dConfig& cfg) {
    cfg.validate();
    std::vector<long> counts(static_cast<std::size_t>(cfg.label_space()), 0);

    accumulate_lbp1d_labels(region, cfg, Orientation::kHorizontal, counts.data());
    FeatureVector fx = histogram_from_counts(counts);

    std::fill(counts.begin(), counts.end(), 0L);
    accumulate_lbp1d_labels(region, cfg, Orientation::kVertical, counts.data());
    FeatureVector fy = histogram_from_counts(counts);

    return {std::move(fx), std::move(fy)};
}

std::pair<FeatureVector, FeatureVector> extract_features(const GrayImage& img,
                                                         const Lbp1dConfig& cfg) {
    return extract_features(RegionView(img, 0, 0, img.height(), img.width()), cfg);
}

double log_likelihood_ratio(const FeatureVector& sample, const FeatureVector& model) {
    if (sample.dimension() != model.dimension()) {
        throw DomainError("feature vectors have mismatched dimensions");
    }
    if (sample.dimension() == 0) {
        throw DomainError("feature vectors are empty");
    }
    const double dim = static_cast<double>(sample.dimension());
    const double denom = 1.0 + dim * kSmoothingEps;
    double sum = 0.0;
    for (int i = 0; i < sample.dimension(); ++i) {
        const double s = (sample.probs[static_cast<std::size_t>(i)] + kSmoothingEps) / denom;
        const double m = (model.probs[static_cast<std::size_t>(i)] + kSmoothingEps) / denom;
        sum += s * std::log(s / m);
    }
    return std::max(0.0, sum);
}

} // namespace stonepore
