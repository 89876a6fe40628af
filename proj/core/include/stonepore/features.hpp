#pragma once

#include <utility>
#include <vector>

#include "stonepore/gray_image.hpp"
#include "stonepore/lbp.hpp"

namespace stonepore {

/// Normalized label histogram: probs[k] is the fraction of operator
/// outputs equal to k, so the entries sum to 1. sample_count keeps the
/// number of labels the frequencies were estimated from.
struct FeatureVector {
    std::vector<double> probs;
    long sample_count = 0;

    int dimension() const { return static_cast<int>(probs.size()); }
};

/// Builds a normalized histogram from raw labels. Throws DomainError if
/// labels is empty or any label falls outside [0, label_space).
FeatureVector label_histogram(const std::vector<int>& labels, int label_space);

/// Feature pair for a region: .first scans segments along rows (F_x),
/// .second along columns (F_y). Both have dimension L + 1.
std::pair<FeatureVector, FeatureVector> extract_features(const RegionView& region,
                                                         const Lbp1dConfig& cfg);

std::pair<FeatureVector, FeatureVector> extract_features(const GrayImage& img,
                                                         const Lbp1dConfig& cfg);

/// Log-likelihood ratio of sample against model. Both vectors are
/// epsilon-smoothed before the sum so zero bins stay finite; the result
/// is clamped at 0 so identical inputs map to exactly 0.
double log_likelihood_ratio(const FeatureVector& sample, const FeatureVector& model);

} // namespace stonepore
