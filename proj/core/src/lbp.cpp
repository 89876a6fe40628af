#include "stonepore/lbp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "stonepore/error.hpp"

namespace stonepore {

namespace {

// Interpolated sample values within this distance of the center value
// count as ties (bit 1). Keeps the comparison stable when bilinear
// round-off lands within an ulp of an exact tie, which would otherwise
// make labels depend on summation order (and thus on image rotation).
constexpr double kSampleTieEps = 1e-9;

// Circle coordinates this close to a grid point are read directly
// instead of interpolated.
constexpr double kCoordSnapEps = 1e-9;

} // namespace

Lbp1dConfig Lbp1dConfig::with_length(int length) {
    Lbp1dConfig cfg;
    cfg.segment_length = length;
    cfg.uniformity_threshold = length / 4;
    cfg.validate();
    return cfg;
}

void Lbp1dConfig::validate() const {
    if (segment_length < 2) {
        throw DomainError("segment length must be at least 2");
    }
    if (uniformity_threshold < 0 || uniformity_threshold > segment_length) {
        throw DomainError("uniformity threshold must lie in [0, L]");
    }
}

int Lbp2dConfig::border_margin() const {
    return neighborhood == Neighborhood::kCircular
               ? static_cast<int>(std::ceil(radius))
               : static_cast<int>(std::lround(radius));
}

void Lbp2dConfig::validate() const {
    if (neighbors < 4 || neighbors > 30) {
        throw DomainError("neighbor count must lie in [4, 30]");
    }
    if (!(radius > 0.0)) {
        throw DomainError("neighborhood radius must be positive");
    }
    if (uniformity_threshold < 0 || uniformity_threshold > neighbors) {
        throw DomainError("uniformity threshold must lie in [0, P]");
    }
    if (neighborhood == Neighborhood::kSquare) {
        const int r = static_cast<int>(std::lround(radius));
        if (std::abs(radius - r) > 1e-12 || neighbors != 8 * r) {
            throw DomainError("square neighborhood requires integer radius R and P = 8R");
        }
    }
}

int circular_transitions(std::uint32_t bits, int bit_count) {
    if (bit_count < 2) {
        return 0;
    }
    const std::uint32_t mask =
        bit_count >= 32 ? ~0u : ((1u << bit_count) - 1u);
    bits &= mask;
    // XOR with the one-step rotation marks every adjacent unequal pair
    // exactly once, wrap included.
    const std::uint32_t rotated =
        ((bits << 1) | (bits >> (bit_count - 1))) & mask;
    return std::popcount(bits ^ rotated);
}

namespace {

std::uint32_t segment_bits(const SegmentView& segment, const Lbp1dConfig& cfg) {
    if (segment.length != cfg.segment_length) {
        throw DomainError("segment has length " + std::to_string(segment.length) +
                          ", config expects " + std::to_string(cfg.segment_length));
    }
    const double reference = segment[0];
    std::uint32_t bits = 0;
    for (int i = 1; i < segment.length; ++i) {
        bits |= static_cast<std::uint32_t>(sign_bit(segment[i] - reference)) << (i - 1);
    }
    return bits;
}

inline int label_from_bits(std::uint32_t bits, const Lbp1dConfig& cfg) {
    if (circular_transitions(bits, cfg.segment_length - 1) > cfg.uniformity_threshold) {
        return cfg.segment_length;
    }
    return std::popcount(bits);
}

// All 2^(L-1) labels, tabulated once so the dense path can histogram with a
// single indexed load per placement. Only built for short segments; labels
// fit in a byte because L <= 16.
std::vector<std::uint8_t> label_table(const Lbp1dConfig& cfg) {
    const std::uint32_t patterns = 1u << (cfg.segment_length - 1);
    std::vector<std::uint8_t> table(patterns);
    for (std::uint32_t bits = 0; bits < patterns; ++bits) {
        table[bits] = static_cast<std::uint8_t>(label_from_bits(bits, cfg));
    }
    return table;
}

} // namespace

int uniformity_1d(const SegmentView& segment, const Lbp1dConfig& cfg) {
    return circular_transitions(segment_bits(segment, cfg), cfg.segment_length - 1);
}

int lbp1d_label(const SegmentView& segment, const Lbp1dConfig& cfg) {
    return label_from_bits(segment_bits(segment, cfg), cfg);
}

void accumulate_lbp1d_labels(const RegionView& region, const Lbp1dConfig& cfg,
                             Orientation orientation, long* counts) {
    cfg.validate();
    const int L = cfg.segment_length;
    const bool tabulated = L <= 16;
    const std::vector<std::uint8_t> table =
        tabulated ? label_table(cfg) : std::vector<std::uint8_t>{};
    const auto label_of = [&](std::uint64_t packed) -> int {
        const auto bits = static_cast<std::uint32_t>(packed);
        return tabulated ? table[bits] : label_from_bits(bits, cfg);
    };
    if (orientation == Orientation::kHorizontal) {
        horizontal_segment_count(region, L); // validates the geometry
        const int placements = region.cols() - L + 1;
        // 64-bit lanes match the width of a double-compare mask, which is
        // what lets the bit-plane passes vectorize.
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(placements));
        for (int r = 0; r < region.rows(); ++r) {
            const double* row = region.row_ptr(r);
            std::fill(bits.begin(), bits.end(), std::uint64_t{0});
            for (int i = 1; i < L; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << (i - 1);
                const double* shifted = row + i;
                std::uint64_t* b = bits.data();
                for (int c = 0; c < placements; ++c) {
                    b[c] |= (shifted[c] >= row[c]) ? bit : 0;
                }
            }
            for (int c = 0; c < placements; ++c) {
                ++counts[label_of(bits[static_cast<std::size_t>(c)])];
            }
        }
    } else {
        vertical_segment_count(region, L); // validates the geometry
        const int placements = region.rows() - L + 1;
        const int cols = region.cols();
        std::vector<std::uint64_t> bits(static_cast<std::size_t>(cols));
        for (int r = 0; r < placements; ++r) {
            const double* ref = region.row_ptr(r);
            std::fill(bits.begin(), bits.end(), std::uint64_t{0});
            for (int i = 1; i < L; ++i) {
                const std::uint64_t bit = std::uint64_t{1} << (i - 1);
                const double* neighbor = region.row_ptr(r + i);
                std::uint64_t* b = bits.data();
                for (int c = 0; c < cols; ++c) {
                    b[c] |= (neighbor[c] >= ref[c]) ? bit : 0;
                }
            }
            for (int c = 0; c < cols; ++c) {
                ++counts[label_of(bits[static_cast<std::size_t>(c)])];
            }
        }
    }
}

int uniformity_2d(std::uint32_t neighbor_bits, const Lbp2dConfig& cfg) {
    return circular_transitions(neighbor_bits, cfg.neighbors);
}

namespace {

// Perimeter of the (2r+1)^2 square walked counterclockwise from the
// east midpoint, matching the circular sampling order.
std::vector<std::pair<int, int>> square_ring_offsets(int r) {
    std::vector<std::pair<int, int>> ring;
    ring.reserve(8 * static_cast<std::size_t>(r));
    for (int dr = 0; dr >= -r + 1; --dr) ring.emplace_back(dr, r);
    for (int dc = r; dc >= -r + 1; --dc) ring.emplace_back(-r, dc);
    for (int dr = -r; dr <= r - 1; ++dr) ring.emplace_back(dr, -r);
    for (int dc = -r; dc <= r - 1; ++dc) ring.emplace_back(r, dc);
    for (int dr = r; dr >= 1; --dr) ring.emplace_back(dr, r);
    return ring;
}

} // namespace

Lbp2dLabeler::Lbp2dLabeler(const Lbp2dConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    plan_.resize(static_cast<std::size_t>(cfg_.neighbors));
    if (cfg_.neighborhood == Lbp2dConfig::Neighborhood::kSquare) {
        const auto ring = square_ring_offsets(static_cast<int>(std::lround(cfg_.radius)));
        for (int i = 0; i < cfg_.neighbors; ++i) {
            plan_[static_cast<std::size_t>(i)] =
                Sample{ring[static_cast<std::size_t>(i)].first,
                       ring[static_cast<std::size_t>(i)].second,
                       0, 0, 0, 0, true};
        }
        return;
    }
    for (int i = 0; i < cfg_.neighbors; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / cfg_.neighbors;
        const double dr = -cfg_.radius * std::sin(angle);
        const double dc = cfg_.radius * std::cos(angle);
        Sample s;
        double fr = dr - std::floor(dr);
        double fc = dc - std::floor(dc);
        s.dr = static_cast<int>(std::floor(dr));
        s.dc = static_cast<int>(std::floor(dc));
        if (fr < kCoordSnapEps) {
            fr = 0.0;
        } else if (fr > 1.0 - kCoordSnapEps) {
            fr = 0.0;
            ++s.dr;
        }
        if (fc < kCoordSnapEps) {
            fc = 0.0;
        } else if (fc > 1.0 - kCoordSnapEps) {
            fc = 0.0;
            ++s.dc;
        }
        s.exact = fr == 0.0 && fc == 0.0;
        s.w00 = (1.0 - fr) * (1.0 - fc);
        s.w01 = (1.0 - fr) * fc;
        s.w10 = fr * (1.0 - fc);
        s.w11 = fr * fc;
        plan_[static_cast<std::size_t>(i)] = s;
    }
}

std::uint32_t Lbp2dLabeler::pattern_unchecked(const GrayImage& img, int row,
                                              int col) const {
    const double center = img.at(row, col);
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < plan_.size(); ++i) {
        const Sample& s = plan_[i];
        double diff;
        if (s.exact) {
            diff = img.at(row + s.dr, col + s.dc) - center;
        } else {
            const double v = img.at(row + s.dr, col + s.dc) * s.w00 +
                             img.at(row + s.dr, col + s.dc + 1) * s.w01 +
                             img.at(row + s.dr + 1, col + s.dc) * s.w10 +
                             img.at(row + s.dr + 1, col + s.dc + 1) * s.w11;
            diff = v - center;
            if (std::abs(diff) < kSampleTieEps) {
                diff = 0.0;
            }
        }
        bits |= static_cast<std::uint32_t>(sign_bit(diff)) << i;
    }
    return bits;
}

std::uint32_t Lbp2dLabeler::pattern(const GrayImage& img, int row, int col) const {
    const int margin = cfg_.border_margin();
    if (row < margin || col < margin || row >= img.height() - margin ||
        col >= img.width() - margin) {
        throw DomainError("neighborhood extends outside the image");
    }
    return pattern_unchecked(img, row, col);
}

int Lbp2dLabeler::label(const GrayImage& img, int row, int col) const {
    const std::uint32_t bits = pattern(img, row, col);
    if (circular_transitions(bits, cfg_.neighbors) > cfg_.uniformity_threshold) {
        return cfg_.neighbors + 1;
    }
    return std::popcount(bits);
}

std::vector<int> Lbp2dLabeler::labels(const GrayImage& img) const {
    const int margin = cfg_.border_margin();
    if (img.width() <= 2 * margin || img.height() <= 2 * margin) {
        throw DomainError("image too small for the 2D neighborhood");
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(img.height() - 2 * margin) *
                static_cast<std::size_t>(img.width() - 2 * margin));
    for (int r = margin; r < img.height() - margin; ++r) {
        for (int c = margin; c < img.width() - margin; ++c) {
            const std::uint32_t bits = pattern_unchecked(img, r, c);
            if (circular_transitions(bits, cfg_.neighbors) > cfg_.uniformity_threshold) {
                out.push_back(cfg_.neighbors + 1);
            } else {
                out.push_back(std::popcount(bits));
            }
        }
    }
    return out;
}

std::uint32_t lbp2d_pattern(const GrayImage& img, int row, int col,
                            const Lbp2dConfig& cfg) {
    return Lbp2dLabeler(cfg).pattern(img, row, col);
}

std::uint32_t rotation_min(std::uint32_t pattern, int bit_count) {
    const std::uint32_t mask =
        bit_count >= 32 ? ~0u : ((1u << bit_count) - 1u);
    pattern &= mask;
    std::uint32_t best = pattern;
    std::uint32_t rotated = pattern;
    for (int i = 1; i < bit_count; ++i) {
        rotated = ((rotated >> 1) | (rotated << (bit_count - 1))) & mask;
        best = std::min(best, rotated);
    }
    return best;
}

int lbp2d_label(const GrayImage& img, int row, int col, const Lbp2dConfig& cfg) {
    return Lbp2dLabeler(cfg).label(img, row, col);
}

std::vector<int> lbp2d_labels(const GrayImage& img, const Lbp2dConfig& cfg) {
    return Lbp2dLabeler(cfg).labels(img);
}

} // namespace stonepore
