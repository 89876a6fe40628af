#pragma once

#include <cstdint>
#include <vector>

#include "stonepore/gray_image.hpp"

namespace stonepore {

/// One-dimensional LBP over a horizontal or vertical pixel run of
/// length L. The run's first pixel is the reference; the remaining
/// L-1 pixels form the neighbor bit string. Uniform runs (circular
/// transition count <= uniformity_threshold) are labeled with their
/// bit sum (0..L-1); all non-uniform runs share the catch-all label L.
struct Lbp1dConfig {
    int segment_length = 8;        // L
    int uniformity_threshold = 2;  // U_T, conventionally L/4

    static Lbp1dConfig with_length(int length);

    int label_space() const { return segment_length + 1; } // labels 0..L
    void validate() const;
};

/// Two-dimensional LBP around a center pixel: P neighbors on a circle
/// of radius R (bilinear-interpolated) or on the perimeter ring of the
/// (2R+1)x(2R+1) square. Uniform neighborhoods are labeled with their
/// bit sum (0..P); non-uniform ones share the label P+1.
struct Lbp2dConfig {
    enum class Neighborhood { kCircular, kSquare };

    int neighbors = 8;             // P
    double radius = 1.0;           // R
    int uniformity_threshold = 2;  // U_T, conventionally P/4
    Neighborhood neighborhood = Neighborhood::kCircular;

    int label_space() const { return neighbors + 2; } // labels 0..P+1
    int border_margin() const;
    void validate() const;
};

/// Threshold step of the LBP sum: 1 when x >= 0, else 0.
inline int sign_bit(double x) { return x >= 0.0 ? 1 : 0; }

/// Number of 0<->1 jumps in an n-bit string read circularly.
int circular_transitions(std::uint32_t bits, int bit_count);

/// Uniformity of a 1D run: circular transition count over the L-1
/// neighbor bits sign(g_i - g_1), i = 2..L.
int uniformity_1d(const SegmentView& segment, const Lbp1dConfig& cfg);

int lbp1d_label(const SegmentView& segment, const Lbp1dConfig& cfg);

enum class Orientation { kHorizontal, kVertical };

/// Adds the label of every length-L run of one orientation to
/// counts[0 .. L]. Equivalent to calling lbp1d_label per segment but
/// fused: one contiguous comparison pass per neighbor offset, which is
/// what keeps dense 1D labeling cheap.
void accumulate_lbp1d_labels(const RegionView& region, const Lbp1dConfig& cfg,
                             Orientation orientation, long* counts);

/// Uniformity of a 2D neighborhood given its packed comparison bits
/// (bit i = sign(g_i - g_c)).
int uniformity_2d(std::uint32_t neighbor_bits, const Lbp2dConfig& cfg);

/// Reusable 2D operator: validates the configuration once and
/// precomputes the neighbor sampling plan (offsets and bilinear
/// weights), which is what makes dense labeling cheap.
class Lbp2dLabeler {
public:
    explicit Lbp2dLabeler(const Lbp2dConfig& cfg);

    const Lbp2dConfig& config() const { return cfg_; }

    /// Packed comparison bits, bit i weighted 2^i (the basic operator).
    std::uint32_t pattern(const GrayImage& img, int row, int col) const;

    int label(const GrayImage& img, int row, int col) const;

    /// Labels for every interior pixel (border of border_margin()
    /// skipped), row-major.
    std::vector<int> labels(const GrayImage& img) const;

private:
    struct Sample {
        int dr = 0, dc = 0;         // top-left corner of the bilinear cell
        double w00 = 0, w01 = 0, w10 = 0, w11 = 0;
        bool exact = false;         // true: read (dr, dc) directly
    };

    std::uint32_t pattern_unchecked(const GrayImage& img, int row, int col) const;

    Lbp2dConfig cfg_;
    std::vector<Sample> plan_;
};

std::uint32_t lbp2d_pattern(const GrayImage& img, int row, int col,
                            const Lbp2dConfig& cfg);

/// Minimum over all circular rotations of a P-bit pattern; the
/// rotation-invariant value of the basic operator.
std::uint32_t rotation_min(std::uint32_t pattern, int bit_count);

int lbp2d_label(const GrayImage& img, int row, int col, const Lbp2dConfig& cfg);

std::vector<int> lbp2d_labels(const GrayImage& img, const Lbp2dConfig& cfg);

} // namespace stonepore
