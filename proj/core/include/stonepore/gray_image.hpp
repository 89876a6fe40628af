#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace stonepore {

/// Grayscale image with real-valued samples stored in row-major order.
///
/// Samples are kept as doubles so that log-domain output of the retinex
/// stage fits without quantization loss; the nominal range is [0, 255]
/// and values are only quantized to 8 bits at file export. Every sample
/// must be finite. Immutable after construction.
class GrayImage {
public:
    GrayImage(int width, int height, std::vector<double> data);

    static GrayImage filled(int width, int height, double value);

    int width() const { return width_; }
    int height() const { return height_; }

    double at(int row, int col) const {
        assert(row >= 0 && row < height_ && col >= 0 && col < width_);
        return data_[static_cast<std::size_t>(row) * width_ + col];
    }

    const std::vector<double>& data() const { return data_; }
    const double* row_ptr(int row) const {
        assert(row >= 0 && row < height_);
        return data_.data() + static_cast<std::size_t>(row) * width_;
    }

private:
    int width_;
    int height_;
    std::vector<double> data_;
};

/// Origin of one analysis window (top-left corner, in pixels).
struct Window {
    int row0 = 0;
    int col0 = 0;

    bool operator==(const Window&) const = default;
};

/// The set of W-by-W window origins covering an image.
///
/// Origins are enumerated row-major with the given stride; when the
/// stride does not land exactly on the far edge, one extra window is
/// placed flush to the right/bottom edge so that every pixel is covered.
struct WindowGrid {
    int window_size = 0;
    int stride = 0;
    std::vector<Window> windows;
};

/// Enumerates window origins for an image of the given dimensions.
/// Requires 0 <= overlap < window_size <= min(width, height);
/// stride = window_size - overlap.
WindowGrid make_window_grid(int width, int height, int window_size, int overlap);

WindowGrid partition_windows(const GrayImage& img, int window_size, int overlap);

/// Read-only rectangular view into an image. Segment iteration and
/// feature extraction operate on regions; a window is a square region
/// and the whole image is the degenerate full region.
class RegionView {
public:
    RegionView(const GrayImage& img, int row0, int col0, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double at(int row, int col) const {
        assert(row >= 0 && row < rows_ && col >= 0 && col < cols_);
        return img_->at(row0_ + row, col0_ + col);
    }

    const double* row_ptr(int row) const {
        assert(row >= 0 && row < rows_);
        return img_->row_ptr(row0_ + row) + col0_;
    }
    int row_stride() const { return img_->width(); }

private:
    const GrayImage* img_;
    int row0_, col0_, rows_, cols_;
};

RegionView full_region(const GrayImage& img);
RegionView window_region(const GrayImage& img, Window origin, int window_size);

/// A run of `length` pixels with a constant memory stride: stride 1 for
/// horizontal runs, the image width for vertical runs.
struct SegmentView {
    const double* base = nullptr;
    int stride = 0;
    int length = 0;

    double operator[](int i) const {
        assert(i >= 0 && i < length);
        return base[static_cast<std::ptrdiff_t>(i) * stride];
    }
};

/// Number of length-L runs per orientation inside a region:
/// (cols - L + 1) * rows horizontally, (rows - L + 1) * cols vertically.
long horizontal_segment_count(const RegionView& region, int length);
long vertical_segment_count(const RegionView& region, int length);

template <typename Fn>
void for_each_horizontal_segment(const RegionView& region, int length, Fn&& fn) {
    horizontal_segment_count(region, length); // validates length
    const int placements = region.cols() - length + 1;
    for (int r = 0; r < region.rows(); ++r) {
        const double* row = region.row_ptr(r);
        for (int c = 0; c < placements; ++c) {
            fn(SegmentView{row + c, 1, length});
        }
    }
}

template <typename Fn>
void for_each_vertical_segment(const RegionView& region, int length, Fn&& fn) {
    vertical_segment_count(region, length); // validates length
    const int placements = region.rows() - length + 1;
    const int stride = region.row_stride();
    for (int c = 0; c < region.cols(); ++c) {
        for (int r = 0; r < placements; ++r) {
            fn(SegmentView{region.row_ptr(r) + c, stride, length});
        }
    }
}

/// Binary defect pattern: 1 marks a porous pixel (white in the exported
/// image), 0 a healthy one. Same dimensions as the analyzed image.
struct DefectPattern {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> mask;

    static DefectPattern zeros(int width, int height);

    bool at(int row, int col) const {
        assert(row >= 0 && row < height && col >= 0 && col < width);
        return mask[static_cast<std::size_t>(row) * width + col] != 0;
    }
    void set(int row, int col, bool porous) {
        assert(row >= 0 && row < height && col >= 0 && col < width);
        mask[static_cast<std::size_t>(row) * width + col] = porous ? 1 : 0;
    }

    long set_pixel_count() const;
};

} // namespace stonepore
