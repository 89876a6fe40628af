#include "stonepore/gray_image.hpp"

#include <cmath>
#include <string>

#include "stonepore/error.hpp"

namespace stonepore {

GrayImage::GrayImage(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width_ < 1 || height_ < 1) {
        throw DomainError("image dimensions must be at least 1x1, got " +
                          std::to_string(width_) + "x" + std::to_string(height_));
    }
    if (data_.size() != static_cast<std::size_t>(width_) * height_) {
        throw DomainError("image data length " + std::to_string(data_.size()) +
                          " does not match " + std::to_string(width_) + "x" +
                          std::to_string(height_));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw DomainError("image contains a non-finite sample");
        }
    }
}

GrayImage GrayImage::filled(int width, int height, double value) {
    if (width < 1 || height < 1) {
        throw DomainError("image dimensions must be at least 1x1");
    }
    return GrayImage(width, height,
                     std::vector<double>(static_cast<std::size_t>(width) * height, value));
}

namespace {

// Origins along one axis: 0, s, 2s, ... while the window fits, plus a
// final origin flush with the far edge when the stride leaves a remainder.
std::vector<int> axis_origins(int extent, int window_size, int stride) {
    std::vector<int> origins;
    int pos = 0;
    for (; pos + window_size <= extent; pos += stride) {
        origins.push_back(pos);
    }
    if (origins.back() + window_size < extent) {
        origins.push_back(extent - window_size);
    }
    return origins;
}

} // namespace

WindowGrid make_window_grid(int width, int height, int window_size, int overlap) {
    if (window_size < 1) {
        throw DomainError("window size must be positive");
    }
    if (overlap < 0 || overlap >= window_size) {
        throw DomainError("window overlap must satisfy 0 <= overlap < window size");
    }
    if (window_size > width || window_size > height) {
        throw DomainError("window size " + std::to_string(window_size) +
                          " exceeds image dimensions " + std::to_string(width) + "x" +
                          std::to_string(height));
    }
    WindowGrid grid;
    grid.window_size = window_size;
    grid.stride = window_size - overlap;
    const auto rows = axis_origins(height, window_size, grid.stride);
    const auto cols = axis_origins(width, window_size, grid.stride);
    grid.windows.reserve(rows.size() * cols.size());
    for (int r : rows) {
        for (int c : cols) {
            grid.windows.push_back(Window{r, c});
        }
    }
    return grid;
}

WindowGrid partition_windows(const GrayImage& img, int window_size, int overlap) {
    return make_window_grid(img.width(), img.height(), window_size, overlap);
}

RegionView::RegionView(const GrayImage& img, int row0, int col0, int rows, int cols)
    : img_(&img), row0_(row0), col0_(col0), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1 || row0 < 0 || col0 < 0 ||
        row0 + rows > img.height() || col0 + cols > img.width()) {
        throw DomainError("region extends outside the image");
    }
}

RegionView full_region(const GrayImage& img) {
    return RegionView(img, 0, 0, img.height(), img.width());
}

RegionView window_region(const GrayImage& img, Window origin, int window_size) {
    return RegionView(img, origin.row0, origin.col0, window_size, window_size);
}

long horizontal_segment_count(const RegionView& region, int length) {
    if (length < 2) {
        throw DomainError("segment length must be at least 2");
    }
    if (length > region.cols()) {
        throw DomainError("segment length " + std::to_string(length) +
                          " exceeds region width " + std::to_string(region.cols()));
    }
    return static_cast<long>(region.cols() - length + 1) * region.rows();
}

long vertical_segment_count(const RegionView& region, int length) {
    if (length < 2) {
        throw DomainError("segment length must be at least 2");
    }
    if (length > region.rows()) {
        throw DomainError("segment length " + std::to_string(length) +
                          " exceeds region height " + std::to_string(region.rows()));
    }
    return static_cast<long>(region.rows() - length + 1) * region.cols();
}

DefectPattern DefectPattern::zeros(int width, int height) {
    if (width < 1 || height < 1) {
        throw DomainError("pattern dimensions must be at least 1x1");
    }
    DefectPattern p;
    p.width = width;
    p.height = height;
    p.mask.assign(static_cast<std::size_t>(width) * height, 0);
    return p;
}

long DefectPattern::set_pixel_count() const {
    long n = 0;
    for (std::uint8_t v : mask) {
        n += (v != 0);
    }
    return n;
}

} // namespace stonepore
