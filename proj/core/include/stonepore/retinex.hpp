#pragma once

#include <optional>
#include <vector>

#include "stonepore/gray_image.hpp"

namespace stonepore {

struct RetinexConfig {
    double sigma = 30.0;
    /// Half-width of the truncated Gaussian; defaults to ceil(3 * sigma).
    std::optional<int> kernel_radius;

    int effective_radius() const;
    void validate() const;
};

/// Normalized 1D Gaussian taps, length 2 * radius + 1.
std::vector<double> gaussian_kernel_1d(double sigma, int radius);

/// Normalized 2D surround, (2*radius+1)^2 weights row-major; the outer
/// product of the 1D taps (the kernel is separable and both factors
/// are normalized).
std::vector<double> gaussian_kernel_2d(double sigma, int radius);

/// Separable Gaussian blur with symmetric (reflect-including-edge)
/// padding, so the kernel radius may exceed the image extent.
GrayImage gaussian_blur(const GrayImage& img, const RetinexConfig& cfg);

/// Raw single-scale retinex response: log(I + 1) - log(blur(I) + 1).
GrayImage ssr_response(const GrayImage& img, const RetinexConfig& cfg);

/// Retinex response rescaled linearly to [0, 255]. A constant input has
/// no dynamic range and maps to all zeros.
GrayImage ssr_normalize(const GrayImage& img, const RetinexConfig& cfg);

} // namespace stonepore
