#include "stonepore/retinex.hpp"

#include <algorithm>
#include <cmath>

#include "stonepore/error.hpp"

namespace stonepore {

int RetinexConfig::effective_radius() const {
    if (kernel_radius) {
        return *kernel_radius;
    }
    return static_cast<int>(std::ceil(3.0 * sigma));
}

void RetinexConfig::validate() const {
    if (!(sigma > 0.0)) {
        throw DomainError("retinex sigma must be positive");
    }
    if (kernel_radius && *kernel_radius < 1) {
        throw DomainError("kernel radius must be at least 1");
    }
}

std::vector<double> gaussian_kernel_1d(double sigma, int radius) {
    if (!(sigma > 0.0) || radius < 0) {
        throw DomainError("invalid gaussian kernel parameters");
    }
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double t = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        taps[static_cast<std::size_t>(i + radius)] = t;
        sum += t;
    }
    for (double& t : taps) {
        t /= sum;
    }
    return taps;
}

std::vector<double> gaussian_kernel_2d(double sigma, int radius) {
    const auto taps = gaussian_kernel_1d(sigma, radius);
    const std::size_t n = taps.size();
    std::vector<double> grid(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            grid[r * n + c] = taps[r] * taps[c];
        }
    }
    return grid;
}

namespace {

// Symmetric padding: ..., 1, 0 | 0, 1, ..., n-1 | n-1, n-2, ...
// Folding by 2n handles offsets of any magnitude.
int reflect_index(int i, int n) {
    if (n == 1) {
        return 0;
    }
    const int period = 2 * n;
    int m = i % period;
    if (m < 0) {
        m += period;
    }
    return m < n ? m : period - 1 - m;
}

void convolve_rows(const std::vector<double>& src, std::vector<double>& dst,
                   int height, int width, const std::vector<double>& taps) {
    const int radius = (static_cast<int>(taps.size()) - 1) / 2;
    for (int r = 0; r < height; ++r) {
        const double* row = src.data() + static_cast<std::size_t>(r) * width;
        double* out = dst.data() + static_cast<std::size_t>(r) * width;
        for (int c = 0; c < width; ++c) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k) {
                acc += taps[static_cast<std::size_t>(k + radius)] *
                       row[reflect_index(c + k, width)];
            }
            out[c] = acc;
        }
    }
}

void convolve_cols(const std::vector<double>& src, std::vector<double>& dst,
                   int height, int width, const std::vector<double>& taps) {
    const int radius = (static_cast<int>(taps.size()) - 1) / 2;
    for (int c = 0; c < width; ++c) {
        for (int r = 0; r < height; ++r) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k) {
                const int rr = reflect_index(r + k, height);
                acc += taps[static_cast<std::size_t>(k + radius)] *
                       src[static_cast<std::size_t>(rr) * width + c];
            }
            dst[static_cast<std::size_t>(r) * width + c] = acc;
        }
    }
}

} // namespace

GrayImage gaussian_blur(const GrayImage& img, const RetinexConfig& cfg) {
    cfg.validate();
    const auto taps = gaussian_kernel_1d(cfg.sigma, cfg.effective_radius());
    std::vector<double> tmp(static_cast<std::size_t>(img.width()) * img.height());
    std::vector<double> out(tmp.size());
    convolve_rows(img.data(), tmp, img.height(), img.width(), taps);
    convolve_cols(tmp, out, img.height(), img.width(), taps);
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage ssr_response(const GrayImage& img, const RetinexConfig& cfg) {
    const GrayImage blurred = gaussian_blur(img, cfg);
    std::vector<double> out(static_cast<std::size_t>(img.width()) * img.height());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::log(img.data()[i] + 1.0) - std::log(blurred.data()[i] + 1.0);
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage ssr_normalize(const GrayImage& img, const RetinexConfig& cfg) {
    GrayImage response = ssr_response(img, cfg);
    const auto [lo_it, hi_it] =
        std::minmax_element(response.data().begin(), response.data().end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double> out(response.data().size());
    if (hi > lo) {
        const double scale = 255.0 / (hi - lo);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = (response.data()[i] - lo) * scale;
        }
    }
    return GrayImage(img.width(), img.height(), std::move(out));
}

} // namespace stonepore
