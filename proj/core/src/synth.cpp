#include "stonepore/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "stonepore/error.hpp"

namespace stonepore {

namespace {

// Uniform draw in [0, 1) built directly from engine bits;
// std::uniform_real_distribution is not pinned across library
// implementations and these textures must be reproducible.
double unit_draw(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

std::uint64_t range_draw(std::mt19937_64& eng, std::uint64_t n) {
    return eng() % n; // modulo bias is irrelevant at these ranges
}

GrayImage periodic_texture(int width, int height, std::mt19937_64& eng) {
    // Diagonal sawtooth: every length-8 run in either orientation sees
    // all 8 phases exactly once, so every 16x16 window has the same
    // label histogram and a model trained on this texture has
    // thresholds of exactly zero.
    const int offset = static_cast<int>(range_draw(eng, 8));
    const bool anti = (eng() & 1u) != 0;
    std::vector<double> data(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const int diag = anti ? (width - 1 - x) + y : x + y;
            data[static_cast<std::size_t>(y) * width + x] =
                100.0 + 10.0 * ((diag + offset) % 8);
        }
    }
    return GrayImage(width, height, std::move(data));
}

GrayImage blotchy_texture(int width, int height, std::mt19937_64& eng) {
    constexpr int kCell = 16;
    const int grid_w = width / kCell + 2;
    const int grid_h = height / kCell + 2;
    std::vector<double> lattice(static_cast<std::size_t>(grid_w) * grid_h);
    for (double& v : lattice) {
        v = 128.0 + (unit_draw(eng) * 2.0 - 1.0) * 45.0;
    }
    const auto node = [&](int gy, int gx) {
        return lattice[static_cast<std::size_t>(gy) * grid_w + gx];
    };
    std::vector<double> data(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        const int gy = y / kCell;
        const double fy = static_cast<double>(y % kCell) / kCell;
        for (int x = 0; x < width; ++x) {
            const int gx = x / kCell;
            const double fx = static_cast<double>(x % kCell) / kCell;
            const double v = node(gy, gx) * (1.0 - fy) * (1.0 - fx) +
                             node(gy, gx + 1) * (1.0 - fy) * fx +
                             node(gy + 1, gx) * fy * (1.0 - fx) +
                             node(gy + 1, gx + 1) * fy * fx;
            data[static_cast<std::size_t>(y) * width + x] = std::round(v);
        }
    }
    return GrayImage(width, height, std::move(data));
}

} // namespace

GrayImage synth_texture(TextureKind kind, int width, int height,
                        std::uint64_t seed) {
    if (width < 1 || height < 1) {
        throw DomainError("texture dimensions must be positive");
    }
    std::mt19937_64 eng(seed);
    switch (kind) {
    case TextureKind::kPeriodic:
        return periodic_texture(width, height, eng);
    case TextureKind::kBlotchy:
        return blotchy_texture(width, height, eng);
    }
    throw DomainError("unknown texture kind");
}

long disc_pixel_count(double row, double col, double radius, int width, int height) {
    const int r_lo = std::max(0, static_cast<int>(std::floor(row - radius)));
    const int r_hi = std::min(height - 1, static_cast<int>(std::ceil(row + radius)));
    const int c_lo = std::max(0, static_cast<int>(std::floor(col - radius)));
    const int c_hi = std::min(width - 1, static_cast<int>(std::ceil(col + radius)));
    long count = 0;
    for (int r = r_lo; r <= r_hi; ++r) {
        for (int c = c_lo; c <= c_hi; ++c) {
            const double dr = r - row;
            const double dc = c - col;
            count += dr * dr + dc * dc <= radius * radius ? 1 : 0;
        }
    }
    return count;
}

SynthResult inject_pores(const GrayImage& texture, const PoreSpec& spec,
                         std::uint64_t seed) {
    if (spec.count < 0) {
        throw DomainError("pore count must be non-negative");
    }
    if (!(spec.min_radius > 0.0) || spec.min_radius > spec.max_radius) {
        throw DomainError("pore radii must satisfy 0 < min <= max");
    }
    if (!(spec.contrast > 0.0)) {
        throw DomainError("pore contrast must be positive");
    }

    std::mt19937_64 eng(seed);
    std::vector<Pore> pores;
    pores.reserve(static_cast<std::size_t>(spec.count));
    for (int k = 0; k < spec.count; ++k) {
        const double radius =
            spec.min_radius + unit_draw(eng) * (spec.max_radius - spec.min_radius);
        const double margin = std::ceil(radius) + 1.0;
        if (2.0 * margin >= texture.width() || 2.0 * margin >= texture.height()) {
            throw DomainError("pore of radius " + std::to_string(radius) +
                              " does not fit inside the image");
        }
        bool placed = false;
        for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
            const double row = margin + unit_draw(eng) * (texture.height() - 2.0 * margin);
            const double col = margin + unit_draw(eng) * (texture.width() - 2.0 * margin);
            placed = true;
            for (const Pore& other : pores) {
                const double dr = row - other.row;
                const double dc = col - other.col;
                const double min_gap = radius + other.radius + 8.0;
                if (dr * dr + dc * dc < min_gap * min_gap) {
                    placed = false;
                    break;
                }
            }
            if (placed) {
                pores.push_back(Pore{row, col, radius});
            }
        }
        if (!placed) {
            throw DomainError("unable to place non-overlapping pores; "
                              "reduce count or radii");
        }
    }

    const double darkest =
        texture.data().empty()
            ? 0.0
            : *std::min_element(texture.data().begin(), texture.data().end());
    const double pore_level = std::max(0.0, darkest - spec.contrast);

    std::vector<double> data = texture.data();
    DefectPattern truth = DefectPattern::zeros(texture.width(), texture.height());
    for (const Pore& p : pores) {
        const int r_lo = static_cast<int>(std::floor(p.row - p.radius));
        const int r_hi = static_cast<int>(std::ceil(p.row + p.radius));
        const int c_lo = static_cast<int>(std::floor(p.col - p.radius));
        const int c_hi = static_cast<int>(std::ceil(p.col + p.radius));
        for (int r = r_lo; r <= r_hi; ++r) {
            for (int c = c_lo; c <= c_hi; ++c) {
                const double dr = r - p.row;
                const double dc = c - p.col;
                if (dr * dr + dc * dc <= p.radius * p.radius) {
                    data[static_cast<std::size_t>(r) * texture.width() + c] = pore_level;
                    truth.set(r, c, true);
                }
            }
        }
    }
    return SynthResult{GrayImage(texture.width(), texture.height(), std::move(data)),
                       std::move(truth), std::move(pores)};
}

GrayImage apply_gain_ramp(const GrayImage& img, double gain_left, double gain_right) {
    if (!(gain_left > 0.0) || !(gain_right > 0.0)) {
        throw DomainError("ramp gains must be positive");
    }
    std::vector<double> data(static_cast<std::size_t>(img.width()) * img.height());
    const int w = img.width();
    for (int x = 0; x < w; ++x) {
        const double t = w == 1 ? 0.0 : static_cast<double>(x) / (w - 1);
        const double gain = gain_left + (gain_right - gain_left) * t;
        for (int y = 0; y < img.height(); ++y) {
            data[static_cast<std::size_t>(y) * w + x] = std::round(gain * img.at(y, x));
        }
    }
    return GrayImage(img.width(), img.height(), std::move(data));
}

} // namespace stonepore
