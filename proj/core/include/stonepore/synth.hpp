#pragma once

#include <cstdint>
#include <vector>

#include "stonepore/gray_image.hpp"

namespace stonepore {

/// Procedural stand-ins for stone surfaces, used by tests and the
/// `synth` subcommand. Samples are integers so that operators relying
/// on exact gray-level comparisons behave deterministically.
enum class TextureKind {
    kPeriodic, // diagonal sawtooth, period 8, step 10, levels 100..170
    kBlotchy,  // smooth value noise on a 16-px lattice, levels ~83..173
};

GrayImage synth_texture(TextureKind kind, int width, int height,
                        std::uint64_t seed);

struct PoreSpec {
    int count = 5;
    double min_radius = 10.0;
    double max_radius = 20.0;
    /// Pores are flat discs this many gray levels below the texture's
    /// darkest sample.
    double contrast = 60.0;
};

struct Pore {
    double row = 0.0;
    double col = 0.0;
    double radius = 0.0;
};

struct SynthResult {
    GrayImage image;
    DefectPattern truth; // exact rasterization of the injected discs
    std::vector<Pore> pores;
};

/// Stamps `spec.count` non-overlapping discs into a copy of the
/// texture. Placement is deterministic for a fixed seed; throws
/// DomainError when the pores cannot fit.
SynthResult inject_pores(const GrayImage& texture, const PoreSpec& spec,
                         std::uint64_t seed);

/// Pixel count of the disc of radius r centered at (row, col), under
/// the same rule inject_pores rasterizes with.
long disc_pixel_count(double row, double col, double radius, int width, int height);

/// Multiplies each column by a linearly interpolated gain
/// (gain_left at column 0, gain_right at the last column) and rounds
/// back to integer gray levels — a smooth illumination ramp.
GrayImage apply_gain_ramp(const GrayImage& img, double gain_left, double gain_right);

} // namespace stonepore
