#pragma once

#include <iosfwd>
#include <string>

#include "stonepore/gray_image.hpp"

namespace stonepore {

/// Reads a binary PGM (P5) or PPM (P6) file with maxval <= 255.
/// Color samples are converted to gray via
/// luma = round(0.299 R + 0.587 G + 0.114 B).
GrayImage read_image(const std::string& path);
GrayImage read_image(std::istream& in, const std::string& name);

/// Writes a binary PGM (P5, maxval 255). Samples are rounded to the
/// nearest integer and clamped to [0, 255]; 8-bit data round-trips
/// bit-exactly.
void write_pgm(const GrayImage& img, const std::string& path);
void write_pgm(const GrayImage& img, std::ostream& out);

/// Defect patterns are exported as PGM with 0 = healthy (black) and
/// 255 = porous (white). On read, a pixel is porous when its value
/// is >= 128.
void write_pattern_pgm(const DefectPattern& pattern, const std::string& path);
DefectPattern read_pattern_pgm(const std::string& path);

std::uint8_t quantize_sample(double v);

} // namespace stonepore
