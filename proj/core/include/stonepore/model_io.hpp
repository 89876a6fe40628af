#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "stonepore/detector.hpp"

namespace stonepore {

/// Persistent form of a trained detector: format version, the stone
/// type it was trained for, and every TrainedModel field. The text
/// encoding is human-diffable; floats are written in scientific
/// notation with 17 significant digits so load(save(m)) reproduces m
/// bit-exactly and save(load(f)) reproduces f byte-exactly.
struct ModelFile {
    static constexpr int kFormatVersion = 1;

    std::string stone_type;
    TrainedModel model;
};

/// FNV-1a 64-bit hash; guards model files against truncation/edits.
std::uint64_t fnv1a64(const std::string& bytes);

std::string serialize_model(const ModelFile& file);
ModelFile parse_model(const std::string& text);

void save_model(const ModelFile& file, const std::string& path);
ModelFile load_model(const std::string& path);

} // namespace stonepore
