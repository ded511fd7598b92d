#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "poac/image.hpp"

namespace poac {

/// Parses a binary "P5" graymap with maxval 255. Header tokens are separated
/// by whitespace and '#' comments may appear between them. Exactly one
/// whitespace byte separates maxval from the raster; trailing bytes after the
/// raster are ignored.
Image read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical form: "P5\n<cols> <rows>\n255\n" followed by the raw samples.
std::vector<std::uint8_t> write_pgm(const Image& image);

Image read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const Image& image);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace poac
