#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hierosa {

class BinaryGlyph;

/// Decoded 8-bit grayscale raster (alpha already composited over white).
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> luma; // row-major, width*height entries
};

/// Decode PNG (via libpng) or PGM/PBM (P1/P2/P4/P5). Throws DecodeError on
/// malformed input and EmptyImage on zero-dimension rasters.
GrayImage decode_image(std::span<const uint8_t> bytes);

/// Encode a glyph as an 8-bit grayscale PNG (black = 0, white = 255).
std::vector<uint8_t> encode_png(const BinaryGlyph& glyph);

std::vector<uint8_t> read_binary_file(const std::string& path);

/// Write via temp file + rename so failures never leave partial output.
void write_file_atomic(const std::string& path, std::span<const uint8_t> bytes);
void write_file_atomic(const std::string& path, const std::string& text);

} // namespace hierosa
