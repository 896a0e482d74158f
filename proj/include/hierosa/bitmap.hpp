#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hierosa/pixel_mask.hpp"
#include "hierosa/vec2.hpp"

namespace hierosa {

/// Binarized glyph bitmap. Pixel (col, row) owns the half-open normalized
/// rectangle [col/w, (col+1)/w) x [row/h, (row+1)/h); x = 1 and y = 1 clamp
/// to the last column/row. Immutable after construction.
class BinaryGlyph {
public:
    BinaryGlyph(int width, int height, PixelMask mask, std::string source_id);

    int width() const { return width_; }
    int height() const { return height_; }
    const std::string& source_id() const { return source_id_; }
    const PixelMask& mask() const { return mask_; }

    bool black(int col, int row) const { return mask_.test(col, row); }
    size_t black_count() const { return mask_.count(); }

    /// Center of pixel (col, row) in normalized coordinates.
    Vec2 pixel_center(int col, int row) const {
        return {(col + 0.5) / width_, (row + 0.5) / height_};
    }

private:
    int width_;
    int height_;
    PixelMask mask_;
    std::string source_id_;
};

/// Corpus-level structural statistics of one glyph.
struct StructuralStats {
    int cc = 0;                 // 8-connected foreground components
    double fb = 0.0;            // boundary length, normalized per axis
    double fa = 0.0;            // foreground area fraction
    std::optional<double> bar;  // fb / fa, absent when fa = 0
};

/// Decode a PNG or PGM/PBM raster and binarize it: a pixel is black iff its
/// grayscale luminance is strictly below `threshold`.
BinaryGlyph load_and_binarize(std::span<const uint8_t> image_bytes, int threshold,
                              std::string source_id = {});

/// True iff the pixel owning p is black. Points outside the unit square are
/// non-black, not an error.
bool is_black_at(const BinaryGlyph& glyph, Vec2 p);

StructuralStats structural_stats(const BinaryGlyph& glyph);

} // namespace hierosa
