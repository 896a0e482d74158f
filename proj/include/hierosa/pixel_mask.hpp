#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "hierosa/errors.hpp"

namespace hierosa {

/// Packed per-pixel bit grid, row-major. Backs both glyph foreground masks
/// and rasterized coverage polygons so that unions/intersections and pixel
/// counts are exact integer operations.
class PixelMask {
public:
    PixelMask() = default;
    PixelMask(int width, int height)
        : width_(width), height_(height),
          words_((static_cast<size_t>(width) * height + 63) / 64, 0) {}

    int width() const { return width_; }
    int height() const { return height_; }

    bool test(int col, int row) const {
        size_t i = static_cast<size_t>(row) * width_ + col;
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int col, int row, bool v = true) {
        size_t i = static_cast<size_t>(row) * width_ + col;
        uint64_t bit = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }

    /// Set bits [begin, end) of row `row` (column indices).
    void set_row_range(int row, int begin, int end) {
        if (begin >= end) return;
        size_t lo = static_cast<size_t>(row) * width_ + begin;
        size_t hi = static_cast<size_t>(row) * width_ + end; // exclusive
        size_t wlo = lo >> 6, whi = (hi - 1) >> 6;
        uint64_t mlo = ~uint64_t{0} << (lo & 63);
        uint64_t mhi = ~uint64_t{0} >> (63 - ((hi - 1) & 63));
        if (wlo == whi) {
            words_[wlo] |= mlo & mhi;
        } else {
            words_[wlo] |= mlo;
            for (size_t w = wlo + 1; w < whi; ++w) words_[w] = ~uint64_t{0};
            words_[whi] |= mhi;
        }
    }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    void or_with(const PixelMask& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    void and_with(const PixelMask& o) {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    /// |a ∩ b|
    static size_t count_and(const PixelMask& a, const PixelMask& b) {
        a.check_same(b);
        size_t c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    /// |(a \ u) ∩ b| — marginal-novelty counting in one pass.
    static size_t count_diff_and(const PixelMask& a, const PixelMask& u, const PixelMask& b) {
        a.check_same(u);
        a.check_same(b);
        size_t c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & ~u.words_[i] & b.words_[i]);
        return c;
    }

    friend bool operator==(const PixelMask& a, const PixelMask& b) {
        return a.width_ == b.width_ && a.height_ == b.height_ && a.words_ == b.words_;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void check_same(const PixelMask& o) const {
        if (width_ != o.width_ || height_ != o.height_)
            throw LengthMismatch("pixel mask dimensions disagree");
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace hierosa
