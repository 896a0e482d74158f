#include "hierosa/bitmap.hpp"

#include <cmath>
#include <utility>

#include "hierosa/errors.hpp"
#include "hierosa/image_io.hpp"

namespace hierosa {

BinaryGlyph::BinaryGlyph(int width, int height, PixelMask mask, std::string source_id)
    : width_(width), height_(height), mask_(std::move(mask)), source_id_(std::move(source_id)) {
    if (width_ < 1 || height_ < 1) throw EmptyImage("glyph dimensions must be >= 1");
    if (mask_.width() != width_ || mask_.height() != height_)
        throw LengthMismatch("mask dimensions disagree with glyph dimensions");
}

BinaryGlyph load_and_binarize(std::span<const uint8_t> image_bytes, int threshold,
                              std::string source_id) {
    GrayImage img = decode_image(image_bytes);
    PixelMask mask(img.width, img.height);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c)
            if (img.luma[static_cast<size_t>(r) * img.width + c] < threshold) mask.set(c, r);
    return BinaryGlyph(img.width, img.height, std::move(mask), std::move(source_id));
}

bool is_black_at(const BinaryGlyph& glyph, Vec2 p) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) return false;
    int col = static_cast<int>(p.x * glyph.width());
    int row = static_cast<int>(p.y * glyph.height());
    if (col >= glyph.width()) col = glyph.width() - 1;   // x = 1 clamps
    if (row >= glyph.height()) row = glyph.height() - 1; // y = 1 clamps
    return glyph.black(col, row);
}

namespace {

// iterative union-find over pixel indices
struct UnionFind {
    std::vector<int32_t> parent;
    explicit UnionFind(size_t n) : parent(n, -1) {}

    int32_t find(int32_t i) {
        int32_t root = i;
        while (parent[root] >= 0) root = parent[root];
        while (parent[i] >= 0) {
            int32_t next = parent[i];
            parent[i] = root;
            i = next;
        }
        return root;
    }

    void unite(int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (parent[a] > parent[b]) std::swap(a, b); // more negative = larger
        parent[a] += parent[b];
        parent[b] = a;
    }
};

} // namespace

StructuralStats structural_stats(const BinaryGlyph& glyph) {
    const int w = glyph.width(), h = glyph.height();

    UnionFind uf(static_cast<size_t>(w) * h);
    long horiz_edges = 0; // pixel edges with extent along x
    long vert_edges = 0;  // pixel edges with extent along y
    size_t black = 0;

    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            if (!glyph.black(c, r)) continue;
            ++black;
            int32_t idx = r * w + c;
            // join with already-visited 8-neighbours (W, NW, N, NE)
            if (c > 0 && glyph.black(c - 1, r)) uf.unite(idx, idx - 1);
            if (r > 0) {
                if (c > 0 && glyph.black(c - 1, r - 1)) uf.unite(idx, idx - w - 1);
                if (glyph.black(c, r - 1)) uf.unite(idx, idx - w);
                if (c + 1 < w && glyph.black(c + 1, r - 1)) uf.unite(idx, idx - w + 1);
            }
            // exposed edges: black against white or the image border
            if (r == 0 || !glyph.black(c, r - 1)) ++horiz_edges; // top
            if (r == h - 1 || !glyph.black(c, r + 1)) ++horiz_edges; // bottom
            if (c == 0 || !glyph.black(c - 1, r)) ++vert_edges; // left
            if (c == w - 1 || !glyph.black(c + 1, r)) ++vert_edges; // right
        }
    }

    int cc = 0;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            if (glyph.black(c, r) && uf.parent[r * w + c] < 0) ++cc;

    StructuralStats st;
    st.cc = cc;
    st.fb = static_cast<double>(horiz_edges) / w + static_cast<double>(vert_edges) / h;
    st.fa = static_cast<double>(black) / (static_cast<double>(w) * h);
    if (st.fa > 0.0) st.bar = st.fb / st.fa;
    return st;
}

} // namespace hierosa
