#include "hierosa/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "hierosa/errors.hpp"

namespace hierosa {

SampledStroke sample_stroke(const Stroke& stroke, double d_threshold) {
    if (d_threshold <= 0.0) throw PreconditionViolated("sampling threshold must be > 0");
    if (stroke.degenerate()) throw DegenerateStroke("stroke endpoints coincide");

    const double len = stroke.length();

    // smallest m with len / (m + 1) strictly below the threshold; start from
    // the floor estimate and enforce the defining inequality directly so the
    // exact-multiple case (len = k*D -> m = k) comes out right
    int m = std::max(0, static_cast<int>(std::floor(len / d_threshold)) - 2);
    while (!(len / (m + 1) < d_threshold)) ++m;

    SampledStroke out;
    out.stroke = stroke;
    out.m = m;
    out.spacing = len / (m + 1);
    out.interior_points.reserve(m);
    // uniform interior samples, ordered start -> end
    for (int i = 1; i <= m; ++i)
        out.interior_points.push_back(
            ((m + 1 - i) * stroke.start + static_cast<double>(i) * stroke.end) / (m + 1));
    return out;
}

StrokeFrame stroke_frame(const Stroke& stroke) {
    if (stroke.degenerate()) throw DegenerateStroke("tangent undefined for degenerate stroke");
    const double len = stroke.length();
    Vec2 t = (stroke.end - stroke.start) / len;
    return {t, Vec2{-t.y, t.x}};
}

double march_to_boundary(const BinaryGlyph& glyph, Vec2 origin, Vec2 dir, double step) {
    assert(std::abs(dir.norm() - 1.0) <= 1e-9);
    if (step <= 0.0) throw PreconditionViolated("march step must be > 0");
    if (!is_black_at(glyph, origin)) throw OriginNotBlack("ray origin is not on a black pixel");

    // the unit square bounds every ray at length sqrt(2); cap well above it
    const long max_steps = static_cast<long>(std::ceil(2.0 / step)) + 2;
    long k = 0;
    while (k < max_steps) {
        Vec2 probe = origin + ((k + 1) * step) * dir;
        if (!is_black_at(glyph, probe)) break;
        ++k;
    }
    return k * step;
}

PixelMask rasterize_polygon(const CoveragePolygon& poly, int width, int height) {
    PixelMask mask(width, height);
    const auto& v = poly.vertices;
    const size_t n = v.size();
    if (n < 3) return mask;

    double ymin = v[0].y, ymax = v[0].y;
    for (const Vec2& p : v) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    int row_lo = std::max(0, static_cast<int>(std::floor(ymin * height - 0.5)));
    int row_hi = std::min(height - 1, static_cast<int>(std::ceil(ymax * height)));

    std::vector<double> crossings;
    for (int row = row_lo; row <= row_hi; ++row) {
        const double yc = (row + 0.5) / height;
        crossings.clear();
        for (size_t i = 0; i < n; ++i) {
            const Vec2& a = v[i];
            const Vec2& b = v[(i + 1) % n];
            // half-open span rule keeps vertices on the scanline unambiguous
            if ((a.y <= yc && yc < b.y) || (b.y <= yc && yc < a.y))
                crossings.push_back(a.x + (yc - a.y) * (b.x - a.x) / (b.y - a.y));
        }
        if (crossings.empty()) continue;
        std::sort(crossings.begin(), crossings.end());
        // a center is inside iff an odd number of crossings lie strictly to
        // its right: fill [x0, x1) spans between crossing pairs
        for (size_t i = 0; i + 1 < crossings.size(); i += 2) {
            // centers with x0 <= (c + 0.5)/w < x1
            int c_begin = static_cast<int>(std::ceil(crossings[i] * width - 0.5));
            int c_end = static_cast<int>(std::ceil(crossings[i + 1] * width - 0.5));
            c_begin = std::max(c_begin, 0);
            c_end = std::min(c_end, width);
            mask.set_row_range(row, c_begin, c_end);
        }
    }
    return mask;
}

size_t polygon_region_intersection_area(const BinaryGlyph& glyph,
                                        const std::vector<CoveragePolygon>& polys) {
    if (polys.empty()) return 0;
    PixelMask covered(glyph.width(), glyph.height());
    for (const CoveragePolygon& poly : polys)
        covered.or_with(rasterize_polygon(poly, glyph.width(), glyph.height()));
    return PixelMask::count_and(covered, glyph.mask());
}

} // namespace hierosa
