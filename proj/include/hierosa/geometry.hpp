#pragma once

#include <vector>

#include "hierosa/bitmap.hpp"
#include "hierosa/stroke.hpp"
#include "hierosa/vec2.hpp"

namespace hierosa {

/// Uniform interior samples of a stroke. m is the minimum count such that
/// the spacing between neighbouring samples (endpoints included) is
/// strictly below the threshold D.
struct SampledStroke {
    Stroke stroke;
    std::vector<Vec2> interior_points; // ordered start -> end
    int m = 0;
    double spacing = 0.0;

    /// All m + 2 points in traversal order: start, interiors, end.
    std::vector<Vec2> all_points() const {
        std::vector<Vec2> pts;
        pts.reserve(interior_points.size() + 2);
        pts.push_back(stroke.start);
        pts.insert(pts.end(), interior_points.begin(), interior_points.end());
        pts.push_back(stroke.end);
        return pts;
    }
};

/// Unit tangent and its counterclockwise normal (-t_y, t_x).
struct StrokeFrame {
    Vec2 t;
    Vec2 n;
};

/// Closed polygon boundary in normalized coordinates. Self-intersections are
/// permitted; area semantics come from even-odd rasterization.
struct CoveragePolygon {
    std::vector<Vec2> vertices; // >= 3
};

/// Throws DegenerateStroke when the endpoints coincide. D must be > 0.
SampledStroke sample_stroke(const Stroke& stroke, double d_threshold);

StrokeFrame stroke_frame(const Stroke& stroke);

/// March from a black origin along `dir` in increments of `step`; returns
/// the largest k*step whose whole prefix of test points is black. Leaving
/// the unit square counts as non-black. Throws OriginNotBlack.
double march_to_boundary(const BinaryGlyph& glyph, Vec2 origin, Vec2 dir, double step);

/// Rasterize with the even-odd rule against pixel centers of a w x h grid.
PixelMask rasterize_polygon(const CoveragePolygon& poly, int width, int height);

/// Number of black pixels whose center lies inside the union of `polys`
/// (even-odd per polygon, logical OR across polygons).
size_t polygon_region_intersection_area(const BinaryGlyph& glyph,
                                        const std::vector<CoveragePolygon>& polys);

} // namespace hierosa
