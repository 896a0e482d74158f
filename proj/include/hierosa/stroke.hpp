#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hierosa/vec2.hpp"

namespace hierosa {

/// One line segment in normalized [0,1]^2 coordinates.
struct Stroke {
    Vec2 start;
    Vec2 end;

    double length() const { return distance(start, end); }

    /// Coincident (within 1e-12) or non-finite endpoints; such strokes carry
    /// no tangent and are treated as invalid by the reward.
    bool degenerate() const {
        return !start.finite() || !end.finite() || length() <= 1e-12;
    }
};

/// Ordered stroke collection; order matters because reward aggregation is
/// sequential.
struct StrokeSet {
    std::string source_id;
    std::vector<Stroke> strokes;

    size_t size() const { return strokes.size(); }
    bool empty() const { return strokes.empty(); }
};

/// Chain of >= 2 points; expands to consecutive strokes.
struct Polyline {
    std::vector<Vec2> points;
};

struct ParseResult {
    StrokeSet strokes;
    bool format_ok = false;
};

/// Parse the structured model-output grammar:
///
///   <strokes>
///   (x1, y1) -> (x2, y2)
///   ...
///   </strokes>
///
/// format_ok is true iff both delimiters are present, every interior
/// non-empty line parses, and at least one stroke exists. On failure the
/// longest parseable prefix of strokes is still returned so scoring can
/// proceed. Never throws, for arbitrary byte input.
ParseResult parse_stroke_output(std::string_view text);

/// Emit the canonical grammar with 4-decimal coordinates.
std::string serialize_stroke_set(const StrokeSet& set);

/// Expand q points to q-1 consecutive strokes. Throws TooFewPoints.
StrokeSet expand_polyline(const Polyline& pl);

/// JSON persistence: {"source_id": str, "strokes": [[[x1,y1],[x2,y2]], ...]}
std::string stroke_set_to_json(const StrokeSet& set);
StrokeSet stroke_set_from_json(std::string_view json_text);

} // namespace hierosa
