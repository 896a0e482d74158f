#include "hierosa/stroke.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <cmath>

#include <nlohmann/json.hpp>

#include "hierosa/errors.hpp"

namespace hierosa {

namespace {

constexpr std::string_view kOpenTag = "<strokes>";
constexpr std::string_view kCloseTag = "</strokes>";

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

struct LineCursor {
    std::string_view text;
    size_t pos = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            line = text.substr(pos);
            pos = text.size();
        } else {
            line = text.substr(pos, nl - pos);
            pos = nl + 1;
        }
        return true;
    }
};

// plain decimal numeral: sign, digits, optional fraction, optional exponent
bool scan_number(std::string_view s, size_t& pos, double& out) {
    size_t p = pos;
    auto digit = [&](size_t i) { return i < s.size() && s[i] >= '0' && s[i] <= '9'; };
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
    size_t int_digits = p;
    while (digit(p)) ++p;
    int_digits = p - int_digits;
    size_t frac_digits = 0;
    if (p < s.size() && s[p] == '.') {
        ++p;
        size_t q = p;
        while (digit(p)) ++p;
        frac_digits = p - q;
    }
    if (int_digits == 0 && frac_digits == 0) return false;
    if (p < s.size() && (s[p] == 'e' || s[p] == 'E')) {
        size_t q = p + 1;
        if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
        if (q < s.size() && s[q] >= '0' && s[q] <= '9') {
            while (q < s.size() && s[q] >= '0' && s[q] <= '9') ++q;
            p = q;
        }
    }
    std::string token(s.substr(pos, p - pos));
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) return false;
    out = v;
    pos = p;
    return true;
}

void skip_spaces(std::string_view s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

bool expect(std::string_view s, size_t& pos, std::string_view token) {
    skip_spaces(s, pos);
    if (s.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
}

bool parse_point(std::string_view s, size_t& pos, Vec2& out) {
    if (!expect(s, pos, "(")) return false;
    skip_spaces(s, pos);
    if (!scan_number(s, pos, out.x)) return false;
    if (!expect(s, pos, ",")) return false;
    skip_spaces(s, pos);
    if (!scan_number(s, pos, out.y)) return false;
    return expect(s, pos, ")");
}

bool parse_stroke_line(std::string_view line, Stroke& out) {
    size_t pos = 0;
    if (!parse_point(line, pos, out.start)) return false;
    if (!expect(line, pos, "->")) return false;
    if (!parse_point(line, pos, out.end)) return false;
    skip_spaces(line, pos);
    return pos == line.size();
}

} // namespace

ParseResult parse_stroke_output(std::string_view text) {
    ParseResult result;
    LineCursor cursor{text};
    std::string_view line;

    bool opened = false;
    while (cursor.next(line)) {
        if (trim(line) == kOpenTag) {
            opened = true;
            break;
        }
    }
    if (!opened) return result; // no payload, format_ok stays false

    bool closed = false;
    bool all_parsed = true;
    while (cursor.next(line)) {
        std::string_view t = trim(line);
        if (t == kCloseTag) {
            closed = true;
            break;
        }
        if (t.empty()) continue;
        Stroke s;
        if (all_parsed && parse_stroke_line(t, s)) {
            result.strokes.strokes.push_back(s);
        } else {
            all_parsed = false; // keep scanning only for the close tag
        }
    }

    result.format_ok = closed && all_parsed && !result.strokes.empty();
    return result;
}

std::string serialize_stroke_set(const StrokeSet& set) {
    std::string out(kOpenTag);
    out.push_back('\n');
    char buf[128];
    for (const Stroke& s : set.strokes) {
        std::snprintf(buf, sizeof(buf), "(%.4f, %.4f) -> (%.4f, %.4f)\n", s.start.x, s.start.y,
                      s.end.x, s.end.y);
        out += buf;
    }
    out += kCloseTag;
    return out;
}

StrokeSet expand_polyline(const Polyline& pl) {
    if (pl.points.size() < 2) throw TooFewPoints("polyline needs at least 2 points");
    StrokeSet set;
    set.strokes.reserve(pl.points.size() - 1);
    for (size_t i = 0; i + 1 < pl.points.size(); ++i)
        set.strokes.push_back({pl.points[i], pl.points[i + 1]});
    return set;
}

std::string stroke_set_to_json(const StrokeSet& set) {
    nlohmann::json j;
    j["source_id"] = set.source_id;
    auto& arr = j["strokes"] = nlohmann::json::array();
    for (const Stroke& s : set.strokes)
        arr.push_back({{s.start.x, s.start.y}, {s.end.x, s.end.y}});
    return j.dump(2);
}

StrokeSet stroke_set_from_json(std::string_view json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("strokes") || !j["strokes"].is_array())
        throw DecodeError("stroke JSON: expected {\"source_id\", \"strokes\": [...]}");
    StrokeSet set;
    set.source_id = j.value("source_id", std::string{});
    for (const auto& e : j["strokes"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2 ||
            !e[1].is_array() || e[1].size() != 2)
            throw DecodeError("stroke JSON: each stroke must be [[x1,y1],[x2,y2]]");
        set.strokes.push_back({{e[0][0].get<double>(), e[0][1].get<double>()},
                               {e[1][0].get<double>(), e[1][1].get<double>()}});
    }
    return set;
}

} // namespace hierosa
