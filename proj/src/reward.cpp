#include "hierosa/reward.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "hierosa/errors.hpp"

namespace hierosa {

void RewardConfig::validate() const {
    if (!(d > 0.0)) throw ConfigError("d must be > 0");
    if (!(lambda > 1.0)) throw ConfigError("lambda must be > 1");
    if (!(alpha >= 0.0)) throw ConfigError("alpha must be >= 0");
    if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
    if (!(tau_novel >= 0.0 && tau_novel < 1.0)) throw ConfigError("tau_novel must be in [0,1)");
    if (march_step && !(*march_step > 0.0)) throw ConfigError("march_step must be > 0");
}

ValidityResult check_valid_stroke(const BinaryGlyph& glyph, const Stroke& stroke,
                                  const RewardConfig& cfg) {
    if (stroke.degenerate()) return {false, std::nullopt};
    SampledStroke sampled = sample_stroke(stroke, cfg.d);
    bool valid = is_black_at(glyph, stroke.start) && is_black_at(glyph, stroke.end);
    for (const Vec2& p : sampled.interior_points) {
        if (!valid) break;
        valid = is_black_at(glyph, p);
    }
    return {valid, std::move(sampled)};
}

StrokeCoverage estimate_coverage(const BinaryGlyph& glyph, const SampledStroke& sampled,
                                 const RewardConfig& cfg) {
    const std::vector<Vec2> points = sampled.all_points();
    for (const Vec2& p : points)
        if (!is_black_at(glyph, p))
            throw PreconditionViolated("coverage estimation requires all sample points black");

    StrokeCoverage cov;
    cov.frame = stroke_frame(sampled.stroke);
    const Vec2 n = cov.frame.n;
    const double step = cfg.effective_march_step(glyph);

    const size_t count = points.size(); // m + 2
    cov.raw_extensions.resize(count);
    double sum = 0.0;
    for (size_t j = 0; j < count; ++j) {
        cov.raw_extensions[j].pos = march_to_boundary(glyph, points[j], n, step);
        cov.raw_extensions[j].neg = march_to_boundary(glyph, points[j], Vec2{-n.x, -n.y}, step);
        sum += cov.raw_extensions[j].pos + cov.raw_extensions[j].neg;
    }
    cov.mean_ext = sum / (2.0 * static_cast<double>(count));

    double kept_sum = 0.0;
    size_t kept = 0;
    for (size_t j = 0; j < count; ++j) {
        const auto& e = cov.raw_extensions[j];
        if (std::max(e.pos, e.neg) > cfg.lambda * cov.mean_ext) {
            cov.abnormal_set.push_back(static_cast<int>(j));
        } else {
            kept_sum += e.pos + e.neg;
            ++kept;
        }
    }
    // when every sample is flagged abnormal there is nothing to average;
    // fall back to the unrefined mean
    cov.refined_mean = kept > 0 ? kept_sum / (2.0 * static_cast<double>(kept)) : cov.mean_ext;

    const double cap = cfg.lambda * cov.refined_mean;
    cov.truncated_extensions.resize(count);
    for (size_t j = 0; j < count; ++j) {
        cov.truncated_extensions[j].pos = std::min(cov.raw_extensions[j].pos, cap);
        cov.truncated_extensions[j].neg = std::min(cov.raw_extensions[j].neg, cap);
    }

    cov.tangential_start =
        (cov.truncated_extensions.front().pos + cov.truncated_extensions.front().neg) / 2.0;
    cov.tangential_end =
        (cov.truncated_extensions.back().pos + cov.truncated_extensions.back().neg) / 2.0;
    cov.extended_start = sampled.stroke.start - cov.tangential_start * cov.frame.t;
    cov.extended_end = sampled.stroke.end + cov.tangential_end * cov.frame.t;

    cov.offsets_pos.resize(count);
    cov.offsets_neg.resize(count);
    for (size_t j = 0; j < count; ++j) {
        cov.offsets_pos[j] = points[j] + cov.truncated_extensions[j].pos * n;
        cov.offsets_neg[j] = points[j] - cov.truncated_extensions[j].neg * n;
    }

    // boundary walk: extended start, +side start->end, extended end,
    // -side end->start, implicit close
    auto& verts = cov.polygon.vertices;
    verts.reserve(2 * count + 2);
    verts.push_back(cov.extended_start);
    verts.insert(verts.end(), cov.offsets_pos.begin(), cov.offsets_pos.end());
    verts.push_back(cov.extended_end);
    verts.insert(verts.end(), cov.offsets_neg.rbegin(), cov.offsets_neg.rend());
    return cov;
}

RewardReport aggregate_reward(const BinaryGlyph& glyph, const StrokeSet& strokes, bool format_ok,
                              const RewardConfig& cfg) {
    cfg.validate();
    RewardReport report;
    report.omega_b_pixels = glyph.black_count();
    if (report.omega_b_pixels == 0)
        throw EmptyForeground("reward undefined: glyph has no black pixels");
    const double omega = static_cast<double>(report.omega_b_pixels);

    PixelMask accepted_union(glyph.width(), glyph.height());
    report.per_stroke.reserve(strokes.size());

    for (size_t k = 0; k < strokes.size(); ++k) {
        StrokeScore score;
        score.index = static_cast<int>(k);

        ValidityResult validity = check_valid_stroke(glyph, strokes.strokes[k], cfg);
        score.valid_geometric = validity.valid;
        if (validity.valid) {
            score.coverage = estimate_coverage(glyph, *validity.sampled, cfg);
            PixelMask poly_mask =
                rasterize_polygon(score.coverage->polygon, glyph.width(), glyph.height());
            size_t novel =
                PixelMask::count_diff_and(poly_mask, accepted_union, glyph.mask());
            score.novelty_ratio = static_cast<double>(novel) / omega;
            score.valid_novelty = !(score.novelty_ratio < cfg.tau_novel);
            // only accepted strokes contribute to the running union
            if (score.valid_novelty) accepted_union.or_with(poly_mask);
        }
        if (!score.accepted()) ++report.n_invalid;
        report.per_stroke.push_back(std::move(score));
    }

    report.final_coverage_pixels = PixelMask::count_and(accepted_union, glyph.mask());
    report.r_s = (static_cast<double>(report.final_coverage_pixels) / omega) *
                 (1.0 - cfg.alpha * report.n_invalid);
    report.r_f = format_ok ? 1.0 : 0.0;
    report.r = report.r_s + cfg.beta * report.r_f;
    return report;
}

namespace {

nlohmann::json point_json(Vec2 p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json coverage_json(const StrokeCoverage& cov) {
    nlohmann::json j;
    j["tangent"] = point_json(cov.frame.t);
    j["normal"] = point_json(cov.frame.n);
    auto raw = nlohmann::json::array();
    for (const auto& e : cov.raw_extensions) raw.push_back({e.pos, e.neg});
    j["raw_extensions"] = std::move(raw);
    j["mean_extension"] = cov.mean_ext;
    j["abnormal_indices"] = cov.abnormal_set;
    j["refined_mean"] = cov.refined_mean;
    auto trunc = nlohmann::json::array();
    for (const auto& e : cov.truncated_extensions) trunc.push_back({e.pos, e.neg});
    j["truncated_extensions"] = std::move(trunc);
    j["tangential"] = {cov.tangential_start, cov.tangential_end};
    j["extended_start"] = point_json(cov.extended_start);
    j["extended_end"] = point_json(cov.extended_end);
    auto poly = nlohmann::json::array();
    for (const Vec2& v : cov.polygon.vertices) poly.push_back(point_json(v));
    j["polygon"] = std::move(poly);
    return j;
}

} // namespace

std::string reward_report_to_json(const RewardReport& report, const StrokeSet& strokes) {
    nlohmann::json j;
    j["source_id"] = strokes.source_id;
    j["n"] = strokes.size();
    j["n_invalid"] = report.n_invalid;
    j["final_coverage_pixels"] = report.final_coverage_pixels;
    j["omega_b_pixels"] = report.omega_b_pixels;
    j["r_s"] = report.r_s;
    j["r_f"] = report.r_f;
    j["r"] = report.r;
    auto per = nlohmann::json::array();
    for (const StrokeScore& s : report.per_stroke) {
        nlohmann::json e;
        e["index"] = s.index;
        const Stroke& st = strokes.strokes[s.index];
        e["stroke"] = {point_json(st.start), point_json(st.end)};
        e["valid_geometric"] = s.valid_geometric;
        e["valid_novelty"] = s.valid_novelty;
        e["novelty_ratio"] = s.novelty_ratio;
        e["coverage"] = s.coverage ? coverage_json(*s.coverage) : nlohmann::json(nullptr);
        per.push_back(std::move(e));
    }
    j["per_stroke"] = std::move(per);
    return j.dump(2);
}

} // namespace hierosa
