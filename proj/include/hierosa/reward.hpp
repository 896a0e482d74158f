#pragma once

#include <optional>
#include <vector>

#include "hierosa/bitmap.hpp"
#include "hierosa/geometry.hpp"
#include "hierosa/stroke.hpp"

namespace hierosa {

/// Reward pipeline knobs. march_step unset means quarter-pixel, resolved
/// per glyph as 0.25 / max(width, height).
struct RewardConfig {
    double d = 0.05;            // sampling threshold
    double lambda = 1.3;        // abnormal-extension threshold
    double alpha = 0.1;         // invalid-stroke penalty coefficient
    double beta = 0.125;        // format-reward weight
    double tau_novel = 0.005;   // marginal-novelty acceptance threshold
    std::optional<double> march_step;

    void validate() const;
    double effective_march_step(const BinaryGlyph& glyph) const {
        return march_step ? *march_step : 0.25 / std::max(glyph.width(), glyph.height());
    }
};

/// Per-sample normal extension lengths (positive / negative direction).
struct ExtensionPair {
    double pos = 0.0;
    double neg = 0.0;
};

/// Full per-stroke coverage record. Extension indices run over the sample
/// points in traversal order: 0 = start, 1..m = interior, m+1 = end.
struct StrokeCoverage {
    StrokeFrame frame;
    std::vector<ExtensionPair> raw_extensions;
    double mean_ext = 0.0;
    std::vector<int> abnormal_set;
    double refined_mean = 0.0;
    std::vector<ExtensionPair> truncated_extensions;
    double tangential_start = 0.0;
    double tangential_end = 0.0;
    Vec2 extended_start;
    Vec2 extended_end;
    std::vector<Vec2> offsets_pos; // q_j^+ in traversal order
    std::vector<Vec2> offsets_neg; // q_j^-
    CoveragePolygon polygon;
};

/// Outcome for one stroke of a set. A stroke is accepted iff both validity
/// flags hold; novelty is only ever tested for geometrically valid strokes.
struct StrokeScore {
    int index = 0;
    bool valid_geometric = false;
    bool valid_novelty = false;
    double novelty_ratio = 0.0;
    std::optional<StrokeCoverage> coverage;

    bool accepted() const { return valid_geometric && valid_novelty; }
};

struct RewardReport {
    std::vector<StrokeScore> per_stroke;
    int n_invalid = 0;
    size_t final_coverage_pixels = 0;
    size_t omega_b_pixels = 0;
    double r_s = 0.0;
    double r_f = 0.0;
    double r = 0.0;

    double coverage_ratio() const {
        return static_cast<double>(final_coverage_pixels) / static_cast<double>(omega_b_pixels);
    }
};

/// Geometric validity test: every sample point (endpoints + interior) lies
/// on a black pixel. Degenerate strokes are invalid with no sampling.
struct ValidityResult {
    bool valid = false;
    std::optional<SampledStroke> sampled;
};
ValidityResult check_valid_stroke(const BinaryGlyph& glyph, const Stroke& stroke,
                                  const RewardConfig& cfg);

/// Normal-ray extension, outlier truncation, tangential endpoint extension
/// and coverage-polygon construction for one geometrically valid stroke.
/// Throws PreconditionViolated if a sample point is not black.
StrokeCoverage estimate_coverage(const BinaryGlyph& glyph, const SampledStroke& sampled,
                                 const RewardConfig& cfg);

/// Sequential novelty-gated aggregation and the final penalty-weighted
/// reward. Throws EmptyForeground when the glyph has no black pixels.
RewardReport aggregate_reward(const BinaryGlyph& glyph, const StrokeSet& strokes, bool format_ok,
                              const RewardConfig& cfg);

/// JSON mirror of a RewardReport (validity flags, reward decomposition and
/// polygon vertex lists included).
std::string reward_report_to_json(const RewardReport& report, const StrokeSet& strokes);

} // namespace hierosa
