#pragma once

#include <vector>

#include "hierosa/reward.hpp"

namespace hierosa {

/// One evaluation sample: glyph, predicted strokes, and whether the raw
/// model output parsed cleanly.
struct CorpusPair {
    BinaryGlyph glyph;
    StrokeSet strokes;
    bool format_ok = true;
};

struct MetricsReport {
    double re = 0.0;      // mean total reward r
    double mean_rs = 0.0; // mean stroke reward, for the no-format-term reading
    double co = 0.0;      // mean coverage percentage of omega_B
    double is_pct = 0.0;  // invalid strokes / total strokes * 100 (corpus level)
    double cs = 0.0;      // co / mean accepted strokes per sample
    double ts = 0.0;      // mean strokes per sample
    size_t n_samples = 0;
};

/// Corpus-level metric aggregation. `is_per_sample_mean` switches IS from the
/// corpus-stroke-level ratio to the mean of per-sample ratios. Floating means
/// are reduced in value order, so corpus order never changes any metric.
MetricsReport evaluate_corpus(const std::vector<CorpusPair>& pairs, const RewardConfig& cfg,
                              bool is_per_sample_mean = false);

/// Same aggregation from already-computed reports (stroke counts paired).
MetricsReport summarize_reports(const std::vector<RewardReport>& reports,
                                bool is_per_sample_mean = false);

} // namespace hierosa
