#include "hierosa/metrics.hpp"

#include <algorithm>

#include "hierosa/errors.hpp"

namespace hierosa {

namespace {

/// Order-independent sum: identical multisets of values always reduce to the
/// same bits regardless of input order.
double sorted_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

} // namespace

MetricsReport summarize_reports(const std::vector<RewardReport>& reports,
                                bool is_per_sample_mean) {
    if (reports.empty()) throw EmptyCorpus("metrics need at least one sample");
    const double n = static_cast<double>(reports.size());

    std::vector<double> r_values, rs_values, co_values, is_values;
    r_values.reserve(reports.size());
    rs_values.reserve(reports.size());
    co_values.reserve(reports.size());
    long total_strokes = 0, total_invalid = 0, total_accepted = 0;

    for (const RewardReport& rep : reports) {
        r_values.push_back(rep.r);
        rs_values.push_back(rep.r_s);
        co_values.push_back(100.0 * rep.coverage_ratio());
        const long strokes = static_cast<long>(rep.per_stroke.size());
        total_strokes += strokes;
        total_invalid += rep.n_invalid;
        total_accepted += strokes - rep.n_invalid;
        if (is_per_sample_mean)
            is_values.push_back(strokes > 0 ? 100.0 * rep.n_invalid / strokes : 0.0);
    }

    MetricsReport out;
    out.n_samples = reports.size();
    out.re = sorted_sum(std::move(r_values)) / n;
    out.mean_rs = sorted_sum(std::move(rs_values)) / n;
    out.co = sorted_sum(std::move(co_values)) / n;
    out.ts = static_cast<double>(total_strokes) / n;
    if (is_per_sample_mean)
        out.is_pct = sorted_sum(std::move(is_values)) / n;
    else
        out.is_pct = total_strokes > 0 ? 100.0 * total_invalid / total_strokes : 0.0;
    out.cs = total_accepted > 0 ? out.co / (static_cast<double>(total_accepted) / n) : 0.0;
    return out;
}

MetricsReport evaluate_corpus(const std::vector<CorpusPair>& pairs, const RewardConfig& cfg,
                              bool is_per_sample_mean) {
    if (pairs.empty()) throw EmptyCorpus("metrics need at least one sample");
    std::vector<RewardReport> reports;
    reports.reserve(pairs.size());
    for (const CorpusPair& pair : pairs) {
        try {
            reports.push_back(aggregate_reward(pair.glyph, pair.strokes, pair.format_ok, cfg));
        } catch (const EmptyForeground&) {
            throw EmptyForeground("empty foreground in sample '" + pair.glyph.source_id() + "'");
        }
    }
    return summarize_reports(reports, is_per_sample_mean);
}

} // namespace hierosa
