#include "twostar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twostar {

DegreeSummary summarize_degrees(std::span<const int> degrees, int bins) {
    if (bins < 1) {
        throw std::invalid_argument("summarize: bins must be >= 1");
    }
    const int n = static_cast<int>(degrees.size());
    if (n < 2) {
        throw std::invalid_argument("summarize: need at least 2 vertices");
    }
    DegreeSummary s;
    s.n = n;
    s.scaled_degrees.reserve(degrees.size());
    s.histogram.assign(static_cast<std::size_t>(bins), 0);
    s.min = 1.0;
    s.max = 0.0;
    double sum = 0.0;
    const double nm1 = static_cast<double>(n - 1);
    for (int d : degrees) {
        const double v = static_cast<double>(d) / nm1;
        s.scaled_degrees.push_back(v);
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
        const auto bin = std::min<std::int64_t>(bins - 1, static_cast<std::int64_t>(v * bins));
        ++s.histogram[static_cast<std::size_t>(bin)];
    }
    s.mean = sum / n;
    return s;
}

DegreeSummary summarize(const AdjacencyState& g, int bins) {
    return summarize_degrees(g.degrees(), bins);
}

ConcentrationResult concentration_check(const DegreeSummary& s,
                                        std::span<const double> p_targets, double delta) {
    if (p_targets.empty()) {
        throw std::invalid_argument("concentration_check: empty target list");
    }
    if (!(delta > 0.0)) {
        throw std::invalid_argument("concentration_check: delta must be > 0");
    }
    ConcentrationResult best;
    best.max_dev = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p_targets.size(); ++k) {
        // max_i |d_i/(n-1) - p| is attained at the extreme scaled degrees.
        const double dev = std::max(std::fabs(s.min - p_targets[k]),
                                    std::fabs(s.max - p_targets[k]));
        if (dev < best.max_dev) {
            best.max_dev = dev;
            best.mode = k;
        }
    }
    best.pass = best.max_dev <= delta;
    return best;
}

ModeStats mode_split(std::span<const DegreeSummary> chains, const PhaseReport& report,
                     double delta) {
    if (report.domain != PhaseDomain::Theta2) {
        throw std::invalid_argument("mode_split: report must be in domain Theta2");
    }
    if (chains.size() < 2) {
        throw std::invalid_argument("mode_split: need at least 2 chains");
    }
    const auto upper =
        std::max_element(report.predicted_p.begin(), report.predicted_p.end()) -
        report.predicted_p.begin();

    ModeStats stats;
    stats.chain_count = static_cast<int>(chains.size());
    int upper_count = 0;
    for (const DegreeSummary& s : chains) {
        const ConcentrationResult r = concentration_check(s, report.predicted_p, delta);
        stats.chain_modes.push_back(r.mode);
        stats.max_deviation_within_mode = std::max(stats.max_deviation_within_mode, r.max_dev);
        if (r.mode == static_cast<std::size_t>(upper)) {
            ++upper_count;
        }
    }
    stats.fraction_upper = static_cast<double>(upper_count) / stats.chain_count;
    return stats;
}

double default_delta(int n) {
    if (n >= 1000) {
        return 0.1;
    }
    if (n >= 100) {
        return 0.15;
    }
    return 0.2;
}

}  // namespace twostar
