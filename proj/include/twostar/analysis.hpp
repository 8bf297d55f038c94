#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twostar/graph.hpp"
#include "twostar/phase.hpp"

namespace twostar {

/// Scaled-degree view of one graph state: d_i/(n-1) in [0,1] plus summary
/// statistics and a fixed-width histogram over [0,1].
struct DegreeSummary {
    int n = 0;
    std::vector<double> scaled_degrees;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::vector<std::int64_t> histogram;  // counts sum to n
};

DegreeSummary summarize(const AdjacencyState& g, int bins);

/// Same, from a raw degree vector (n = degrees.size()).
DegreeSummary summarize_degrees(std::span<const int> degrees, int bins);

struct ConcentrationResult {
    std::size_t mode = 0;  // index into the target list
    double max_dev = 0.0;  // max_i |d_i/(n-1) - p| for the selected target
    bool pass = false;     // max_dev <= delta
};

/// Assigns the state to the target p minimizing max_i |d_i/(n-1) - p|
/// (ties broken by the first index). Throws on an empty target list or
/// delta <= 0.
ConcentrationResult concentration_check(const DegreeSummary& s,
                                        std::span<const double> p_targets, double delta);

/// Empirical two-mode statistics across independent chains (Theta2 only).
struct ModeStats {
    int chain_count = 0;
    std::vector<std::size_t> chain_modes;  // per-chain index into predicted_p
    double fraction_upper = 0.0;           // share assigned to the largest predicted p
    double max_deviation_within_mode = 0.0;
};

/// Assigns each chain to one of report.predicted_p via concentration_check.
/// Requires report.domain == Theta2 and at least two chains.
ModeStats mode_split(std::span<const DegreeSummary> chains, const PhaseReport& report,
                     double delta);

/// Default concentration tolerance by problem size: 0.1 at n >= 1000,
/// 0.15 for 100 <= n < 1000, 0.2 below.
double default_delta(int n);

}  // namespace twostar
