#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "twostar/analysis.hpp"
#include "twostar/oracle.hpp"
#include "twostar/phase.hpp"
#include "twostar/sampler.hpp"

namespace twostar {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// One row per recorded sweep: sweep index, then the n scaled degrees.
/// Header "sweep,d0,...,d{n-1}".
void write_degrees_csv(std::ostream& os, const ChainOutput& out, std::int64_t record_every);

/// Header "bin_left,bin_right,count".
void write_histogram_csv(std::ostream& os, const DegreeSummary& s);

/// (t, tanh(2*theta2*t + theta1)) pairs over [t_min, t_max].
void write_curve_csv(std::ostream& os, double theta1, double theta2, double t_min,
                     double t_max, int points);

/// Minimal self-contained SVG bar chart of a scaled-degree histogram.
void write_histogram_svg(std::ostream& os, const DegreeSummary& s);

/// Full probability vector, one "bitmask,probability" row per graph.
void write_probs_csv(std::ostream& os, const ExactDistribution& dist);

nlohmann::ordered_json to_json(const PhaseReport& report);
nlohmann::ordered_json to_json(const DegreeSummary& s);
nlohmann::ordered_json to_json(const ModeStats& stats);
/// log_z and the degree-sequence marginal (keys "d0 d1 ... d{n-1}").
nlohmann::ordered_json to_json(const ExactDistribution& dist);

}  // namespace twostar
