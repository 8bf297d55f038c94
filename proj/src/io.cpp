#include "twostar/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twostar {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_degrees_csv(std::ostream& os, const ChainOutput& out, std::int64_t record_every) {
    if (out.samples.empty()) {
        throw std::invalid_argument("write_degrees_csv: no recorded samples");
    }
    const int n = out.samples.front().n;
    os << "sweep";
    for (int i = 0; i < n; ++i) {
        os << ",d" << i;
    }
    os << '\n';
    for (std::size_t k = 0; k < out.samples.size(); ++k) {
        os << (static_cast<std::int64_t>(k) + 1) * record_every;
        for (double v : out.samples[k].scaled_degrees) {
            os << ',' << format_double(v);
        }
        os << '\n';
    }
}

void write_histogram_csv(std::ostream& os, const DegreeSummary& s) {
    os << "bin_left,bin_right,count\n";
    const auto bins = static_cast<int>(s.histogram.size());
    for (int b = 0; b < bins; ++b) {
        os << format_double(static_cast<double>(b) / bins) << ','
           << format_double(static_cast<double>(b + 1) / bins) << ','
           << s.histogram[static_cast<std::size_t>(b)] << '\n';
    }
}

void write_curve_csv(std::ostream& os, double theta1, double theta2, double t_min,
                     double t_max, int points) {
    if (points < 2) {
        throw std::invalid_argument("write_curve_csv: need at least 2 points");
    }
    os << "t,tanh\n";
    for (int k = 0; k < points; ++k) {
        const double t = t_min + (t_max - t_min) * k / (points - 1);
        os << format_double(t) << ','
           << format_double(std::tanh(2.0 * theta2 * t + theta1)) << '\n';
    }
}

void write_histogram_svg(std::ostream& os, const DegreeSummary& s) {
    const int width = 640;
    const int height = 400;
    const int margin = 40;
    const auto bins = static_cast<int>(s.histogram.size());
    std::int64_t peak = 1;
    for (std::int64_t c : s.histogram) {
        peak = std::max(peak, c);
    }
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    const double plot_w = width - 2.0 * margin;
    const double plot_h = height - 2.0 * margin;
    for (int b = 0; b < bins; ++b) {
        const std::int64_t c = s.histogram[static_cast<std::size_t>(b)];
        if (c == 0) {
            continue;
        }
        const double h = plot_h * static_cast<double>(c) / static_cast<double>(peak);
        const double x = margin + plot_w * b / bins;
        os << "<rect x=\"" << format_double(x) << "\" y=\"" << format_double(height - margin - h)
           << "\" width=\"" << format_double(plot_w / bins) << "\" height=\""
           << format_double(h) << "\" fill=\"steelblue\"/>\n";
    }
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
       << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << margin << "\" y=\"" << height - margin + 16
       << "\" font-size=\"12\">0</text>\n";
    os << "<text x=\"" << width - margin - 8 << "\" y=\"" << height - margin + 16
       << "\" font-size=\"12\">1</text>\n";
    os << "<text x=\"" << margin << "\" y=\"" << margin - 8 << "\" font-size=\"12\">scaled degrees, n="
       << s.n << "</text>\n";
    os << "</svg>\n";
}

void write_probs_csv(std::ostream& os, const ExactDistribution& dist) {
    os << "bitmask,probability\n";
    for (std::size_t mask = 0; mask < dist.probs.size(); ++mask) {
        os << mask << ',' << format_double(dist.probs[mask]) << '\n';
    }
}

nlohmann::ordered_json to_json(const PhaseReport& report) {
    nlohmann::ordered_json j;
    j["domain"] = to_string(report.domain);
    j["is_critical"] = report.is_critical;
    j["fixed_points"] = report.fixed_points;
    j["predicted_p"] = report.predicted_p;
    return j;
}

nlohmann::ordered_json to_json(const DegreeSummary& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["min"] = s.min;
    j["max"] = s.max;
    j["mean"] = s.mean;
    j["bins"] = s.histogram.size();
    j["histogram"] = s.histogram;
    return j;
}

nlohmann::ordered_json to_json(const ModeStats& stats) {
    nlohmann::ordered_json j;
    j["chain_count"] = stats.chain_count;
    j["chain_modes"] = stats.chain_modes;
    j["fraction_upper"] = stats.fraction_upper;
    j["max_deviation_within_mode"] = stats.max_deviation_within_mode;
    return j;
}

nlohmann::ordered_json to_json(const ExactDistribution& dist) {
    nlohmann::ordered_json j;
    j["n"] = dist.n;
    j["log_z"] = dist.log_z;
    nlohmann::ordered_json dd = nlohmann::ordered_json::object();
    for (const auto& [sequence, prob] : dist.degree_dist) {
        std::ostringstream key;
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            if (i > 0) {
                key << ' ';
            }
            key << sequence[i];
        }
        dd[key.str()] = prob;
    }
    j["degree_dist"] = dd;
    return j;
}

}  // namespace twostar
