// twostar: command-line front end for the two-star ERGM simulator.
//
// Subcommands:
//   sample    run Gibbs/Glauber chains, write degree + histogram CSVs
//   phase     classify (theta1, theta2) and print fixed points / limits
//   validate  compare a sampler against the exact small-n oracle (TV)
//   sweep     grid over (theta1, theta2), one CSV row per grid point
//
// Exit codes: 0 success, 1 usage error, 2 validation fail, 3 internal error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twostar/analysis.hpp"
#include "twostar/graph.hpp"
#include "twostar/io.hpp"
#include "twostar/model.hpp"
#include "twostar/oracle.hpp"
#include "twostar/phase.hpp"
#include "twostar/sampler.hpp"
#include "twostar/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace twostar;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamArgs {
    int n = 0;
    std::optional<double> beta1;
    std::optional<double> beta2;
    std::optional<double> theta1;
    std::optional<double> theta2;

    void add_options(CLI::App* cmd, bool need_n) {
        auto* n_opt = cmd->add_option("--n", n, "number of vertices");
        if (need_n) {
            n_opt->required();
        }
        cmd->add_option("--beta1", beta1, "edge parameter beta1");
        cmd->add_option("--beta2", beta2, "two-star parameter beta2 (> 0)");
        cmd->add_option("--theta1", theta1, "reparametrized theta1 = (beta1+beta2)/2");
        cmd->add_option("--theta2", theta2, "reparametrized theta2 = beta2/4 (> 0)");
    }

    // Accepts exactly one of the (beta1,beta2) / (theta1,theta2) pairs.
    ModelParams make(bool allow_nonpositive_beta2) const {
        const bool has_beta = beta1.has_value() || beta2.has_value();
        const bool has_theta = theta1.has_value() || theta2.has_value();
        if (has_beta == has_theta) {
            throw UsageError("give either --beta1/--beta2 or --theta1/--theta2");
        }
        if (has_beta) {
            if (!beta1.has_value() || !beta2.has_value()) {
                throw UsageError("--beta1 and --beta2 must be given together");
            }
            return allow_nonpositive_beta2 ? ModelParams::unchecked(n, *beta1, *beta2)
                                           : ModelParams(n, *beta1, *beta2);
        }
        if (!theta1.has_value() || !theta2.has_value()) {
            throw UsageError("--theta1 and --theta2 must be given together");
        }
        return ModelParams::from_thetas(n, *theta1, *theta2);
    }
};

fs::path resolve_out_dir(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

void write_text_file(const fs::path& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    os << contents;
    if (!os.good()) {
        throw std::runtime_error("failed to write " + path.string());
    }
}

std::vector<std::string> capture_argv(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        out.emplace_back(argv[i]);
    }
    return out;
}

ordered_json params_json(const ModelParams& p) {
    ordered_json j;
    j["n"] = p.n();
    j["beta1"] = p.beta1();
    j["beta2"] = p.beta2();
    j["theta1"] = p.theta1();
    j["theta2"] = p.theta2();
    return j;
}

SamplerKind parse_sampler(const std::string& name) {
    if (name == "gibbs") {
        return SamplerKind::Gibbs;
    }
    if (name == "glauber") {
        return SamplerKind::Glauber;
    }
    throw UsageError("unknown sampler '" + name + "'");
}

InitSpec parse_init(const std::string& name, double er_p, const std::string& graph_path) {
    if (name == "empty") {
        return InitSpec::empty();
    }
    if (name == "complete") {
        return InitSpec::complete();
    }
    if (name == "er" || name == "erdos_renyi") {
        return InitSpec::erdos_renyi(er_p);
    }
    if (name == "given") {
        if (graph_path.empty()) {
            throw UsageError("--init given requires --init-graph <edge-list file>");
        }
        std::ifstream is(graph_path);
        if (!is) {
            throw UsageError("cannot open init graph file " + graph_path);
        }
        return InitSpec::given(AdjacencyState::read_edge_list(is));
    }
    throw UsageError("unknown init '" + name + "'");
}

int hardware_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
    ParamArgs params;
    std::int64_t burn_in = 500;
    std::int64_t sweeps = 1;
    std::uint64_t seed = 0;
    int chains = 1;
    int chain_offset = 0;
    std::int64_t record_every = 1;
    int bins = 50;
    std::string sampler = "gibbs";
    std::string init = "er";
    double er_p = 0.5;
    std::string init_graph;
    std::string out = ".";
    bool svg = false;
    bool final_graph = false;
};

int cmd_sample(const SampleArgs& a, const std::vector<std::string>& argv) {
    const auto start = std::chrono::steady_clock::now();
    const SamplerKind kind = parse_sampler(a.sampler);
    const ModelParams params = a.params.make(kind == SamplerKind::Glauber);
    if (a.sweeps < a.record_every) {
        throw UsageError("--sweeps must be >= --record-every");
    }
    if (a.chains < 1) {
        throw UsageError("--chains must be >= 1");
    }

    ChainConfig base;
    base.burn_in = a.burn_in;
    base.n_sweeps = a.sweeps;
    base.record_every = a.record_every;
    base.histogram_bins = a.bins;
    base.init = parse_init(a.init, a.er_p, a.init_graph);
    base.degrees_only = kind == SamplerKind::Gibbs;

    const fs::path dir = resolve_out_dir(a.out);
    const std::vector<ChainOutput> outputs =
        run_chains(params, base, kind, a.chains, a.seed, a.chain_offset, hardware_threads());

    ordered_json manifest;
    manifest["command"] = "sample";
    manifest["version"] = TWOSTAR_VERSION;
    manifest["argv"] = argv;
    manifest["params"] = params_json(params);
    manifest["seed"] = a.seed;
    manifest["config"] = {{"burn_in", a.burn_in},
                          {"sweeps", a.sweeps},
                          {"record_every", a.record_every},
                          {"chains", a.chains},
                          {"chain_offset", a.chain_offset},
                          {"sampler", a.sampler},
                          {"init", a.init},
                          {"er_p", a.er_p},
                          {"bins", a.bins}};

    std::vector<std::uint64_t> seeds;
    ordered_json degree_files = ordered_json::array();
    ordered_json histogram_files = ordered_json::array();
    ordered_json svg_files = ordered_json::array();
    ordered_json graph_files = ordered_json::array();
    ordered_json summary = ordered_json::array();

    for (int k = 0; k < a.chains; ++k) {
        const int global = a.chain_offset + k;
        seeds.push_back(chain_seed(a.seed, static_cast<std::uint64_t>(global)));
        const ChainOutput& out = outputs[static_cast<std::size_t>(k)];

        const fs::path degrees_path = dir / ("degrees_chain" + std::to_string(global) + ".csv");
        {
            std::ostringstream os;
            write_degrees_csv(os, out, a.record_every);
            write_text_file(degrees_path, os.str());
        }
        degree_files.push_back(degrees_path.string());

        const DegreeSummary& last = out.samples.back();
        const fs::path hist_path = dir / ("histogram_chain" + std::to_string(global) + ".csv");
        {
            std::ostringstream os;
            write_histogram_csv(os, last);
            write_text_file(hist_path, os.str());
        }
        histogram_files.push_back(hist_path.string());

        if (a.svg) {
            const fs::path svg_path =
                dir / ("histogram_chain" + std::to_string(global) + ".svg");
            std::ostringstream os;
            write_histogram_svg(os, last);
            write_text_file(svg_path, os.str());
            svg_files.push_back(svg_path.string());
        }

        if (a.final_graph) {
            const fs::path graph_path =
                dir / ("final_graph_chain" + std::to_string(global) + ".txt");
            std::ostringstream os;
            out.final_state.write_edge_list(os);
            write_text_file(graph_path, os.str());
            graph_files.push_back(graph_path.string());
        }

        ordered_json s;
        s["chain"] = global;
        s["mean"] = last.mean;
        s["min"] = last.min;
        s["max"] = last.max;
        summary.push_back(s);
        std::cout << "chain " << global << ": mean=" << format_double(last.mean)
                  << " min=" << format_double(last.min) << " max=" << format_double(last.max)
                  << "\n";
    }

    manifest["chain_seeds"] = seeds;
    manifest["outputs"] = {{"degrees", degree_files}, {"histograms", histogram_files}};
    if (a.svg) {
        manifest["outputs"]["svg"] = svg_files;
    }
    if (a.final_graph) {
        manifest["outputs"]["final_graphs"] = graph_files;
    }
    manifest["summary"] = summary;
    manifest["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
    return 0;
}

// ----------------------------------------------------------------- phase

struct PhaseArgs {
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::string curve_csv;
    int curve_points = 401;
    std::string json_path;
};

int cmd_phase(const PhaseArgs& a) {
    const PhaseReport report = classify(a.theta1, a.theta2);

    std::cout << "theta1       " << format_double(a.theta1) << "\n";
    std::cout << "theta2       " << format_double(a.theta2) << "\n";
    std::cout << "domain       " << to_string(report.domain) << "\n";
    std::cout << "critical     " << (report.is_critical ? "yes" : "no") << "\n";
    std::cout << "fixed_points";
    for (double m : report.fixed_points) {
        std::cout << ' ' << format_double(m);
    }
    std::cout << "\npredicted_p ";
    for (double p : report.predicted_p) {
        std::cout << ' ' << format_double(p);
    }
    std::cout << "\n";

    if (!a.json_path.empty()) {
        ordered_json j;
        j["theta1"] = a.theta1;
        j["theta2"] = a.theta2;
        j.update(to_json(report));
        write_text_file(a.json_path, j.dump(2) + "\n");
    }
    if (!a.curve_csv.empty()) {
        std::ostringstream os;
        write_curve_csv(os, a.theta1, a.theta2, -1.5, 1.5, a.curve_points);
        write_text_file(a.curve_csv, os.str());
    }
    return 0;
}

// -------------------------------------------------------------- validate

struct ValidateArgs {
    ParamArgs params;
    std::int64_t burn_in = 500;
    std::int64_t sweeps = 100000;
    std::uint64_t seed = 0;
    std::string sampler = "gibbs";
    double tv_threshold = 0.02;
    bool expensive = false;
    std::string json_path;
    std::string oracle_json_path;
    std::string dump_probs_path;
};

struct ValidateOutcome {
    double tv_degree = 0.0;
    std::optional<double> tv_full;
    bool pass = true;
};

ValidateOutcome validate_one(const ModelParams& params, const ExactDistribution& exact,
                             SamplerKind kind, const ValidateArgs& a) {
    ChainConfig cfg;
    cfg.seed = a.seed;
    cfg.burn_in = a.burn_in;
    cfg.n_sweeps = a.sweeps;
    cfg.record_every = 1;

    const bool track_full = params.n() <= 4;
    std::vector<std::int64_t> mask_counts(track_full ? exact.probs.size() : 0, 0);
    std::map<std::vector<int>, std::int64_t> degree_counts;
    std::int64_t total = 0;

    run_chain_visit(params, cfg, kind,
                    [&](std::int64_t, std::span<const int> degrees, const AdjacencyState* g) {
                        std::vector<int> key(degrees.begin(), degrees.end());
                        std::sort(key.begin(), key.end());
                        ++degree_counts[key];
                        ++total;
                        if (track_full && g != nullptr) {
                            ++mask_counts[static_cast<std::size_t>(graph_bitmask(*g))];
                        }
                    });

    std::map<std::vector<int>, double> empirical_degree;
    for (const auto& [key, count] : degree_counts) {
        empirical_degree[key] = static_cast<double>(count) / static_cast<double>(total);
    }

    ValidateOutcome outcome;
    outcome.tv_degree = tv_distance(empirical_degree, exact.degree_dist);
    outcome.pass = outcome.tv_degree < a.tv_threshold;
    if (track_full) {
        std::vector<double> empirical_full(exact.probs.size());
        for (std::size_t m = 0; m < mask_counts.size(); ++m) {
            empirical_full[m] =
                static_cast<double>(mask_counts[m]) / static_cast<double>(total);
        }
        outcome.tv_full = tv_distance(empirical_full, exact.probs);
        outcome.pass = outcome.pass && *outcome.tv_full < a.tv_threshold;
    }
    return outcome;
}

int cmd_validate(const ValidateArgs& a) {
    const bool both = a.sampler == "both";
    std::vector<SamplerKind> kinds;
    if (both) {
        kinds = {SamplerKind::Gibbs, SamplerKind::Glauber};
    } else {
        kinds = {parse_sampler(a.sampler)};
    }
    const bool glauber_only = !both && kinds.front() == SamplerKind::Glauber;
    const ModelParams params = a.params.make(glauber_only);
    const int cap = a.expensive ? kMaxExactN + 1 : kMaxExactN;
    if (params.n() > cap) {
        throw UsageError("validate: n exceeds the oracle cap of " + std::to_string(cap));
    }

    const ExactDistribution exact = enumerate_exact(params, a.expensive);
    if (!a.oracle_json_path.empty()) {
        write_text_file(a.oracle_json_path, to_json(exact).dump(2) + "\n");
    }
    if (!a.dump_probs_path.empty()) {
        std::ostringstream os;
        write_probs_csv(os, exact);
        write_text_file(a.dump_probs_path, os.str());
    }
    bool all_pass = true;
    ordered_json results = ordered_json::array();
    for (SamplerKind kind : kinds) {
        const std::string name = kind == SamplerKind::Gibbs ? "gibbs" : "glauber";
        const ValidateOutcome outcome = validate_one(params, exact, kind, a);
        all_pass = all_pass && outcome.pass;
        std::cout << name << ": tv_degree=" << format_double(outcome.tv_degree);
        ordered_json r;
        r["sampler"] = name;
        r["tv_degree"] = outcome.tv_degree;
        if (outcome.tv_full.has_value()) {
            std::cout << " tv_full=" << format_double(*outcome.tv_full);
            r["tv_full"] = *outcome.tv_full;
        }
        r["threshold"] = a.tv_threshold;
        r["pass"] = outcome.pass;
        results.push_back(r);
        std::cout << " threshold=" << format_double(a.tv_threshold) << " -> "
                  << (outcome.pass ? "PASS" : "FAIL") << "\n";
    }

    if (!a.json_path.empty()) {
        ordered_json j;
        j["command"] = "validate";
        j["version"] = TWOSTAR_VERSION;
        j["params"] = params_json(params);
        j["seed"] = a.seed;
        j["config"] = {{"burn_in", a.burn_in},
                       {"sweeps", a.sweeps},
                       {"tv_threshold", a.tv_threshold}};
        j["results"] = results;
        write_text_file(a.json_path, j.dump(2) + "\n");
    }
    if (!all_pass) {
        throw ValidationFail("TV distance above threshold");
    }
    return 0;
}

// ----------------------------------------------------------------- sweep

struct SweepArgs {
    double theta1_min = 0.0;
    double theta1_max = 0.0;
    int theta1_steps = 1;
    double theta2_min = 0.0;
    double theta2_max = 0.0;
    int theta2_steps = 1;
    int n = 200;
    int chains = 2;
    std::int64_t burn_in = 500;
    std::int64_t sweeps = 1;
    std::uint64_t seed = 0;
    int bins = 50;
    std::string sampler = "gibbs";
    std::string out = ".";
};

std::vector<double> grid_values(double lo, double hi, int steps) {
    if (steps < 1) {
        throw UsageError("grid steps must be >= 1");
    }
    if (steps == 1) {
        return {lo};
    }
    std::vector<double> v;
    for (int k = 0; k < steps; ++k) {
        v.push_back(lo + (hi - lo) * k / (steps - 1));
    }
    return v;
}

int cmd_sweep(const SweepArgs& a, const std::vector<std::string>& argv) {
    const auto start = std::chrono::steady_clock::now();
    const SamplerKind kind = parse_sampler(a.sampler);
    if (a.chains < 1) {
        throw UsageError("--chains must be >= 1");
    }
    const std::vector<double> t1s = grid_values(a.theta1_min, a.theta1_max, a.theta1_steps);
    const std::vector<double> t2s = grid_values(a.theta2_min, a.theta2_max, a.theta2_steps);
    for (double t2 : t2s) {
        if (!(t2 > 0.0)) {
            throw UsageError("sweep: every theta2 grid value must be > 0");
        }
    }

    const fs::path dir = resolve_out_dir(a.out);
    const double delta = default_delta(a.n);

    std::ostringstream csv;
    csv << "theta1,theta2,domain,is_critical,predicted_p,mode_means,fraction_upper\n";
    ordered_json point_seeds = ordered_json::array();

    std::uint64_t point_index = 0;
    for (double t1 : t1s) {
        for (double t2 : t2s) {
            const ModelParams params = ModelParams::from_thetas(a.n, t1, t2);
            const PhaseReport report = classify(t1, t2);

            ChainConfig base;
            base.burn_in = a.burn_in;
            base.n_sweeps = a.sweeps;
            base.record_every = a.sweeps;  // keep the final state only
            base.histogram_bins = a.bins;
            base.degrees_only = kind == SamplerKind::Gibbs;

            const std::uint64_t point_seed = chain_seed(a.seed, point_index);
            const std::vector<ChainOutput> outputs =
                run_chains(params, base, kind, a.chains, point_seed, 0, hardware_threads());

            std::vector<DegreeSummary> finals;
            finals.reserve(outputs.size());
            for (const ChainOutput& out : outputs) {
                finals.push_back(out.samples.back());
            }

            // Assign each chain to its nearest predicted limit.
            const std::size_t upper =
                static_cast<std::size_t>(std::max_element(report.predicted_p.begin(),
                                                          report.predicted_p.end()) -
                                         report.predicted_p.begin());
            std::vector<double> mode_mean(report.predicted_p.size(), 0.0);
            std::vector<int> mode_count(report.predicted_p.size(), 0);
            int upper_count = 0;
            for (const DegreeSummary& s : finals) {
                const ConcentrationResult r = concentration_check(s, report.predicted_p, delta);
                mode_mean[r.mode] += s.mean;
                ++mode_count[r.mode];
                if (r.mode == upper) {
                    ++upper_count;
                }
            }

            csv << format_double(t1) << ',' << format_double(t2) << ','
                << to_string(report.domain) << ',' << (report.is_critical ? 1 : 0) << ',';
            for (std::size_t i = 0; i < report.predicted_p.size(); ++i) {
                csv << (i > 0 ? ";" : "") << format_double(report.predicted_p[i]);
            }
            csv << ',';
            for (std::size_t i = 0; i < mode_mean.size(); ++i) {
                csv << (i > 0 ? ";" : "");
                if (mode_count[i] > 0) {
                    csv << format_double(mode_mean[i] / mode_count[i]);
                }
            }
            csv << ',' << format_double(static_cast<double>(upper_count) / a.chains) << '\n';

            ordered_json ps;
            ps["theta1"] = t1;
            ps["theta2"] = t2;
            ps["point_seed"] = point_seed;
            ordered_json cs = ordered_json::array();
            for (int k = 0; k < a.chains; ++k) {
                cs.push_back(chain_seed(point_seed, static_cast<std::uint64_t>(k)));
            }
            ps["chain_seeds"] = cs;
            if (report.domain == PhaseDomain::Theta2 && a.chains >= 2) {
                ps["mode_stats"] = to_json(mode_split(finals, report, delta));
            }
            point_seeds.push_back(ps);
            ++point_index;
        }
    }

    const fs::path csv_path = dir / "sweep.csv";
    write_text_file(csv_path, csv.str());

    ordered_json manifest;
    manifest["command"] = "sweep";
    manifest["version"] = TWOSTAR_VERSION;
    manifest["argv"] = argv;
    manifest["seed"] = a.seed;
    manifest["config"] = {{"n", a.n},           {"chains", a.chains},
                          {"burn_in", a.burn_in}, {"sweeps", a.sweeps},
                          {"sampler", a.sampler}, {"bins", a.bins},
                          {"delta", delta}};
    manifest["grid"] = {{"theta1_min", a.theta1_min}, {"theta1_max", a.theta1_max},
                        {"theta1_steps", a.theta1_steps}, {"theta2_min", a.theta2_min},
                        {"theta2_max", a.theta2_max}, {"theta2_steps", a.theta2_steps}};
    manifest["points"] = point_seeds;
    manifest["outputs"] = {{"csv", csv_path.string()}};
    manifest["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_text_file(dir / "sweep_manifest.json", manifest.dump(2) + "\n");

    std::cout << "wrote " << csv_path.string() << " (" << point_index << " grid points)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-star ERGM simulator (auxiliary-variable Gibbs sampler)"};
    app.set_version_flag("--version", TWOSTAR_VERSION);
    app.require_subcommand(1);
    app.fallthrough(true);
    // key=value config mirroring the flags, one [subcommand] section each;
    // command-line flags win on conflict.
    app.set_config("--config", "", "read options from a key=value config file");

    const char* env_out = std::getenv("TWOSTAR_OUTDIR");
    const std::string default_out = env_out != nullptr ? env_out : ".";

    SampleArgs sample;
    sample.out = default_out;
    CLI::App* sample_cmd = app.add_subcommand("sample", "run sampling chains");
    sample.params.add_options(sample_cmd, true);
    sample_cmd->add_option("--burn-in", sample.burn_in, "burn-in sweeps (default 500)");
    sample_cmd->add_option("--sweeps", sample.sweeps, "post-burn-in sweeps");
    sample_cmd->add_option("--seed", sample.seed, "master seed");
    sample_cmd->add_option("--chains", sample.chains, "number of independent chains");
    sample_cmd->add_option("--chain-offset", sample.chain_offset,
                           "global index of the first chain (seed derivation)");
    sample_cmd->add_option("--record-every", sample.record_every, "thinning interval");
    sample_cmd->add_option("--bins", sample.bins, "histogram bins");
    sample_cmd->add_option("--sampler", sample.sampler, "gibbs | glauber");
    sample_cmd->add_option("--init", sample.init, "empty | complete | er | given");
    sample_cmd->add_option("--er-p", sample.er_p, "edge probability for --init er");
    sample_cmd->add_option("--init-graph", sample.init_graph, "edge-list file for --init given");
    sample_cmd->add_option("--out", sample.out, "output directory");
    sample_cmd->add_flag("--svg", sample.svg, "also write SVG histograms");
    sample_cmd->add_flag("--final-graph", sample.final_graph,
                         "write each chain's final graph as an edge list");

    PhaseArgs phase;
    CLI::App* phase_cmd = app.add_subcommand("phase", "phase classification");
    phase_cmd->add_option("--theta1", phase.theta1, "theta1")->required();
    phase_cmd->add_option("--theta2", phase.theta2, "theta2 (> 0)")->required();
    phase_cmd->add_option("--curve-csv", phase.curve_csv,
                          "write (t, tanh(2*theta2*t+theta1)) pairs to this CSV");
    phase_cmd->add_option("--curve-points", phase.curve_points, "curve resolution");
    phase_cmd->add_option("--json", phase.json_path, "write the report as JSON");

    ValidateArgs validate;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "TV distance against the exact oracle");
    validate.params.add_options(validate_cmd, true);
    validate_cmd->add_option("--burn-in", validate.burn_in, "burn-in sweeps");
    validate_cmd->add_option("--sweeps", validate.sweeps, "recorded sweeps");
    validate_cmd->add_option("--seed", validate.seed, "seed");
    validate_cmd->add_option("--sampler", validate.sampler, "gibbs | glauber | both");
    validate_cmd->add_option("--tv-threshold", validate.tv_threshold, "pass threshold");
    validate_cmd->add_flag("--expensive", validate.expensive, "allow n = 7");
    validate_cmd->add_option("--json", validate.json_path, "write results as JSON");
    validate_cmd->add_option("--oracle-json", validate.oracle_json_path,
                             "dump the exact distribution (log_z, degree_dist) as JSON");
    validate_cmd->add_option("--dump-probs", validate.dump_probs_path,
                             "dump the full exact probability vector as CSV");

    SweepArgs sweep;
    sweep.out = default_out;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid sweep over (theta1, theta2)");
    sweep_cmd->add_option("--theta1-min", sweep.theta1_min)->required();
    sweep_cmd->add_option("--theta1-max", sweep.theta1_max)->required();
    sweep_cmd->add_option("--theta1-steps", sweep.theta1_steps)->required();
    sweep_cmd->add_option("--theta2-min", sweep.theta2_min)->required();
    sweep_cmd->add_option("--theta2-max", sweep.theta2_max)->required();
    sweep_cmd->add_option("--theta2-steps", sweep.theta2_steps)->required();
    sweep_cmd->add_option("--n", sweep.n, "vertices per run");
    sweep_cmd->add_option("--chains", sweep.chains, "chains per grid point");
    sweep_cmd->add_option("--burn-in", sweep.burn_in, "burn-in sweeps");
    sweep_cmd->add_option("--sweeps", sweep.sweeps, "post-burn-in sweeps");
    sweep_cmd->add_option("--seed", sweep.seed, "master seed");
    sweep_cmd->add_option("--bins", sweep.bins, "histogram bins");
    sweep_cmd->add_option("--sampler", sweep.sampler, "gibbs | glauber");
    sweep_cmd->add_option("--out", sweep.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::vector<std::string> argv_copy = capture_argv(argc, argv);
        if (app.got_subcommand(sample_cmd)) {
            return cmd_sample(sample, argv_copy);
        }
        if (app.got_subcommand(phase_cmd)) {
            return cmd_phase(phase);
        }
        if (app.got_subcommand(validate_cmd)) {
            return cmd_validate(validate);
        }
        if (app.got_subcommand(sweep_cmd)) {
            return cmd_sweep(sweep, argv_copy);
        }
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const ValidationFail& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
