#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twostar/analysis.hpp"
#include "twostar/graph.hpp"
#include "twostar/io.hpp"
#include "twostar/model.hpp"
#include "twostar/oracle.hpp"
#include "twostar/phase.hpp"
#include "twostar/sampler.hpp"
#include "twostar/version.hpp"

namespace py = pybind11;
using namespace twostar;

namespace {

std::vector<BetaTerm> to_beta_terms(const std::vector<std::pair<double, int>>& betas) {
    std::vector<BetaTerm> terms;
    terms.reserve(betas.size());
    for (const auto& [beta, edges] : betas) {
        terms.push_back({beta, edges});
    }
    return terms;
}

SamplerKind to_kind(const std::string& name) {
    if (name == "gibbs") {
        return SamplerKind::Gibbs;
    }
    if (name == "glauber") {
        return SamplerKind::Glauber;
    }
    throw std::invalid_argument("sampler must be 'gibbs' or 'glauber'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-star ERGM: auxiliary-variable Gibbs sampler, phase structure, exact oracle";
    m.attr("__version__") = TWOSTAR_VERSION;

    py::class_<AdjacencyState>(m, "AdjacencyState")
        .def(py::init<int>(), py::arg("n"))
        .def_static("complete", &AdjacencyState::complete, py::arg("n"))
        .def_property_readonly("n", &AdjacencyState::n)
        .def("has_edge", &AdjacencyState::has_edge)
        .def("set_edge", &AdjacencyState::set_edge)
        .def("toggle_edge", &AdjacencyState::toggle_edge)
        .def("degree", &AdjacencyState::degree)
        .def("degrees",
             [](const AdjacencyState& g) {
                 return std::vector<int>(g.degrees().begin(), g.degrees().end());
             })
        .def("edge_count", &AdjacencyState::edge_count)
        .def("two_star_count", &AdjacencyState::two_star_count)
        .def("spin_degree", &AdjacencyState::spin_degree)
        .def("spin_statistics",
             [](const AdjacencyState& g) {
                 const SpinStatistics s = g.spin_statistics();
                 return std::make_pair(s.two_stars, s.edges);
             })
        .def("clear", &AdjacencyState::clear)
        .def("edge_list",
             [](const AdjacencyState& g) {
                 std::ostringstream os;
                 g.write_edge_list(os);
                 return os.str();
             })
        .def(py::self == py::self)
        .def("__repr__", [](const AdjacencyState& g) {
            std::ostringstream os;
            os << "AdjacencyState(n=" << g.n() << ", edges=" << g.edge_count() << ")";
            return os.str();
        });

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<int, double, double>(), py::arg("n"), py::arg("beta1"), py::arg("beta2"))
        .def_static("from_thetas", &ModelParams::from_thetas, py::arg("n"), py::arg("theta1"),
                    py::arg("theta2"))
        .def_static("unchecked", &ModelParams::unchecked)
        .def_property_readonly("n", &ModelParams::n)
        .def_property_readonly("beta1", &ModelParams::beta1)
        .def_property_readonly("beta2", &ModelParams::beta2)
        .def_property_readonly("theta1", &ModelParams::theta1)
        .def_property_readonly("theta2", &ModelParams::theta2)
        .def("__repr__", [](const ModelParams& p) {
            std::ostringstream os;
            os << "ModelParams(n=" << p.n() << ", beta1=" << p.beta1()
               << ", beta2=" << p.beta2() << ")";
            return os.str();
        });

    m.def("hamiltonian", &hamiltonian);
    m.def("conditional_edge_prob", &conditional_edge_prob);
    m.def(
        "log_f_n",
        [](const ModelParams& p, const std::vector<double>& phi) {
            return log_f_n(p, AuxiliaryState{phi});
        },
        py::arg("params"), py::arg("phi"));

    py::enum_<PhaseDomain>(m, "PhaseDomain")
        .value("Theta11", PhaseDomain::Theta11)
        .value("Theta12", PhaseDomain::Theta12)
        .value("Theta13", PhaseDomain::Theta13)
        .value("Theta2", PhaseDomain::Theta2)
        .value("Theta3", PhaseDomain::Theta3);

    py::class_<PhaseReport>(m, "PhaseReport")
        .def_readonly("domain", &PhaseReport::domain)
        .def_readonly("fixed_points", &PhaseReport::fixed_points)
        .def_readonly("predicted_p", &PhaseReport::predicted_p)
        .def_readonly("is_critical", &PhaseReport::is_critical)
        .def("__repr__", [](const PhaseReport& r) {
            std::ostringstream os;
            os << "PhaseReport(domain=" << to_string(r.domain) << ")";
            return os.str();
        });

    m.def("q_eval", &q_eval);
    m.def("q_second_deriv", &q_second_deriv);
    m.def("pairwise_p", &pairwise_p);
    m.def("fixed_points", &fixed_points, py::arg("theta1"), py::arg("theta2"));
    m.def("classify", &classify, py::arg("theta1"), py::arg("theta2"));
    m.def(
        "mean_field_phi",
        [](const std::vector<std::pair<double, int>>& betas, double p) {
            return mean_field_phi(to_beta_terms(betas), p);
        },
        py::arg("betas"), py::arg("p"));
    m.def(
        "log_partition_limit",
        [](const std::vector<std::pair<double, int>>& betas) {
            const LogPartitionLimit r = log_partition_limit(to_beta_terms(betas));
            return std::make_pair(r.value, r.argmax_p);
        },
        py::arg("betas"));

    py::class_<DegreeSummary>(m, "DegreeSummary")
        .def_readonly("n", &DegreeSummary::n)
        .def_readonly("scaled_degrees", &DegreeSummary::scaled_degrees)
        .def_readonly("min", &DegreeSummary::min)
        .def_readonly("max", &DegreeSummary::max)
        .def_readonly("mean", &DegreeSummary::mean)
        .def_readonly("histogram", &DegreeSummary::histogram);

    m.def("summarize", &summarize, py::arg("graph"), py::arg("bins") = 50);
    m.def(
        "concentration_check",
        [](const DegreeSummary& s, const std::vector<double>& targets, double delta) {
            const ConcentrationResult r = concentration_check(s, targets, delta);
            return py::make_tuple(r.mode, r.max_dev, r.pass);
        },
        py::arg("summary"), py::arg("p_targets"), py::arg("delta"));

    py::class_<ModeStats>(m, "ModeStats")
        .def_readonly("chain_count", &ModeStats::chain_count)
        .def_readonly("chain_modes", &ModeStats::chain_modes)
        .def_readonly("fraction_upper", &ModeStats::fraction_upper)
        .def_readonly("max_deviation_within_mode", &ModeStats::max_deviation_within_mode);

    m.def(
        "mode_split",
        [](const std::vector<DegreeSummary>& chains, const PhaseReport& report, double delta) {
            return mode_split(chains, report, delta);
        },
        py::arg("chains"), py::arg("report"), py::arg("delta"));
    m.def("default_delta", &default_delta);

    py::class_<ChainConfig>(m, "ChainConfig")
        .def(py::init<>())
        .def_readwrite("seed", &ChainConfig::seed)
        .def_readwrite("burn_in", &ChainConfig::burn_in)
        .def_readwrite("n_sweeps", &ChainConfig::n_sweeps)
        .def_readwrite("record_every", &ChainConfig::record_every)
        .def_readwrite("histogram_bins", &ChainConfig::histogram_bins)
        .def_readwrite("record_snapshots", &ChainConfig::record_snapshots)
        .def_readwrite("degrees_only", &ChainConfig::degrees_only)
        .def("set_init_empty", [](ChainConfig& c) { c.init = InitSpec::empty(); })
        .def("set_init_complete", [](ChainConfig& c) { c.init = InitSpec::complete(); })
        .def("set_init_erdos_renyi",
             [](ChainConfig& c, double p) { c.init = InitSpec::erdos_renyi(p); })
        .def("set_init_given",
             [](ChainConfig& c, const AdjacencyState& g) { c.init = InitSpec::given(g); });

    py::class_<ChainOutput>(m, "ChainOutput")
        .def_readonly("samples", &ChainOutput::samples)
        .def_readonly("snapshots", &ChainOutput::snapshots)
        .def_readonly("final_state", &ChainOutput::final_state)
        .def_readonly("sweep_count", &ChainOutput::sweep_count)
        .def_readonly("wall_time_seconds", &ChainOutput::wall_time_seconds);

    m.def("run_gibbs", &run_gibbs, py::arg("params"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_glauber", &run_glauber, py::arg("params"), py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "run_chains",
        [](const ModelParams& p, const ChainConfig& base, const std::string& sampler,
           int chain_count, std::uint64_t master_seed, int chain_offset, int threads) {
            return run_chains(p, base, to_kind(sampler), chain_count, master_seed, chain_offset,
                              threads);
        },
        py::arg("params"), py::arg("config"), py::arg("sampler"), py::arg("chain_count"),
        py::arg("master_seed"), py::arg("chain_offset") = 0, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def("chain_seed", &chain_seed);

    py::class_<ExactDistribution>(m, "ExactDistribution")
        .def_readonly("n", &ExactDistribution::n)
        .def_readonly("log_z", &ExactDistribution::log_z)
        .def_readonly("probs", &ExactDistribution::probs)
        .def_readonly("degree_dist", &ExactDistribution::degree_dist);

    m.def("enumerate_exact", &enumerate_exact, py::arg("params"),
          py::arg("allow_expensive") = false);
    m.def("tv_distance", [](const std::vector<double>& a, const std::vector<double>& b) {
        return tv_distance(a, b);
    });
    m.def("tv_distance_deg",
          [](const std::map<std::vector<int>, double>& a,
             const std::map<std::vector<int>, double>& b) { return tv_distance(a, b); });
    m.def("exact_edge_probability",
          py::overload_cast<const ModelParams&>(&exact_edge_probability));
    m.def("graph_bitmask", &graph_bitmask);
    m.def("graph_from_bitmask", &graph_from_bitmask);
}
