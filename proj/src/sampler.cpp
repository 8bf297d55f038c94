#include "twostar/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "twostar/numeric.hpp"

namespace twostar {

namespace {

AdjacencyState make_initial(int n, const InitSpec& init, std::mt19937_64& rng) {
    switch (init.kind) {
        case InitKind::Empty:
            return AdjacencyState(n);
        case InitKind::Complete:
            return AdjacencyState::complete(n);
        case InitKind::ErdosRenyi: {
            if (!(init.er_p >= 0.0) || !(init.er_p <= 1.0)) {
                throw std::invalid_argument("InitSpec: er_p must lie in [0,1]");
            }
            AdjacencyState g(n);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (unif(rng) < init.er_p) {
                        g.set_edge(i, j, true);
                    }
                }
            }
            return g;
        }
        case InitKind::Given: {
            if (!init.graph.has_value()) {
                throw std::invalid_argument("InitSpec: Given requires a graph");
            }
            if (init.graph->n() != n) {
                throw std::invalid_argument("InitSpec: initial graph has wrong vertex count");
            }
            return *init.graph;
        }
    }
    throw std::logic_error("InitSpec: unknown kind");
}

void check_config(const ChainConfig& cfg) {
    if (cfg.burn_in < 0) {
        throw std::invalid_argument("ChainConfig: burn_in must be >= 0");
    }
    if (cfg.n_sweeps < 1) {
        throw std::invalid_argument("ChainConfig: n_sweeps must be >= 1");
    }
    if (cfg.record_every < 1) {
        throw std::invalid_argument("ChainConfig: record_every must be >= 1");
    }
    if (cfg.histogram_bins < 1) {
        throw std::invalid_argument("ChainConfig: histogram_bins must be >= 1");
    }
}

void phi_update_from_degrees(const ModelParams& p, std::span<const int> degrees,
                             std::mt19937_64& rng, AuxiliaryState& out) {
    const double nm1 = static_cast<double>(p.n() - 1);
    const double sd = 1.0 / std::sqrt(nm1 * p.theta2());
    out.phi.resize(degrees.size());
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const double k = 2.0 * degrees[i] - nm1;  // spin degree
        out.phi[i] = k / nm1 + sd * normal(rng);
    }
}

// Shared edge-update loop: one uniform draw per pair, lexicographic order,
// so the materializing and degrees-only paths are draw-for-draw identical.
template <typename Sink>
void edge_update_loop(const ModelParams& p, const AuxiliaryState& phi, std::mt19937_64& rng,
                      Sink&& sink) {
    const int n = p.n();
    if (phi.phi.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("edge_update: phi has wrong length");
    }
    // sigmoid(b_i + b_j + c) with b_i = 2*theta2*phi_i precomputed.
    std::vector<double> b(phi.phi.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        b[i] = 2.0 * p.theta2() * phi.phi[i];
    }
    const double c = 2.0 * p.theta1();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const double bi = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const bool present = unif(rng) < sigmoid(bi + b[static_cast<std::size_t>(j)] + c);
            sink(i, j, present);
        }
    }
}

void glauber_sweep(const ModelParams& p, AdjacencyState& g, std::mt19937_64& rng,
                   std::span<const std::int64_t> row_offsets) {
    const int n = p.n();
    const double nm1 = static_cast<double>(n - 1);
    const double base = p.beta1() + p.beta2() / nm1;
    const std::int64_t pairs = pair_count(n);
    std::uniform_int_distribution<std::int64_t> pick(0, pairs - 1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::int64_t step = 0; step < pairs; ++step) {
        const std::int64_t r = pick(rng);
        const auto row = std::upper_bound(row_offsets.begin(), row_offsets.end(), r) -
                         row_offsets.begin() - 1;
        const int i = static_cast<int>(row);
        const int j = i + 1 + static_cast<int>(r - row_offsets[static_cast<std::size_t>(row)]);
        const int x = g.has_edge(i, j) ? 1 : 0;
        // log P(x^{+e}) / P(x^{-e}) from the two-star neighbor count.
        const double log_odds =
            p.beta2() / nm1 * (g.degree(i) + g.degree(j) - 2 * x) + base;
        g.set_edge(i, j, unif(rng) < sigmoid(log_odds));
    }
}

}  // namespace

AuxiliaryState phi_update(const ModelParams& p, const AdjacencyState& g, std::mt19937_64& rng) {
    if (g.n() != p.n()) {
        throw std::invalid_argument("phi_update: dimension mismatch");
    }
    if (!(p.theta2() > 0.0)) {
        throw std::invalid_argument("phi_update: requires theta2 > 0");
    }
    AuxiliaryState out;
    phi_update_from_degrees(p, g.degrees(), rng, out);
    return out;
}

void edge_update_into(const ModelParams& p, const AuxiliaryState& phi, std::mt19937_64& rng,
                      AdjacencyState& out) {
    if (out.n() != p.n()) {
        throw std::invalid_argument("edge_update: output graph has wrong vertex count");
    }
    out.clear();
    edge_update_loop(p, phi, rng, [&out](int i, int j, bool present) {
        if (present) {
            out.set_edge(i, j, true);
        }
    });
}

AdjacencyState edge_update(const ModelParams& p, const AuxiliaryState& phi,
                           std::mt19937_64& rng) {
    AdjacencyState out(p.n());
    edge_update_into(p, phi, rng, out);
    return out;
}

void edge_update_degrees(const ModelParams& p, const AuxiliaryState& phi, std::mt19937_64& rng,
                         std::vector<int>& degrees) {
    degrees.assign(static_cast<std::size_t>(p.n()), 0);
    edge_update_loop(p, phi, rng, [&degrees](int i, int j, bool present) {
        if (present) {
            ++degrees[static_cast<std::size_t>(i)];
            ++degrees[static_cast<std::size_t>(j)];
        }
    });
}

namespace {

// Core chain driver; fills *final_state (if non-null) with the last graph.
// The final sweep always materializes the graph, including in degrees-only
// mode, which leaves the draw sequence unchanged.
void run_chain_impl(const ModelParams& p, const ChainConfig& cfg, SamplerKind kind,
                    const SweepVisitor& visitor, AdjacencyState* final_state) {
    check_config(cfg);
    if (kind == SamplerKind::Gibbs && !(p.theta2() > 0.0)) {
        throw std::invalid_argument("run_gibbs: requires theta2 > 0");
    }
    std::mt19937_64 rng(cfg.seed);
    AdjacencyState g = make_initial(p.n(), cfg.init, rng);

    const bool degrees_only =
        kind == SamplerKind::Gibbs && cfg.degrees_only && !cfg.record_snapshots;
    std::vector<int> degrees(g.degrees().begin(), g.degrees().end());
    AuxiliaryState phi;

    std::vector<std::int64_t> row_offsets;
    if (kind == SamplerKind::Glauber) {
        row_offsets.resize(static_cast<std::size_t>(p.n()));
        for (int i = 0; i < p.n(); ++i) {
            row_offsets[static_cast<std::size_t>(i)] = pair_index(p.n(), i, i + 1);
        }
    }

    const std::int64_t total = cfg.burn_in + cfg.n_sweeps;
    for (std::int64_t sweep = 1; sweep <= total; ++sweep) {
        bool graph_current = true;
        if (kind == SamplerKind::Gibbs) {
            phi_update_from_degrees(p, degrees, rng, phi);
            if (degrees_only && sweep < total) {
                edge_update_degrees(p, phi, rng, degrees);
                graph_current = false;
            } else {
                edge_update_into(p, phi, rng, g);
                degrees.assign(g.degrees().begin(), g.degrees().end());
            }
        } else {
            glauber_sweep(p, g, rng, row_offsets);
            degrees.assign(g.degrees().begin(), g.degrees().end());
        }
        const std::int64_t t = sweep - cfg.burn_in;
        if (visitor && t >= 1 && t % cfg.record_every == 0) {
            visitor(t, degrees, graph_current ? &g : nullptr);
        }
    }
    if (final_state != nullptr) {
        *final_state = std::move(g);
    }
}

}  // namespace

void run_chain_visit(const ModelParams& p, const ChainConfig& cfg, SamplerKind kind,
                     const SweepVisitor& visitor) {
    run_chain_impl(p, cfg, kind, visitor, nullptr);
}

ChainOutput run_chain(const ModelParams& p, const ChainConfig& cfg, SamplerKind kind) {
    const auto start = std::chrono::steady_clock::now();
    ChainOutput out;
    run_chain_impl(p, cfg, kind,
                   [&](std::int64_t, std::span<const int> degrees, const AdjacencyState* g) {
                       out.samples.push_back(summarize_degrees(degrees, cfg.histogram_bins));
                       if (cfg.record_snapshots && g != nullptr) {
                           out.snapshots.push_back(*g);
                       }
                   },
                   &out.final_state);
    out.sweep_count = cfg.burn_in + cfg.n_sweeps;
    out.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

ChainOutput run_gibbs(const ModelParams& p, const ChainConfig& cfg) {
    return run_chain(p, cfg, SamplerKind::Gibbs);
}

ChainOutput run_glauber(const ModelParams& p, const ChainConfig& cfg) {
    return run_chain(p, cfg, SamplerKind::Glauber);
}

std::uint64_t chain_seed(std::uint64_t master_seed, std::uint64_t chain_index) {
    return mix_seed(master_seed, chain_index);
}

std::vector<ChainOutput> run_chains(const ModelParams& p, const ChainConfig& base,
                                    SamplerKind kind, int chain_count,
                                    std::uint64_t master_seed, int chain_offset, int threads) {
    if (chain_count < 1) {
        throw std::invalid_argument("run_chains: chain_count must be >= 1");
    }
    std::vector<ChainOutput> outputs(static_cast<std::size_t>(chain_count));
    auto run_one = [&](int k) {
        ChainConfig cfg = base;
        cfg.seed = chain_seed(master_seed,
                              static_cast<std::uint64_t>(chain_offset) +
                                  static_cast<std::uint64_t>(k));
        outputs[static_cast<std::size_t>(k)] = run_chain(p, cfg, kind);
    };
    if (threads <= 1 || chain_count == 1) {
        for (int k = 0; k < chain_count; ++k) {
            run_one(k);
        }
        return outputs;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, chain_count);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int k = next.fetch_add(1); k < chain_count; k = next.fetch_add(1)) {
                run_one(k);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    return outputs;
}

}  // namespace twostar
