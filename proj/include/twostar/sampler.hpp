#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "twostar/analysis.hpp"
#include "twostar/graph.hpp"
#include "twostar/model.hpp"

namespace twostar {

enum class SamplerKind { Gibbs, Glauber };

enum class InitKind { Empty, Complete, ErdosRenyi, Given };

/// Initial graph of a chain. Default: Erdos-Renyi(1/2), which is unbiased
/// between the two modes of the non-uniqueness domain.
struct InitSpec {
    InitKind kind = InitKind::ErdosRenyi;
    double er_p = 0.5;
    std::optional<AdjacencyState> graph;  // required iff kind == Given

    static InitSpec empty() { return {InitKind::Empty, 0.0, std::nullopt}; }
    static InitSpec complete() { return {InitKind::Complete, 0.0, std::nullopt}; }
    static InitSpec erdos_renyi(double p) { return {InitKind::ErdosRenyi, p, std::nullopt}; }
    static InitSpec given(AdjacencyState g) {
        return {InitKind::Given, 0.0, std::move(g)};
    }
};

struct ChainConfig {
    std::uint64_t seed = 0;
    std::int64_t burn_in = 500;
    std::int64_t n_sweeps = 1;
    InitSpec init{};
    std::int64_t record_every = 1;  // thinning interval >= 1
    int histogram_bins = 50;
    bool record_snapshots = false;  // keep full AdjacencyState per recorded sweep
    // Gibbs only: skip adjacency writes between sweeps and track degrees
    // alone (O(n) state); the final sweep always materializes the graph.
    // Draw-for-draw identical to the materializing path.
    bool degrees_only = false;
};

struct ChainOutput {
    std::vector<DegreeSummary> samples;
    std::vector<AdjacencyState> snapshots;  // nonempty only if record_snapshots
    AdjacencyState final_state{2};
    std::int64_t sweep_count = 0;  // burn_in + n_sweeps
    double wall_time_seconds = 0.0;
};

/// phi_i ~ N(k_i/(n-1), 1/((n-1) theta2)), mutually independent.
AuxiliaryState phi_update(const ModelParams& p, const AdjacencyState& g, std::mt19937_64& rng);

/// Fresh graph with the C(n,2) edges drawn as independent Bernoullis with
/// success probability conditional_edge_prob(p, phi_i, phi_j), pairs in
/// lexicographic order.
AdjacencyState edge_update(const ModelParams& p, const AuxiliaryState& phi,
                           std::mt19937_64& rng);
void edge_update_into(const ModelParams& p, const AuxiliaryState& phi, std::mt19937_64& rng,
                      AdjacencyState& out);

/// Degrees-only variant of edge_update: same draws in the same order, but
/// only the degree vector is produced.
void edge_update_degrees(const ModelParams& p, const AuxiliaryState& phi, std::mt19937_64& rng,
                         std::vector<int>& degrees);

/// Auxiliary-variable Gibbs sampler: alternates phi_update / edge_update for
/// burn_in + n_sweeps sweeps and records every record_every-th post-burn-in
/// state. Deterministic given cfg.seed. Throws if theta2 <= 0.
ChainOutput run_gibbs(const ModelParams& p, const ChainConfig& cfg);

/// Single-edge heat-bath baseline. One sweep = C(n,2) updates at uniformly
/// random pairs; update log-odds
///   beta2/(n-1) * (d_i + d_j - 2 x_ij) + beta1 + beta2/(n-1).
/// Accepts unchecked parameters (any beta2). Same output contract as
/// run_gibbs.
ChainOutput run_glauber(const ModelParams& p, const ChainConfig& cfg);

ChainOutput run_chain(const ModelParams& p, const ChainConfig& cfg, SamplerKind kind);

/// Streaming interface: visitor(post_burn_in_sweep, degrees, graph) for each
/// recorded sweep; graph is null on degrees-only sweeps.
using SweepVisitor =
    std::function<void(std::int64_t, std::span<const int>, const AdjacencyState*)>;
void run_chain_visit(const ModelParams& p, const ChainConfig& cfg, SamplerKind kind,
                     const SweepVisitor& visitor);

/// Per-chain stream seed derived from (master seed, chain index).
std::uint64_t chain_seed(std::uint64_t master_seed, std::uint64_t chain_index);

/// Runs chain_count independent chains with seeds chain_seed(master_seed,
/// chain_offset + k). Chains share no mutable state; threads > 1 runs them
/// concurrently. Output order is by chain index either way.
std::vector<ChainOutput> run_chains(const ModelParams& p, const ChainConfig& base,
                                    SamplerKind kind, int chain_count,
                                    std::uint64_t master_seed, int chain_offset = 0,
                                    int threads = 1);

}  // namespace twostar
