#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "twostar/graph.hpp"
#include "twostar/model.hpp"

namespace twostar {

/// Largest n enumerated without the expensive flag (2^15 graphs);
/// n = 7 (2^21 graphs) requires allow_expensive.
inline constexpr int kMaxExactN = 6;

/// Exact distribution over all 2^C(n,2) labeled graphs.
struct ExactDistribution {
    int n = 0;
    double log_z = 0.0;
    // Indexed by edge bitmask: bit pair_index(n,i,j) set iff edge {i,j}
    // present. This bitmask order is the canonical serialization.
    std::vector<double> probs;
    // Marginal over sorted degree sequences.
    std::map<std::vector<int>, double> degree_dist;
};

/// Brute-force enumeration with log-sum-exp accumulation.
/// Throws for n outside [2, 6] ([2, 7] with allow_expensive).
ExactDistribution enumerate_exact(const ModelParams& p, bool allow_expensive = false);

/// Total variation distance (1/2) sum |a_i - b_i|; throws on length mismatch.
double tv_distance(std::span<const double> a, std::span<const double> b);

/// Same over keyed distributions; a key absent from one side carries mass 0
/// (the index space is the key universe shared by both).
double tv_distance(const std::map<std::vector<int>, double>& a,
                   const std::map<std::vector<int>, double>& b);

/// Exact marginal P(x_01 = 1); by exchangeability every edge has this value.
double exact_edge_probability(const ModelParams& p);
double exact_edge_probability(const ExactDistribution& dist);

std::uint64_t graph_bitmask(const AdjacencyState& g);
AdjacencyState graph_from_bitmask(int n, std::uint64_t mask);

}  // namespace twostar
