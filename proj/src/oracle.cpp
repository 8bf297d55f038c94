#include "twostar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twostar/numeric.hpp"

namespace twostar {

namespace {

struct PairTable {
    std::vector<int> first;
    std::vector<int> second;
};

PairTable make_pair_table(int n) {
    PairTable t;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            t.first.push_back(i);
            t.second.push_back(j);
        }
    }
    return t;
}

}  // namespace

ExactDistribution enumerate_exact(const ModelParams& p, bool allow_expensive) {
    const int n = p.n();
    const int cap = allow_expensive ? kMaxExactN + 1 : kMaxExactN;
    if (n > cap) {
        throw std::invalid_argument("enumerate_exact: n=" + std::to_string(n) +
                                    " exceeds the brute-force cap of " + std::to_string(cap));
    }
    const PairTable pairs = make_pair_table(n);
    const std::size_t states = 1ULL << pair_count(n);
    const double nm1 = static_cast<double>(n - 1);
    const double two_star_coef = p.beta2() / nm1;
    const double edge_coef = p.beta1() + p.beta2() / nm1;

    ExactDistribution dist;
    dist.n = n;
    dist.probs.resize(states);

    std::vector<int> degrees(static_cast<std::size_t>(n));
    for (std::size_t mask = 0; mask < states; ++mask) {
        std::fill(degrees.begin(), degrees.end(), 0);
        std::uint64_t bits = mask;
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            ++degrees[static_cast<std::size_t>(pairs.first[static_cast<std::size_t>(b)])];
            ++degrees[static_cast<std::size_t>(pairs.second[static_cast<std::size_t>(b)])];
        }
        std::int64_t two_stars = 0;
        for (int d : degrees) {
            two_stars += static_cast<std::int64_t>(d) * (d - 1) / 2;
        }
        const int edges = std::popcount(static_cast<std::uint64_t>(mask));
        dist.probs[mask] = two_star_coef * static_cast<double>(two_stars) +
                           edge_coef * static_cast<double>(edges);
    }

    dist.log_z = log_sum_exp(dist.probs);
    for (std::size_t mask = 0; mask < states; ++mask) {
        dist.probs[mask] = std::exp(dist.probs[mask] - dist.log_z);
    }

    std::vector<int> sorted_degrees(static_cast<std::size_t>(n));
    for (std::size_t mask = 0; mask < states; ++mask) {
        std::fill(degrees.begin(), degrees.end(), 0);
        std::uint64_t bits = mask;
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            ++degrees[static_cast<std::size_t>(pairs.first[static_cast<std::size_t>(b)])];
            ++degrees[static_cast<std::size_t>(pairs.second[static_cast<std::size_t>(b)])];
        }
        sorted_degrees = degrees;
        std::sort(sorted_degrees.begin(), sorted_degrees.end());
        dist.degree_dist[sorted_degrees] += dist.probs[mask];
    }
    return dist;
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("tv_distance: mismatched supports (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::fabs(a[i] - b[i]);
    }
    return 0.5 * total;
}

double tv_distance(const std::map<std::vector<int>, double>& a,
                   const std::map<std::vector<int>, double>& b) {
    double total = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            total += std::fabs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            total += std::fabs(ib->second);
            ++ib;
        } else {
            total += std::fabs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * total;
}

double exact_edge_probability(const ExactDistribution& dist) {
    // By exchangeability P(x_ij = 1) is the same for every pair; bit 0 is
    // the pair (0,1).
    double total = 0.0;
    for (std::size_t mask = 0; mask < dist.probs.size(); ++mask) {
        if (mask & 1ULL) {
            total += dist.probs[mask];
        }
    }
    return total;
}

double exact_edge_probability(const ModelParams& p) {
    return exact_edge_probability(enumerate_exact(p));
}

std::uint64_t graph_bitmask(const AdjacencyState& g) {
    if (pair_count(g.n()) > 63) {
        throw std::invalid_argument("graph_bitmask: graph too large for a 64-bit mask");
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (g.has_edge(i, j)) {
                mask |= 1ULL << pair_index(g.n(), i, j);
            }
        }
    }
    return mask;
}

AdjacencyState graph_from_bitmask(int n, std::uint64_t mask) {
    if (pair_count(n) > 63) {
        throw std::invalid_argument("graph_from_bitmask: n too large for a 64-bit mask");
    }
    if (pair_count(n) < 63 && (mask >> pair_count(n)) != 0) {
        throw std::invalid_argument("graph_from_bitmask: mask has bits beyond C(n,2)");
    }
    AdjacencyState g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((mask >> pair_index(n, i, j)) & 1ULL) {
                g.set_edge(i, j, true);
            }
        }
    }
    return g;
}

}  // namespace twostar
