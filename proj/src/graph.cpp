#include "twostar/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace twostar {

AdjacencyState::AdjacencyState(int n) : n_(n) {
    if (n < 2) {
        throw std::invalid_argument("AdjacencyState: need n >= 2, got " + std::to_string(n));
    }
    words_.assign(static_cast<std::size_t>((pair_count(n) + 63) / 64), 0);
    degrees_.assign(static_cast<std::size_t>(n), 0);
}

AdjacencyState AdjacencyState::complete(int n) {
    AdjacencyState g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.set_edge(i, j, true);
        }
    }
    return g;
}

void AdjacencyState::check_pair(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw std::out_of_range("AdjacencyState: vertex index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("AdjacencyState: self-loops are not allowed");
    }
}

bool AdjacencyState::has_edge(int i, int j) const {
    check_pair(i, j);
    if (i > j) {
        std::swap(i, j);
    }
    const std::int64_t idx = pair_index(n_, i, j);
    return (words_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1ULL;
}

void AdjacencyState::set_edge(int i, int j, bool present) {
    check_pair(i, j);
    if (i > j) {
        std::swap(i, j);
    }
    const std::int64_t idx = pair_index(n_, i, j);
    const std::size_t w = static_cast<std::size_t>(idx >> 6);
    const std::uint64_t bit = 1ULL << (idx & 63);
    const bool current = words_[w] & bit;
    if (current == present) {
        return;
    }
    words_[w] ^= bit;
    const int delta = present ? 1 : -1;
    degrees_[static_cast<std::size_t>(i)] += delta;
    degrees_[static_cast<std::size_t>(j)] += delta;
    edges_ += delta;
}

void AdjacencyState::toggle_edge(int i, int j) {
    check_pair(i, j);
    set_edge(i, j, !has_edge(i, j));
}

int AdjacencyState::degree(int i) const {
    if (i < 0 || i >= n_) {
        throw std::out_of_range("AdjacencyState: vertex index out of range");
    }
    return degrees_[static_cast<std::size_t>(i)];
}

std::int64_t AdjacencyState::two_star_count() const {
    std::int64_t total = 0;
    for (int d : degrees_) {
        total += static_cast<std::int64_t>(d) * (d - 1) / 2;
    }
    return total;
}

int AdjacencyState::spin_degree(int i) const {
    return 2 * degree(i) - (n_ - 1);
}

SpinStatistics AdjacencyState::spin_statistics() const {
    std::int64_t sum_k = 0;
    std::int64_t sum_k2 = 0;
    for (int d : degrees_) {
        const std::int64_t k = 2 * static_cast<std::int64_t>(d) - (n_ - 1);
        sum_k += k;
        sum_k2 += k * k;
    }
    // Both numerators are even for every graph.
    return {(sum_k2 - static_cast<std::int64_t>(n_) * (n_ - 1)) / 2, sum_k / 2};
}

void AdjacencyState::clear() {
    std::fill(words_.begin(), words_.end(), 0);
    std::fill(degrees_.begin(), degrees_.end(), 0);
    edges_ = 0;
}

bool AdjacencyState::operator==(const AdjacencyState& other) const {
    return n_ == other.n_ && words_ == other.words_;
}

void AdjacencyState::write_edge_list(std::ostream& os) const {
    os << n_ << ' ' << edges_ << '\n';
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (has_edge(i, j)) {
                os << i << ' ' << j << '\n';
            }
        }
    }
}

AdjacencyState AdjacencyState::read_edge_list(std::istream& is) {
    int n = 0;
    std::int64_t count = 0;
    if (!(is >> n >> count)) {
        throw std::invalid_argument("edge list: missing 'n count' header");
    }
    AdjacencyState g(n);
    for (std::int64_t e = 0; e < count; ++e) {
        int i = 0;
        int j = 0;
        if (!(is >> i >> j)) {
            throw std::invalid_argument("edge list: truncated after " + std::to_string(e) +
                                        " edges");
        }
        if (g.has_edge(i, j)) {
            throw std::invalid_argument("edge list: duplicate edge");
        }
        g.set_edge(i, j, true);
    }
    return g;
}

}  // namespace twostar
