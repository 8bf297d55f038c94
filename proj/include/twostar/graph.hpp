#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace twostar {

/// Number of unordered vertex pairs {i,j}, i < j, on n vertices.
constexpr std::int64_t pair_count(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

/// Lexicographic rank of the pair (i,j), i < j: (0,1),(0,2),...,(0,n-1),(1,2),...
constexpr std::int64_t pair_index(int n, int i, int j) {
    return static_cast<std::int64_t>(i) * n - static_cast<std::int64_t>(i) * (i + 1) / 2 +
           (j - i - 1);
}

/// Exact spin-variable statistics T(y), E(y) for y_ij = 2x_ij - 1.
struct SpinStatistics {
    std::int64_t two_stars;  // T(y) = (sum_i k_i^2 - n(n-1)) / 2
    std::int64_t edges;      // E(y) = (sum_i k_i) / 2
};

/// Labeled simple graph on n >= 2 vertices, 0-based vertex indices.
///
/// Edges are bit-packed over the C(n,2) unordered pairs in lexicographic
/// order; the degree vector is maintained incrementally so the sufficient
/// statistics (edges, two-stars, spin degrees) cost O(n), not O(n^2).
class AdjacencyState {
  public:
    /// Empty graph on n vertices. Throws std::invalid_argument for n < 2.
    explicit AdjacencyState(int n);

    static AdjacencyState complete(int n);

    int n() const { return n_; }

    bool has_edge(int i, int j) const;
    void set_edge(int i, int j, bool present);
    /// Flips edge {i,j}; O(1) degree maintenance. Throws for i == j.
    void toggle_edge(int i, int j);

    int degree(int i) const;
    std::span<const int> degrees() const { return degrees_; }

    /// E(x) = number of edges (maintained count).
    std::int64_t edge_count() const { return edges_; }

    /// T(x) = number of two-stars = sum_i C(d_i, 2).
    std::int64_t two_star_count() const;

    /// Spin degree k_i = sum_{j != i} y_ij = 2 d_i - (n-1).
    int spin_degree(int i) const;

    /// T(y) and E(y) via the k_i identities; both are exact integers.
    SpinStatistics spin_statistics() const;

    /// Reset to the empty graph.
    void clear();

    bool operator==(const AdjacencyState& other) const;

    /// Edge-list text dump: header "n <count>", then one "i j" line per
    /// edge, 0-based, i < j, lexicographic order.
    void write_edge_list(std::ostream& os) const;
    static AdjacencyState read_edge_list(std::istream& is);

  private:
    void check_pair(int i, int j) const;

    int n_;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<int> degrees_;
};

}  // namespace twostar
