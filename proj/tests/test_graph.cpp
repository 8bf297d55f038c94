#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <random>
#include <sstream>

#include "twostar/graph.hpp"

using namespace twostar;

namespace {

AdjacencyState path3() {
    AdjacencyState g(3);
    g.set_edge(0, 1, true);
    g.set_edge(1, 2, true);
    return g;
}

// Literal triple sum T(x) = sum_i sum_{j<l, j,l != i} x_ij x_il.
std::int64_t brute_two_stars(const AdjacencyState& g) {
    std::int64_t total = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int l = j + 1; l < g.n(); ++l) {
                if (j == i || l == i) {
                    continue;
                }
                if (g.has_edge(i, j) && g.has_edge(i, l)) {
                    ++total;
                }
            }
        }
    }
    return total;
}

int spin(const AdjacencyState& g, int i, int j) {
    return g.has_edge(i, j) ? 1 : -1;
}

// T(y) and E(y) summed directly over the spin matrix y = 2x - 1.
std::pair<std::int64_t, std::int64_t> brute_spin_stats(const AdjacencyState& g) {
    std::int64_t t = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            for (int l = j + 1; l < g.n(); ++l) {
                if (j == i || l == i) {
                    continue;
                }
                t += spin(g, i, j) * spin(g, i, l);
            }
        }
    }
    std::int64_t e = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            e += spin(g, i, j);
        }
    }
    return {t, e};
}

AdjacencyState random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    AdjacencyState g(n);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (unif(rng) < p) {
                g.set_edge(i, j, true);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("edge_count on simple shapes") {
    CHECK(AdjacencyState(5).edge_count() == 0);
    CHECK(AdjacencyState::complete(4).edge_count() == 6);
    CHECK(path3().edge_count() == 2);
}

TEST_CASE("two_star_count on simple shapes") {
    CHECK(path3().two_star_count() == 1);
    CHECK(AdjacencyState::complete(3).two_star_count() == 3);

    // Star K_{1,3}: center 0, leaves 1..3; brute-force triple loop agrees.
    AdjacencyState star(4);
    star.set_edge(0, 1, true);
    star.set_edge(0, 2, true);
    star.set_edge(0, 3, true);
    CHECK(star.two_star_count() == 3);
    CHECK(brute_two_stars(star) == 3);
}

TEST_CASE("spin_degree") {
    const AdjacencyState empty5(5);
    for (int i = 0; i < 5; ++i) {
        CHECK(empty5.spin_degree(i) == -4);
    }
    const AdjacencyState k5 = AdjacencyState::complete(5);
    for (int i = 0; i < 5; ++i) {
        CHECK(k5.spin_degree(i) == 4);
    }
    CHECK(path3().spin_degree(1) == 2);
    CHECK_THROWS_AS(path3().spin_degree(3), std::out_of_range);
    CHECK_THROWS_AS(path3().spin_degree(-1), std::out_of_range);
}

TEST_CASE("spin_statistics on symmetric shapes") {
    const SpinStatistics empty = AdjacencyState(3).spin_statistics();
    CHECK(empty.two_stars == 3);
    CHECK(empty.edges == -3);
    const SpinStatistics full = AdjacencyState::complete(3).spin_statistics();
    CHECK(full.two_stars == 3);
    CHECK(full.edges == 3);
}

TEST_CASE("spin_statistics matches the brute-force spin sums") {
    std::mt19937_64 rng(12345);
    for (int rep = 0; rep < 20; ++rep) {
        const AdjacencyState g = random_graph(8, rng);
        const SpinStatistics s = g.spin_statistics();
        const auto [t, e] = brute_spin_stats(g);
        CHECK(s.two_stars == t);
        CHECK(s.edges == e);
    }
}

TEST_CASE("spin identity holds exactly for every graph with n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const std::int64_t pairs = pair_count(n);
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            AdjacencyState g(n);
            std::int64_t idx = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j, ++idx) {
                    if ((mask >> idx) & 1ULL) {
                        g.set_edge(i, j, true);
                    }
                }
            }
            const SpinStatistics s = g.spin_statistics();
            const auto [t, e] = brute_spin_stats(g);
            REQUIRE(s.two_stars == t);
            REQUIRE(s.edges == e);
        }
    }
}

TEST_CASE("two-star degree formula equals the triple sum on random graphs") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> pick_n(2, 10);
    std::uniform_real_distribution<double> pick_p(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = pick_n(rng);
        const AdjacencyState g = random_graph(n, rng, pick_p(rng));
        REQUIRE(g.two_star_count() == brute_two_stars(g));
    }
}

TEST_CASE("toggle_edge") {
    AdjacencyState g(3);
    g.toggle_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(2) == 0);

    g.toggle_edge(0, 1);
    CHECK(g == AdjacencyState(3));

    AdjacencyState a(3);
    AdjacencyState b(3);
    a.toggle_edge(1, 2);
    b.toggle_edge(2, 1);
    CHECK(a == b);

    CHECK_THROWS_AS(g.toggle_edge(1, 1), std::invalid_argument);
}

TEST_CASE("degree sum stays consistent over a long toggle walk") {
    std::mt19937_64 rng(99);
    const int n = 12;
    AdjacencyState g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < 10000; ++step) {
        int i = pick(rng);
        int j = pick(rng);
        if (i == j) {
            continue;
        }
        g.toggle_edge(i, j);
        std::int64_t degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            degree_sum += g.degree(v);
        }
        REQUIRE(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("edge list round trip") {
    std::mt19937_64 rng(4242);
    const AdjacencyState g = random_graph(9, rng, 0.4);
    std::stringstream ss;
    g.write_edge_list(ss);
    const AdjacencyState h = AdjacencyState::read_edge_list(ss);
    CHECK(g == h);

    std::stringstream bad("3 1\n0");
    CHECK_THROWS_AS(AdjacencyState::read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("constructor rejects n < 2") {
    CHECK_THROWS_AS(AdjacencyState(1), std::invalid_argument);
}
