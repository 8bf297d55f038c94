#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "twostar/analysis.hpp"
#include "twostar/model.hpp"
#include "twostar/oracle.hpp"
#include "twostar/sampler.hpp"

using namespace twostar;

namespace {

std::map<std::vector<int>, double> long_run_degree_dist(const ModelParams& params,
                                                        SamplerKind kind, std::uint64_t seed,
                                                        std::int64_t sweeps) {
    ChainConfig cfg;
    cfg.seed = seed;
    cfg.burn_in = 1000;
    cfg.n_sweeps = sweeps;
    std::map<std::vector<int>, std::int64_t> counts;
    std::int64_t total = 0;
    run_chain_visit(params, cfg, kind,
                    [&](std::int64_t, std::span<const int> degrees, const AdjacencyState*) {
                        std::vector<int> key(degrees.begin(), degrees.end());
                        std::sort(key.begin(), key.end());
                        ++counts[key];
                        ++total;
                    });
    std::map<std::vector<int>, double> dist;
    for (const auto& [key, c] : counts) {
        dist[key] = static_cast<double>(c) / static_cast<double>(total);
    }
    return dist;
}

}  // namespace

TEST_CASE("phi_update means and variance") {
    // Empty graph: every mean is -1; complete graph: +1. Monte Carlo check.
    const ModelParams p = ModelParams::from_thetas(100, 0.0, 0.25);
    std::mt19937_64 rng(11);
    const AdjacencyState empty(100);
    const AdjacencyState full = AdjacencyState::complete(100);
    double sum_empty = 0.0;
    double sum_full = 0.0;
    const int reps = 1000;
    for (int r = 0; r < reps; ++r) {
        for (double v : phi_update(p, empty, rng).phi) {
            sum_empty += v;
        }
        for (double v : phi_update(p, full, rng).phi) {
            sum_full += v;
        }
    }
    const double n_draws = 100.0 * reps;
    // sd of the mean = sd / sqrt(N) = 0.201/316 ~ 6.4e-4; allow 4 of those.
    CHECK(std::fabs(sum_empty / n_draws + 1.0) < 2.6e-3);
    CHECK(std::fabs(sum_full / n_draws - 1.0) < 2.6e-3);

    // Auxiliary variance at n=1000, theta2=0.25: sd = 1/sqrt(999*0.25).
    const ModelParams big = ModelParams::from_thetas(1000, 0.0, 0.25);
    AdjacencyState g(1000);
    std::mt19937_64 rng2(12);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        for (int j = i + 1; j < 1000; ++j) {
            if (unif(rng2) < 0.3) {
                g.set_edge(i, j, true);
            }
        }
    }
    double ss = 0.0;
    std::int64_t count = 0;
    for (int r = 0; r < 100; ++r) {
        const AuxiliaryState phi = phi_update(big, g, rng2);
        for (int i = 0; i < 1000; ++i) {
            const double centered =
                phi.phi[static_cast<std::size_t>(i)] -
                static_cast<double>(g.spin_degree(i)) / 999.0;
            ss += centered * centered;
            ++count;
        }
    }
    const double sd = std::sqrt(ss / static_cast<double>(count));
    CHECK(std::fabs(sd - 0.063277) / 0.063277 < 0.01);

    CHECK_THROWS_AS(phi_update(p, AdjacencyState(5), rng), std::invalid_argument);
}

TEST_CASE("edge_update saturates for extreme phi") {
    const ModelParams p = ModelParams::from_thetas(12, 0.0, 0.25);
    std::mt19937_64 rng(13);
    const AuxiliaryState high{std::vector<double>(12, 60.0)};
    CHECK(edge_update(p, high, rng).edge_count() == pair_count(12));
    const AuxiliaryState low{std::vector<double>(12, -60.0)};
    CHECK(edge_update(p, low, rng).edge_count() == 0);
}

TEST_CASE("edge_update fair-coin mean edge count") {
    const ModelParams p = ModelParams::from_thetas(20, 0.0, 0.25);
    const AuxiliaryState zero{std::vector<double>(20, 0.0)};
    std::mt19937_64 rng(14);
    double total = 0.0;
    const int reps = 10000;
    for (int r = 0; r < reps; ++r) {
        total += static_cast<double>(edge_update(p, zero, rng).edge_count());
    }
    // Binomial(190, 1/2): mean 95, sd 6.892; SE of the mean = 0.0689.
    CHECK(std::fabs(total / reps - 95.0) < 3 * 0.0689);
}

TEST_CASE("edge_update degrees equal row sums and match the degrees-only variant") {
    const ModelParams p = ModelParams::from_thetas(30, 0.1, 0.3);
    std::mt19937_64 rng(15);
    std::normal_distribution<double> normal(0.0, 0.5);
    AuxiliaryState phi{std::vector<double>(30)};
    for (double& v : phi.phi) {
        v = normal(rng);
    }
    std::mt19937_64 rng_a(21);
    std::mt19937_64 rng_b(21);
    const AdjacencyState g = edge_update(p, phi, rng_a);
    std::vector<int> degrees;
    edge_update_degrees(p, phi, rng_b, degrees);
    for (int i = 0; i < 30; ++i) {
        int row_sum = 0;
        for (int j = 0; j < 30; ++j) {
            if (j != i && g.has_edge(i, j)) {
                ++row_sum;
            }
        }
        CHECK(g.degree(i) == row_sum);
        CHECK(degrees[static_cast<std::size_t>(i)] == row_sum);
    }
}

TEST_CASE("run_gibbs is deterministic and the degrees-only path is identical") {
    const ModelParams p = ModelParams::from_thetas(25, 0.1, 0.4);
    ChainConfig cfg;
    cfg.seed = 2024;
    cfg.burn_in = 20;
    cfg.n_sweeps = 30;
    cfg.record_every = 3;

    const ChainOutput a = run_gibbs(p, cfg);
    const ChainOutput b = run_gibbs(p, cfg);
    REQUIRE(a.samples.size() == 10);
    CHECK(a.final_state == b.final_state);
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        CHECK(a.samples[k].scaled_degrees == b.samples[k].scaled_degrees);
        CHECK(a.samples[k].histogram == b.samples[k].histogram);
    }

    ChainConfig fast = cfg;
    fast.degrees_only = true;
    const ChainOutput c = run_gibbs(p, fast);
    CHECK(c.final_state == a.final_state);
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        CHECK(c.samples[k].scaled_degrees == a.samples[k].scaled_degrees);
    }
    CHECK(a.sweep_count == 50);
}

TEST_CASE("run_glauber determinism and config validation") {
    const ModelParams p(6, -0.2, 0.4);
    ChainConfig cfg;
    cfg.seed = 31337;
    cfg.burn_in = 10;
    cfg.n_sweeps = 25;
    const ChainOutput a = run_glauber(p, cfg);
    const ChainOutput b = run_glauber(p, cfg);
    CHECK(a.final_state == b.final_state);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        CHECK(a.samples[k].scaled_degrees == b.samples[k].scaled_degrees);
    }

    ChainConfig bad = cfg;
    bad.n_sweeps = 0;
    CHECK_THROWS_AS(run_glauber(p, bad), std::invalid_argument);
    bad = cfg;
    bad.record_every = 0;
    CHECK_THROWS_AS(run_glauber(p, bad), std::invalid_argument);
    bad = cfg;
    bad.burn_in = -1;
    CHECK_THROWS_AS(run_glauber(p, bad), std::invalid_argument);

    // The Gibbs sampler rejects theta2 <= 0; Glauber accepts it.
    const ModelParams er = ModelParams::unchecked(6, 0.0, 0.0);
    CHECK_THROWS_AS(run_gibbs(er, cfg), std::invalid_argument);
    CHECK_NOTHROW(run_glauber(er, cfg));
}

TEST_CASE("glauber at beta2 = 0 reduces to Erdos-Renyi(sigmoid(beta1))") {
    const ModelParams er = ModelParams::unchecked(10, 0.0, 0.0);
    ChainConfig cfg;
    cfg.seed = 5150;
    cfg.burn_in = 200;
    cfg.n_sweeps = 4000;
    double mean_fraction = 0.0;
    const ChainOutput out = run_glauber(er, cfg);
    for (const DegreeSummary& s : out.samples) {
        mean_fraction += s.mean;
    }
    mean_fraction /= static_cast<double>(out.samples.size());
    CHECK(std::fabs(mean_fraction - 0.5) < 0.01);
}

TEST_CASE("initial states") {
    const ModelParams p = ModelParams::from_thetas(8, 0.0, 0.25);
    ChainConfig cfg;
    cfg.seed = 1;
    cfg.burn_in = 0;
    cfg.n_sweeps = 1;

    cfg.init = InitSpec::empty();
    CHECK_NOTHROW(run_gibbs(p, cfg));
    cfg.init = InitSpec::complete();
    CHECK_NOTHROW(run_gibbs(p, cfg));
    cfg.init = InitSpec::erdos_renyi(0.3);
    CHECK_NOTHROW(run_gibbs(p, cfg));
    cfg.init = InitSpec::erdos_renyi(1.5);
    CHECK_THROWS_AS(run_gibbs(p, cfg), std::invalid_argument);
    cfg.init = InitSpec::given(AdjacencyState::complete(8));
    CHECK_NOTHROW(run_gibbs(p, cfg));
    cfg.init = InitSpec::given(AdjacencyState(5));
    CHECK_THROWS_AS(run_gibbs(p, cfg), std::invalid_argument);
    cfg.init = {InitKind::Given, 0.0, std::nullopt};
    CHECK_THROWS_AS(run_gibbs(p, cfg), std::invalid_argument);
}

TEST_CASE("chain seed splitting matches independent runs") {
    const ModelParams p = ModelParams::from_thetas(12, 0.0, 0.3);
    ChainConfig base;
    base.burn_in = 5;
    base.n_sweeps = 8;

    const std::vector<ChainOutput> pair = run_chains(p, base, SamplerKind::Gibbs, 2, 7);
    ChainConfig single = base;
    single.seed = chain_seed(7, 0);
    const ChainOutput first = run_gibbs(p, single);
    single.seed = chain_seed(7, 1);
    const ChainOutput second = run_gibbs(p, single);

    CHECK(pair[0].final_state == first.final_state);
    CHECK(pair[1].final_state == second.final_state);
    CHECK(pair[0].samples.back().scaled_degrees == first.samples.back().scaled_degrees);
    CHECK(pair[1].samples.back().scaled_degrees == second.samples.back().scaled_degrees);

    // Threaded execution returns the same outputs in the same order.
    const std::vector<ChainOutput> threaded =
        run_chains(p, base, SamplerKind::Gibbs, 4, 7, 0, 4);
    const std::vector<ChainOutput> serial = run_chains(p, base, SamplerKind::Gibbs, 4, 7, 0, 1);
    for (int k = 0; k < 4; ++k) {
        CHECK(threaded[static_cast<std::size_t>(k)].final_state ==
              serial[static_cast<std::size_t>(k)].final_state);
    }

    // Offsetting reproduces the tail of a larger run.
    const std::vector<ChainOutput> offset =
        run_chains(p, base, SamplerKind::Gibbs, 1, 7, 1);
    CHECK(offset[0].final_state == second.final_state);
}

TEST_CASE("gibbs matches the exact oracle at n=4 (quick TV check)") {
    const ModelParams params(4, -0.2, 0.4);
    const ExactDistribution exact = enumerate_exact(params);
    const auto empirical =
        long_run_degree_dist(params, SamplerKind::Gibbs, 424242, 100000);
    CHECK(tv_distance(empirical, exact.degree_dist) < 0.05);
}

TEST_CASE("gibbs and glauber long-run distributions agree across domains") {
    // One point in each of Theta11, Theta12, Theta2 (theta scale).
    const std::vector<std::pair<double, double>> points{
        {0.0, 0.25}, {0.25, 0.25}, {0.0, 0.55}};
    for (const auto& [theta1, theta2] : points) {
        const ModelParams params = ModelParams::from_thetas(4, theta1, theta2);
        const auto gibbs =
            long_run_degree_dist(params, SamplerKind::Gibbs, 1001, 150000);
        const auto glauber =
            long_run_degree_dist(params, SamplerKind::Glauber, 2002, 150000);
        CHECK(tv_distance(gibbs, glauber) < 0.03);
    }
}

TEST_CASE("recorded states stay inside the stochastic-ordering envelope at n=200") {
    const ModelParams params(200, -0.2, 0.4);
    const double a1 = 1.0 / (1.0 + std::exp(0.2));
    const double a2 = 1.0 / (1.0 + std::exp(-0.6));
    ChainConfig cfg;
    cfg.seed = 808;
    cfg.burn_in = 100;
    cfg.n_sweeps = 300;
    const ChainOutput out = run_gibbs(params, cfg);
    int violations = 0;
    for (const DegreeSummary& s : out.samples) {
        if (s.min < a1 - 0.1 || s.max > a2 + 0.1) {
            ++violations;
        }
    }
    CHECK(static_cast<double>(violations) / static_cast<double>(out.samples.size()) < 0.01);
}

TEST_CASE("one gibbs sweep at n=1000 stays under a second") {
    const ModelParams params = ModelParams::from_thetas(1000, 0.0, 0.25);
    ChainConfig cfg;
    cfg.seed = 3;
    cfg.burn_in = 0;
    cfg.n_sweeps = 5;
    cfg.degrees_only = true;
    const auto start = std::chrono::steady_clock::now();
    const ChainOutput out = run_gibbs(params, cfg);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(elapsed / 5.0 < 1.0);
    CHECK(out.samples.size() == 5);
}
