#include "twostar/numeric.hpp"

#include <algorithm>

namespace twostar {

double log_sum_exp(std::span<const double> xs) {
    if (xs.empty()) {
        return -std::numeric_limits<double>::infinity();
    }
    const double m = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(m)) {
        return m;
    }
    double acc = 0.0;
    for (double x : xs) {
        acc += std::exp(x - m);
    }
    return m + std::log(acc);
}

namespace {

std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    return splitmix64_finalize(splitmix64_finalize(z));
}

}  // namespace twostar
