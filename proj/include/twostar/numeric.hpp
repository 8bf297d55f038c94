#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace twostar {

// log cosh(z) without overflow: log cosh z = |z| - log 2 + log(1 + e^{-2|z|}).
inline double log_cosh(double z) {
    const double a = std::fabs(z);
    return a - std::numbers::ln2 + std::log1p(std::exp(-2.0 * a));
}

// Logistic function 1/(1+e^{-a}), stable for arguments of any magnitude.
inline double sigmoid(double a) {
    if (a >= 0.0) {
        return 1.0 / (1.0 + std::exp(-a));
    }
    const double e = std::exp(a);
    return e / (1.0 + e);
}

// log(sum exp(x_i)) with the max factored out.
double log_sum_exp(std::span<const double> xs);

// Derives an independent, well-mixed 64-bit stream seed from a master seed
// and a stream index (splitmix64 finalizer applied twice).
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace twostar
