#include "twostar/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twostar/numeric.hpp"

namespace twostar {

ModelParams::ModelParams(int n, double beta1, double beta2, bool checked)
    : n_(n), beta1_(beta1), beta2_(beta2) {
    if (n < 2) {
        throw std::invalid_argument("ModelParams: need n >= 2, got " + std::to_string(n));
    }
    if (!std::isfinite(beta1) || !std::isfinite(beta2)) {
        throw std::invalid_argument("ModelParams: parameters must be finite");
    }
    if (checked && !(beta2 > 0.0)) {
        throw std::invalid_argument("ModelParams: beta2 must be > 0 (use unchecked() for the "
                                    "oracle/Glauber cross-checks)");
    }
    theta1_ = (beta1_ + beta2_) / 2.0;
    theta2_ = beta2_ / 4.0;
}

ModelParams::ModelParams(int n, double beta1, double beta2)
    : ModelParams(n, beta1, beta2, true) {}

ModelParams ModelParams::from_thetas(int n, double theta1, double theta2) {
    if (!(theta2 > 0.0)) {
        throw std::invalid_argument("ModelParams: theta2 must be > 0");
    }
    return ModelParams(n, 2.0 * theta1 - 4.0 * theta2, 4.0 * theta2);
}

ModelParams ModelParams::unchecked(int n, double beta1, double beta2) {
    return ModelParams(n, beta1, beta2, false);
}

double hamiltonian(const ModelParams& p, const AdjacencyState& g) {
    if (g.n() != p.n()) {
        throw std::invalid_argument("hamiltonian: graph has n=" + std::to_string(g.n()) +
                                    ", params have n=" + std::to_string(p.n()));
    }
    const double nm1 = static_cast<double>(p.n() - 1);
    return p.beta2() / nm1 * static_cast<double>(g.two_star_count()) +
           (p.beta1() + p.beta2() / nm1) * static_cast<double>(g.edge_count());
}

double conditional_edge_prob(const ModelParams& p, double phi_i, double phi_j) {
    if (!std::isfinite(phi_i) || !std::isfinite(phi_j)) {
        throw std::invalid_argument("conditional_edge_prob: phi must be finite");
    }
    return sigmoid(2.0 * p.theta2() * (phi_i + phi_j) + 2.0 * p.theta1());
}

double log_f_n(const ModelParams& p, const AuxiliaryState& phi) {
    const int n = p.n();
    if (phi.phi.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("log_f_n: phi has length " +
                                    std::to_string(phi.phi.size()) + ", expected " +
                                    std::to_string(n));
    }
    double sum_sq = 0.0;
    for (double v : phi.phi) {
        sum_sq += v * v;
    }
    double pair_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pair_sum += log_cosh(p.theta2() * (phi.phi[i] + phi.phi[j]) + p.theta1());
        }
    }
    return -(n - 1) * p.theta2() / 2.0 * sum_sq + pair_sum;
}

}  // namespace twostar
