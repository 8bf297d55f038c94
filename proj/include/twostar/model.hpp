#pragma once

#include <vector>

#include "twostar/graph.hpp"

namespace twostar {

/// Vector of per-vertex auxiliary variables phi in R^n.
struct AuxiliaryState {
    std::vector<double> phi;
};

/// Two-star model parameters (n, beta1, beta2) with the derived
/// reparametrization theta1 = (beta1+beta2)/2, theta2 = beta2/4.
///
/// The beta-pair is canonical; theta values are derived once at
/// construction and never set independently.
class ModelParams {
  public:
    /// Requires n >= 2 and beta2 > 0 (the non-negative parameter domain).
    ModelParams(int n, double beta1, double beta2);

    /// Same model given (theta1, theta2); requires theta2 > 0.
    static ModelParams from_thetas(int n, double theta1, double theta2);

    /// Skips the beta2 > 0 check. Only for the exact-enumeration oracle and
    /// the Glauber baseline, which remain well defined at beta2 <= 0; the
    /// auxiliary-variable sampler does not accept such parameters.
    static ModelParams unchecked(int n, double beta1, double beta2);

    int n() const { return n_; }
    double beta1() const { return beta1_; }
    double beta2() const { return beta2_; }
    double theta1() const { return theta1_; }
    double theta2() const { return theta2_; }

  private:
    ModelParams(int n, double beta1, double beta2, bool checked);

    int n_;
    double beta1_;
    double beta2_;
    double theta1_;
    double theta2_;
};

/// Exponent of the unnormalized density:
///   H(x) = beta2/(n-1) * T(x) + (beta1 + beta2/(n-1)) * E(x),
/// so log P(x) = H(x) - log Z_n. Throws on g.n != p.n.
double hamiltonian(const ModelParams& p, const AdjacencyState& g);

/// P(x_ij = 1 | phi) = sigmoid(2*theta2*(phi_i + phi_j) + 2*theta1).
/// Stable for arguments far beyond +-1e4. Throws on non-finite inputs.
double conditional_edge_prob(const ModelParams& p, double phi_i, double phi_j);

/// log f_n(phi) = -((n-1)theta2/2) sum_i phi_i^2
///              + sum_{i<j} log cosh(theta2(phi_i+phi_j) + theta1).
/// Throws if phi.size() != n.
double log_f_n(const ModelParams& p, const AuxiliaryState& phi);

}  // namespace twostar
