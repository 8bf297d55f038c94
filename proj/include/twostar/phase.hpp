#pragma once

#include <span>
#include <string>
#include <vector>

namespace twostar {

/// Parameter domains of the mean-field free energy q:
///   Theta11: theta1 = 0, theta2 < 1/2   (unique minimum at 0)
///   Theta12: theta1 > 0                 (unique positive minimizer)
///   Theta13: theta1 < 0                 (unique negative minimizer)
///   Theta2:  theta1 = 0, theta2 > 1/2   (two symmetric minima)
///   Theta3:  theta1 = 0, theta2 = 1/2   (critical point, q''(0) = 0)
enum class PhaseDomain { Theta11, Theta12, Theta13, Theta2, Theta3 };

std::string to_string(PhaseDomain d);

/// Domain classification with global q-minimizers m and the predicted
/// scaled-degree limits p = (m+1)/2.
struct PhaseReport {
    PhaseDomain domain;
    std::vector<double> fixed_points;  // ascending; each solves m = tanh(2*theta2*m + theta1)
    std::vector<double> predicted_p;   // ascending, in (0,1)
    bool is_critical = false;
};

/// q(t) = (theta2/4) t^2 - log cosh(theta2 t + theta1).
double q_eval(double theta1, double theta2, double t);

/// q''(t) = theta2/2 - theta2^2 sech^2(theta2 t + theta1) (closed form).
double q_second_deriv(double theta1, double theta2, double t);

/// p(x,y) = (theta2/2)(x^2+y^2) - log cosh(theta2(x+y) + theta1);
/// equals q(x+y) + (theta2/4)(x-y)^2.
double pairwise_p(double theta1, double theta2, double x, double y);

/// A root m of t = tanh(2*theta2*t + theta1) with its curvature at 2m.
struct TanhRoot {
    double m;
    double q_second;  // q''(2m)
    bool is_minimum;  // q_second > 0
};

/// All roots of t = tanh(2*theta2*t + theta1), ascending, each to absolute
/// accuracy ~1e-15 (sign-change bracketing on a fine grid + bisection).
/// Throws for theta2 <= 0.
std::vector<TanhRoot> tanh_roots(double theta1, double theta2);

/// The root locations only.
std::vector<double> fixed_points(double theta1, double theta2);

/// Domain classification by the exact parameter-sign cases (theta1 vs 0 and
/// theta2 vs 1/2, each within 1e-12), with fixed points restricted to the
/// global q-minima. Throws for theta2 <= 0.
PhaseReport classify(double theta1, double theta2);

/// One (beta_i, |E_i|) term of a generic subgraph-count Hamiltonian.
struct BetaTerm {
    double beta;
    int edge_count;  // |E_i| >= 1
};

/// psi(p) = sum_i 2 beta_i |E_i| p^{|E_i|-1}.
double mean_field_psi(std::span<const BetaTerm> betas, double p);

/// phi(p) = e^{psi(p)} / (1 + e^{psi(p)}). Throws for p outside (0,1).
double mean_field_phi(std::span<const BetaTerm> betas, double p);

struct LogPartitionLimit {
    double value;     // sup_{0<p<1} { sum_i beta_i p^{|E_i|} - I(p) }
    double argmax_p;  // maximizer; satisfies phi(p) = p
};

/// Limiting log partition function (per n^2) as a 1-d optimization over
/// (0,1), with I(p) = (p log p + (1-p) log(1-p)) / 2. The returned maximizer
/// satisfies phi(p) = p within 1e-8. Throws on an empty list.
LogPartitionLimit log_partition_limit(std::span<const BetaTerm> betas);

}  // namespace twostar
