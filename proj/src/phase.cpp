#include "twostar/phase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "twostar/numeric.hpp"

namespace twostar {

namespace {

constexpr double kSignTol = 1e-12;  // theta1 vs 0 and theta2 vs 1/2

void require_positive_theta2(double theta2) {
    if (!(theta2 > 0.0)) {
        throw std::invalid_argument("phase: theta2 must be > 0");
    }
}

// t - tanh(2*theta2*t + theta1); roots are the mean-field fixed points.
double tanh_gap(double theta1, double theta2, double t) {
    return t - std::tanh(2.0 * theta2 * t + theta1);
}

double bisect_root(double theta1, double theta2, double a, double b, double fa) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
            break;
        }
        const double fm = tanh_gap(theta1, theta2, mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::string to_string(PhaseDomain d) {
    switch (d) {
        case PhaseDomain::Theta11: return "Theta11";
        case PhaseDomain::Theta12: return "Theta12";
        case PhaseDomain::Theta13: return "Theta13";
        case PhaseDomain::Theta2: return "Theta2";
        case PhaseDomain::Theta3: return "Theta3";
    }
    return "?";
}

double q_eval(double theta1, double theta2, double t) {
    return theta2 / 4.0 * t * t - log_cosh(theta2 * t + theta1);
}

double q_second_deriv(double theta1, double theta2, double t) {
    const double c = std::cosh(theta2 * t + theta1);
    return theta2 / 2.0 - theta2 * theta2 / (c * c);
}

double pairwise_p(double theta1, double theta2, double x, double y) {
    return theta2 / 2.0 * (x * x + y * y) - log_cosh(theta2 * (x + y) + theta1);
}

std::vector<TanhRoot> tanh_roots(double theta1, double theta2) {
    require_positive_theta2(theta2);
    // |tanh| < 1, so every root lies in (-1, 1); bracket on [-1.5, 1.5].
    constexpr double kLo = -1.5;
    constexpr double kHi = 1.5;
    constexpr int kGrid = 10000;

    std::vector<double> roots;
    double prev_t = kLo;
    double prev_f = tanh_gap(theta1, theta2, prev_t);
    if (prev_f == 0.0) {
        roots.push_back(prev_t);
    }
    for (int k = 1; k <= kGrid; ++k) {
        const double t = kLo + (kHi - kLo) * k / kGrid;
        const double f = tanh_gap(theta1, theta2, t);
        if (f == 0.0) {
            roots.push_back(t);
        } else if (prev_f != 0.0 && (f < 0.0) != (prev_f < 0.0)) {
            roots.push_back(bisect_root(theta1, theta2, prev_t, t, prev_f));
        }
        prev_t = t;
        prev_f = f;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<TanhRoot> out;
    for (double m : roots) {
        if (theta1 == 0.0 && std::fabs(m) < 1e-9) {
            m = 0.0;  // the symmetric case has the exact root 0
        }
        if (!out.empty() && std::fabs(m - out.back().m) < 1e-8) {
            continue;
        }
        const double q2 = q_second_deriv(theta1, theta2, 2.0 * m);
        out.push_back({m, q2, q2 > 0.0});
    }
    return out;
}

std::vector<double> fixed_points(double theta1, double theta2) {
    std::vector<double> out;
    for (const TanhRoot& r : tanh_roots(theta1, theta2)) {
        out.push_back(r.m);
    }
    return out;
}

PhaseReport classify(double theta1, double theta2) {
    require_positive_theta2(theta2);
    PhaseReport report;

    if (std::fabs(theta1) <= kSignTol) {
        if (std::fabs(theta2 - 0.5) <= kSignTol) {
            report.domain = PhaseDomain::Theta3;
            report.is_critical = true;
            report.fixed_points = {0.0};
        } else if (theta2 < 0.5) {
            report.domain = PhaseDomain::Theta11;
            report.fixed_points = {0.0};
        } else {
            report.domain = PhaseDomain::Theta2;
            double m = 0.0;
            for (const TanhRoot& r : tanh_roots(0.0, theta2)) {
                if (r.is_minimum && r.m > m) {
                    m = r.m;
                }
            }
            if (m <= 0.0) {
                throw std::logic_error("classify: no positive q-minimum found in Theta2");
            }
            report.fixed_points = {-m, m};
        }
    } else {
        report.domain = theta1 > 0.0 ? PhaseDomain::Theta12 : PhaseDomain::Theta13;
        // The global q-minimizer; for theta1 > 0 it is the unique positive
        // root, by symmetry the negative one for theta1 < 0.
        double best_m = std::numeric_limits<double>::quiet_NaN();
        double best_q = std::numeric_limits<double>::infinity();
        for (const TanhRoot& r : tanh_roots(theta1, theta2)) {
            if (!r.is_minimum) {
                continue;
            }
            const double qv = q_eval(theta1, theta2, 2.0 * r.m);
            if (qv < best_q) {
                best_q = qv;
                best_m = r.m;
            }
        }
        if (!std::isfinite(best_m)) {
            throw std::logic_error("classify: no q-minimum found");
        }
        report.fixed_points = {best_m};
    }

    for (double m : report.fixed_points) {
        report.predicted_p.push_back((m + 1.0) / 2.0);
    }
    return report;
}

double mean_field_psi(std::span<const BetaTerm> betas, double p) {
    double psi = 0.0;
    for (const BetaTerm& term : betas) {
        if (term.edge_count < 1) {
            throw std::invalid_argument("mean_field_psi: edge counts must be >= 1");
        }
        psi += 2.0 * term.beta * term.edge_count * std::pow(p, term.edge_count - 1);
    }
    return psi;
}

double mean_field_phi(std::span<const BetaTerm> betas, double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::invalid_argument("mean_field_phi: p must lie in (0,1)");
    }
    return sigmoid(mean_field_psi(betas, p));
}

namespace {

// I(p) = (p log p + (1-p) log(1-p)) / 2, underflow-safe near both ends.
double binary_entropy_rate(double p) {
    return 0.5 * (p * std::log(p) + (1.0 - p) * std::log1p(-p));
}

double variational_objective(std::span<const BetaTerm> betas, double p) {
    double value = -binary_entropy_rate(p);
    for (const BetaTerm& term : betas) {
        value += term.beta * std::pow(p, term.edge_count);
    }
    return value;
}

// F'(sigma(u)) up to the positive factor sigma'(u)/2: psi(sigma(u)) - u.
// Working in logit space keeps the boundary regions resolvable.
double stationarity_gap(std::span<const BetaTerm> betas, double u) {
    return mean_field_psi(betas, sigmoid(u)) - u;
}

}  // namespace

LogPartitionLimit log_partition_limit(std::span<const BetaTerm> betas) {
    if (betas.empty()) {
        throw std::invalid_argument("log_partition_limit: empty parameter list");
    }
    double bound = 0.0;  // sup |psi| <= sum 2|beta_i||E_i| on [0,1]
    for (const BetaTerm& term : betas) {
        if (term.edge_count < 1) {
            throw std::invalid_argument("log_partition_limit: edge counts must be >= 1");
        }
        bound += 2.0 * std::fabs(term.beta) * term.edge_count;
    }
    // Every stationary point satisfies logit(p) = psi(p), so |u| <= bound.
    const double u_lo = -bound - 1.0;
    const double u_hi = bound + 1.0;
    constexpr int kGrid = 20000;

    LogPartitionLimit best{-std::numeric_limits<double>::infinity(), 0.5};
    double prev_u = u_lo;
    double prev_g = stationarity_gap(betas, prev_u);  // > 0 at u_lo
    for (int k = 1; k <= kGrid; ++k) {
        const double u = u_lo + (u_hi - u_lo) * k / kGrid;
        const double g = stationarity_gap(betas, u);
        // Local maxima of F are the downward crossings of the gap.
        if (prev_g > 0.0 && g <= 0.0) {
            double a = prev_u;
            double b = u;
            double ga = prev_g;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) {
                    break;
                }
                const double gm = stationarity_gap(betas, mid);
                if (gm > 0.0) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            (void)ga;
            const double p_star = sigmoid(0.5 * (a + b));
            const double value = variational_objective(betas, p_star);
            if (value > best.value) {
                best = {value, p_star};
            }
        }
        prev_u = u;
        prev_g = g;
    }

    if (std::fabs(mean_field_phi(betas, best.argmax_p) - best.argmax_p) > 1e-8) {
        throw std::logic_error("log_partition_limit: maximizer violates phi(p) = p");
    }
    return best;
}

}  // namespace twostar
