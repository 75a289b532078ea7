#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hhk/model.hpp"

namespace hhk::stationary {

// Lagrange constant K making the worst-case expected cost of the tracked
// plan equal the initial wealth w.
double lagrange_k(double w, double eta, double alpha, double beta, double x_plus_a);

// Worst-case expected utility phi^b(eta) of the plan tracking L^K.
double expected_utility_closed(double eta, double k, const ModelParams& p,
                               const DerivedConstants& dc);

// Worst-case expected cost psi^a(eta); with k = lagrange_k(...), equals w.
double expected_cost_closed(double eta, double k, const ModelParams& p,
                            const DerivedConstants& dc);

// tilde_psi^{xi}(eta) = E[int e^{-rt} eps^{xi} Y dt] for xi in {a, a_prime}.
double tilde_psi_closed(double eta, double k, double xi, const ModelParams& p,
                        const DerivedConstants& dc);

// psi^{xi}(eta) = (1 + r/beta) tilde_psi^{xi}(eta) - eta/beta.
double psi_closed(double eta, double k, double xi, const ModelParams& p,
                  const DerivedConstants& dc);

// Constant financing portfolio fraction theta x_+(a)/sigma.
double portfolio_pi(double theta, double x_plus_a, double sigma);

// Present value of remaining consumption along an optimal path.
double present_value(double t, double b_t, double y_t, double k, const ModelParams& p,
                     const DerivedConstants& dc);

enum class StaticsQuantity { Sigma, RiskAversion, Spread };
enum class CurveShape { Decreasing, Increasing, DecreasingThenIncreasing };

struct StaticsReport {
    StaticsQuantity quantity;
    std::vector<std::pair<double, double>> curve;  // (parameter value, pi)
    CurveShape shape = CurveShape::Decreasing;
    // spread only: parameter value b-a at which d pi / d(b-a) changes sign
    std::optional<double> turning_point;
};

// Samples pi over an admissible parameter grid and classifies monotonicity.
// Throws RegionEmpty when no admissible interval exists.
StaticsReport comparative_statics(const ModelParams& p, StaticsQuantity q, int n_points);

// Deterministic solution of the overlapping-priors problem.
struct AbstentionSolution {
    Regime regime;                  // AbstentionCase1 or AbstentionCase2
    double k = 0.0;
    double multiplier = 0.0;        // K beta/(r+beta)
    double cost = 0.0;              // discounted cost of the plan; equals w
    double utility = 0.0;           // lifetime utility of the plan
    double level0 = 0.0;            // K^{1/(alpha-1)}
    double growth = 0.0;            // (delta-r)/(alpha-1), level growth rate
    double start_time = 0.0;        // first consumption time (0 when eta <= level0)
    double eta = 0.0, beta = 0.0, r = 0.0, delta = 0.0, alpha = 0.0, w = 0.0;

    double satisfaction_at(double t) const;
    double consumption_at(double t) const;  // cumulative
};

AbstentionSolution abstention_solve(const ValidatedParams& vp);

struct ClosedForm {
    Regime regime;
    double k = 0.0;
    double phi = 0.0;  // worst-case expected utility
    double psi = 0.0;  // worst-case expected cost (= w)
    double pi = 0.0;   // portfolio fraction (0 in the abstention regime)
    std::optional<double> multiplier;
};

// Full closed-form solution for either regime.
ClosedForm solve_closed_form(const ValidatedParams& vp);

} // namespace hhk::stationary
