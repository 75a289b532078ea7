#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hhk/model.hpp"

namespace hhk {

// Uniform grid t_k = k*dt, k = 0..n_steps.
struct TimeGrid {
    int n_steps = 1;
    double dt = 1.0;

    int size() const { return n_steps + 1; }
    double time(int k) const { return k * dt; }
    double horizon() const { return n_steps * dt; }
};

// Standard Brownian path on the grid, B_0 = 0; bit-reproducible per seed.
std::vector<double> simulate_brownian(const TimeGrid& grid, std::uint64_t seed);

// Girsanov density of the measure with adapted kernel xi (values at nodes,
// applied left-point on [t_k, t_{k+1})). eps_0 = 1. |xi| must not exceed
// kappa_bound (KernelOutOfBounds otherwise).
std::vector<double> girsanov_density(const TimeGrid& grid, std::span<const double> b,
                                     std::span<const double> kernel, double kappa_bound);
std::vector<double> girsanov_density(const TimeGrid& grid, std::span<const double> b, double xi,
                                     double kappa_bound);

// Minimal level process K^{1/(alpha-1)} exp(theta B_t - lambda t).
// Throws NonPositiveK for k <= 0.
std::vector<double> level_path_lk(const TimeGrid& grid, std::span<const double> b, double k,
                                  double theta, double lambda, double alpha);

struct TrackedPlan {
    std::vector<double> satisfaction;       // Y, per node
    std::vector<double> consumption;        // cumulative C, per node (C_{0-} = 0)
    std::vector<double> consumption_gross;  // running sup of (L e^{I} - eta)^+, per node
};

// Consumption plan that keeps satisfaction at or above L with the least
// consumption: Y_k = e^{-I_k} max(eta, max_{j<=k} L_j e^{I_j}),
// dC_k = e^{-I_k} dS_k / beta_k, where I is the cumulative decay integral.
TrackedPlan track(const TimeGrid& grid, std::span<const double> level, double eta, double beta);
TrackedPlan track(const TimeGrid& grid, std::span<const double> level, double eta,
                  std::span<const double> beta_nodes);

// Satisfaction induced by a cumulative consumption path (atoms at grid nodes,
// including the jump at 0):
// Y_k = eta e^{-I_k} + sum_{j<=k} beta_j e^{-(I_k - I_j)} dC_j.
// Throws NotMonotone if C decreases.
std::vector<double> satisfaction_from_consumption(const TimeGrid& grid,
                                                  std::span<const double> consumption, double eta,
                                                  double beta);
std::vector<double> satisfaction_from_consumption(const TimeGrid& grid,
                                                  std::span<const double> consumption, double eta,
                                                  std::span<const double> beta_nodes);

// Cumulative trapezoidal integral of beta over the grid; the one decay
// convention shared by track and satisfaction_from_consumption.
std::vector<double> decay_integral(const TimeGrid& grid, std::span<const double> beta_nodes);

// Prefix maxima.
std::vector<double> running_sup(std::span<const double> values);
std::vector<double> running_sup(std::span<const double> values, std::span<const double> weights);

// One simulated trajectory of the optimal plan, for export and checks.
struct GridPath {
    TimeGrid grid;
    std::vector<double> b;      // Brownian values
    std::vector<double> eps_a;  // cost-side worst-case density
    std::vector<double> eps_b;  // utility-side worst-case density
    std::vector<double> level;
    std::vector<double> satisfaction;
    std::vector<double> consumption;
};

GridPath simulate_optimal_path(const ValidatedParams& vp, const DerivedConstants& dc,
                               const TimeGrid& grid, std::uint64_t seed);

} // namespace hhk
