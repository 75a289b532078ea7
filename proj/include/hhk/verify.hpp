#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhk/gexp.hpp"
#include "hhk/model.hpp"
#include "hhk/tracking.hpp"

namespace hhk::verify {

struct MCConfig {
    long n_paths = 20000;
    double dt = 1.0 / 1024;
    double horizon = 0.0;  // 0 => auto-truncate until the tail bound certifies
    std::uint64_t seed = 20240517;
    bool antithetic = false;
    int n_threads = 0;  // 0 => hardware concurrency
    double tail_tolerance = 0.005;  // certified tail as fraction of the estimate
    // nested first-order checks
    int outer_times = 10;
    long outer_paths = 100;
    long inner_paths = 1000;
    double inner_dt = 1.0 / 256;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_paths = 0;
    double dt = 0.0;
    double horizon = 0.0;
    double tail_bound = 0.0;
};

// An adapted Girsanov kernel from the candidate families used by the
// worst-case search: constants, piecewise-constant switches, and
// state-dependent sign-of-B strategies.
struct KernelSpec {
    enum class Kind { Constant, Piecewise, SignOfB };
    Kind kind = Kind::Constant;
    double value = 0.0;                // Constant
    std::vector<double> switch_times;  // Piecewise, ascending
    std::vector<double> values;        // Piecewise, size switch_times.size()+1
    double pos_value = 0.0;            // SignOfB, used when B_t >= 0
    double neg_value = 0.0;

    static KernelSpec constant(double v);
    static KernelSpec piecewise(std::vector<double> times, std::vector<double> vals);
    static KernelSpec sign_of_b(double pos, double neg);

    double at(double t, double b_t) const;
    double min_value() const;
    double max_value() const;
    std::string describe() const;
};

// Throws KernelOutOfBounds unless the kernel's range lies in [lo, hi].
void require_within(const KernelSpec& k, double lo, double hi);

// Certified bound on int_T^inf e^{-c t} E[x0 v q e^{s_tilde sup_{v<=t}(B_v - mu v)}] dt.
// Throws TailTooLarge when no bound is available.
double sup_integral_tail_bound(double T, double c, double s_tilde, double mu, double q, double x0);

// MC estimate of the expected utility of the tracked plan under the prior
// with kernel xi1 (weighted by its Girsanov density along each path).
MCEstimate mc_expected_utility(const ValidatedParams& vp, const DerivedConstants& dc, double k,
                               const KernelSpec& xi1, const MCConfig& cfg);

struct CostEstimates {
    MCEstimate direct;     // Stieltjes sum of e^{-rt} eps dC
    MCEstimate via_tilde;  // (1+r/beta) * MC[tilde_psi] - eta/beta
    double diff_mean = 0.0;
    double diff_se = 0.0;  // joint SE of (direct - via_tilde) over shared paths
};

// Two estimators of the expected cost under the prior with kernel xi2,
// computed on the same paths.
CostEstimates mc_expected_cost(const ValidatedParams& vp, const DerivedConstants& dc, double k,
                               const KernelSpec& xi2, const MCConfig& cfg);

struct WorstCaseCandidate {
    KernelSpec kernel;
    double margin = 0.0;     // estimate difference in the favorable direction
    double std_error = 0.0;  // SE of the per-path difference
    bool violation = false;
};

struct WorstCaseReport {
    std::vector<WorstCaseCandidate> utility_side;
    std::vector<WorstCaseCandidate> cost_side;
    double min_margin_utility = 0.0;  // in SE units, most adverse candidate
    double min_margin_cost = 0.0;
    bool pass = true;
};

// Samples adapted kernels on both sides and checks that no candidate beats
// the closed-form worst cases beyond 3 SE of the paired difference.
WorstCaseReport worstcase_search(const ValidatedParams& vp, const DerivedConstants& dc, double k,
                                 int n_candidates, const MCConfig& cfg);

// The expectation linking K and the multiplier M; returns M = K beta E[...].
double klm_relation(const ValidatedParams& vp, const DerivedConstants& dc, double k,
                    const MCConfig& cfg, MCEstimate* detail = nullptr);

// |klm_relation / M - 1| for an externally proposed M.
double backward_eq_residual(const ValidatedParams& vp, const DerivedConstants& dc, double k,
                            double m, const MCConfig& cfg);

struct FocPointCheck {
    double time = 0.0;
    long outer_path = 0;
    double lhs = 0.0;       // state-price-adjusted marginal utility estimate
    double rhs = 0.0;       // M gamma_t
    double std_error = 0.0; // inner SE on lhs
    bool consuming = false; // plan consumed at this grid time on this path
    bool violated = false;  // lhs > rhs beyond tolerance
    bool equality_failed = false;
};

struct FocReport {
    // condition (1): budget binds
    MCEstimate budget;
    double budget_target = 0.0;
    bool budget_ok = false;
    // condition (2): state-price bound, nested per (path, time)
    std::vector<FocPointCheck> points;
    long n_inequality_violations = 0;
    long n_equality_checks = 0;
    long n_equality_failures = 0;
    long allowance = 0;  // multiple-comparison false-positive budget
    bool cond2_ok = false;
    // condition (3): global equality
    double cond3_lhs = 0.0;
    double cond3_rhs = 0.0;
    double cond3_diff_se = 0.0;
    bool cond3_ok = false;
    bool pass = false;
};

// Monte Carlo check of the three sufficient first-order optimality
// conditions; level_scale != 1 tracks a deliberately perturbed level (the
// negative control).
FocReport foc_check(const ValidatedParams& vp, const DerivedConstants& dc, double k, double m,
                    const MCConfig& cfg, double level_scale = 1.0);

// Pathwise residual of the discounted-consumption integration-by-parts
// identity over [0, horizon] of the grid.
double e77_residual(const TimeGrid& grid, std::span<const double> b, std::span<const double> eps,
                    std::span<const double> kernel_nodes, std::span<const double> satisfaction,
                    std::span<const double> consumption, double r, double beta, double eta);

struct E77Level {
    double dt = 0.0;
    double median_abs_residual = 0.0;
};

// Median |residual| per dt level for the plan tracking L^K under kernel xi2.
std::vector<E77Level> e77_refinement(const ValidatedParams& vp, const DerivedConstants& dc,
                                     double k, const KernelSpec& xi2, double horizon,
                                     std::span<const double> dts, long n_paths,
                                     std::uint64_t seed);

struct FixedPointResult {
    gexp::Lattice lat;
    std::vector<double> kernel_util;  // per internal node, after the map
    std::vector<double> kernel_cost;
    std::vector<double> z_util;
    std::vector<double> z_cost;
    double dist_util = 0.0;  // sup-norm change against the input kernels
    double dist_cost = 0.0;
};

// One application of the fixed-point map: build L from the input kernels'
// density ratio, track it along every lattice path, evaluate lifetime utility
// and discounted cost as terminal payoffs, solve both discrete BSDEs, and
// read the attaining kernels off the Z processes.
FixedPointResult fixed_point_iterate(const ValidatedParams& vp, double k,
                                     const gexp::Driver& utility_driver,
                                     const gexp::Driver& cost_driver, const gexp::Lattice& lat,
                                     std::span<const double> xi1_nodes,
                                     std::span<const double> xi2_nodes);

struct AbstentionCheck {
    double cost = 0.0;
    double cost_seed_variance = 0.0;  // across recomputations; exactly 0
    bool deterministic_ok = false;
    double utility_quadrature = 0.0;
    MCEstimate utility_mc;  // under a common prior, via its density
    bool utility_ok = false;
    bool pass = false;
};

// Overlap regime: the plan is deterministic, so its cost must not depend on
// the seed at all, and prior-weighted MC utility must match the plain
// integral.
AbstentionCheck abstention_variance_check(const ValidatedParams& vp, const MCConfig& cfg,
                                          int n_seed_probes = 1000);

} // namespace hhk::verify
