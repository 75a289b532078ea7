#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hhk::gexp {

enum class Orientation { Inf, Sup };

// Piecewise-linear BSDE driver defined by a kernel interval [lo, hi].
// Inf realizes g(z) = min over the interval of xi*z (concave),
// Sup the max (convex). g(0)=0 by construction.
struct Driver {
    double lo = 0.0;
    double hi = 0.0;
    Orientation orient = Orientation::Inf;

    static Driver inf(double lo, double hi) { return {lo, hi, Orientation::Inf}; }
    static Driver sup(double lo, double hi) { return {lo, hi, Orientation::Sup}; }

    double eval(double z) const;
    double lipschitz() const;            // kappa = max(|lo|,|hi|)
    double convex_dual(double xi) const; // 0 on [lo,hi], +inf outside
    double kernel_from_z(double z) const; // attaining kernel; tie-break z=0 -> lo
};

// Uniform binomial time grid with +-sqrt(dt) increments, probability 1/2 each.
struct Lattice {
    int n_steps = 1;
    double dt = 1.0;

    double sqrt_dt() const;
    std::size_t n_leaves() const { return std::size_t{1} << n_steps; }
    // history nodes are heap-indexed: root=1, children of i are 2i (down)
    // and 2i+1 (up); leaves occupy [n_leaves(), 2*n_leaves()).
    std::size_t n_nodes() const { return std::size_t{2} << n_steps; }
};

// Solution of the discrete BSDE on the full history tree.
struct TreeSolution {
    Lattice lat;
    std::vector<double> value;  // per node, heap-indexed (index 0 unused)
    std::vector<double> z;      // per internal node
    std::vector<double> kernel; // per internal node

    double root() const { return value[1]; }
    static int depth(std::size_t node);
};

// Backward induction value[i] = (value[up]+value[down])/2 + dt*g(z[i]),
// z[i] = (value[up]-value[down])/(2 sqrt(dt)). Throws LatticeTooCoarse if
// kappa*sqrt(dt) >= 1.
TreeSolution solve(const Driver& d, const Lattice& lat, std::span<const double> leaf_payoff);

// Exact min (Inf) or max (Sup) over all per-history-node endpoint kernel
// assignments of the reweighted expectation; branch weights (1 +- xi sqrt(dt))/2.
// Throws TooLarge beyond n_steps = 4.
double enumerate_priors(const Driver& d, const Lattice& lat, std::span<const double> leaf_payoff);

// Reweighted expectation of the payoff under one fixed adapted kernel
// (values per internal node).
double expectation_under_kernel(const Lattice& lat, std::span<const double> leaf_payoff,
                                std::span<const double> kernel_by_node);

// Brownian value at a node (sum of +-sqrt(dt) along its history).
double node_brownian(const Lattice& lat, std::size_t node);

// Leaf payoffs from a function of the terminal Brownian value.
std::vector<double> terminal_payoff(const Lattice& lat, const std::function<double(double)>& f);

} // namespace hhk::gexp
