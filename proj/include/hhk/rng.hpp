#pragma once

#include <cstdint>
#include <random>

namespace hhk {

// Mixes a root seed with a stream index so that stream i draws the same
// numbers no matter how paths are distributed over workers.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t index);

// Inverse standard-normal CDF (Wichura's double-precision rational
// approximation), |error| < 1e-15 over (0,1).
double inverse_normal_cdf(double p);

class PathRng {
public:
    explicit PathRng(std::uint64_t seed) : gen_(seed) {}
    PathRng(std::uint64_t root, std::uint64_t path_index) : gen_(split_seed(root, path_index)) {}

    // uniform on (0,1), endpoints excluded
    double uniform() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

    double gaussian() { return inverse_normal_cdf(uniform()); }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace hhk
