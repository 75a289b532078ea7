#pragma once

#include <optional>
#include <string>

namespace hhk {

// Scalar inputs of the homogeneous market/preference model.
struct ModelParams {
    double r = 0.0;        // interest rate
    double sigma = 0.0;    // stock volatility
    double a_prime = 0.0;  // cost-kernel interval [a_prime, a]
    double a = 0.0;
    double b = 0.0;        // utility-kernel interval [b, b_prime]
    double b_prime = 0.0;
    double delta = 0.0;    // impatience rate
    double alpha = 0.0;    // felicity exponent, in (0,1)
    double beta = 0.0;     // satisfaction decay rate
    double eta = 0.0;      // initial exogenous satisfaction
    double w = 0.0;        // initial wealth
    std::optional<double> mu;  // stock drift; informational only

    // (mu - r)/sigma when mu is given
    std::optional<double> risk_premium() const;
};

enum class Regime { Standard, AbstentionCase1, AbstentionCase2 };

const char* to_string(Regime regime);

struct ValidatedParams {
    ModelParams p;
    Regime regime = Regime::Standard;
    bool standard() const { return regime == Regime::Standard; }
};

// Checks ranges, interval ordering and the impatience condition of the
// detected regime. Throws Error{NonPositive|OrderingViolation|IllPosed}.
ValidatedParams validate(const ModelParams& p);

// Largest real root of A x^2 + B x + C, computed cancellation-safely.
// Requires A > 0; throws Error{NoRealRoot} if the discriminant is negative.
double quad_root_plus(double A, double B, double C);

struct DerivedConstants {
    double theta = 0.0;            // (b-a)/(1-alpha)
    double lambda = 0.0;           // [(a^2-b^2)-2(delta-r)]/(2(alpha-1))
    double x_plus_alpha_b = 0.0;   // largest root of the utility quadratic at b
    double x_plus_a = 0.0;         // largest root of the cost quadratic at a
    double x_plus_a_prime = 0.0;   // ... at a_prime
    double delta_hat = 0.0;        // beta + (delta-r)/(alpha-1)
    double k = 0.0;                // budget-binding Lagrange constant
    double pi = 0.0;               // constant portfolio fraction
    Regime regime = Regime::Standard;
};

// Largest roots of the two quadratic families, for an arbitrary kernel value.
double x_plus_alpha(const ModelParams& p, double xi);
double x_plus(const ModelParams& p, double xi);

// All derived constants of the standard regime (k via the budget constraint).
DerivedConstants derive(const ValidatedParams& vp);

// Discounted power felicity and its marginal in the satisfaction level.
double felicity(double t, double y, double delta, double alpha);
double felicity_deriv(double t, double y, double delta, double alpha);

inline double felicity(double t, double y, const ModelParams& p) {
    return felicity(t, y, p.delta, p.alpha);
}
inline double felicity_deriv(double t, double y, const ModelParams& p) {
    return felicity_deriv(t, y, p.delta, p.alpha);
}

} // namespace hhk
