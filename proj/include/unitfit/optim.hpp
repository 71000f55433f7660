#pragma once

#include "unitfit/distributions.hpp"

#include <functional>
#include <span>
#include <vector>

namespace unitfit {

/// Nelder-Mead settings. Defaults are the classic simplex coefficients.
struct SimplexConfig {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double f_tolerance = 1e-10;
    double x_tolerance = 1e-8;
    int max_iterations = 2000;
    int restarts = 1;

    /// Throws std::invalid_argument when a coefficient is out of range.
    void validate() const;
};

struct OptimResult {
    std::vector<double> x_min;
    double f_min = 0.0;
    int iterations = 0;
    bool converged = false;
    int function_evals = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free simplex minimization. Deterministic: the initial simplex
/// perturbs each coordinate of x0 by 5% of its magnitude (0.00025 absolute for
/// zero coordinates). Non-finite objective values are treated as the worst
/// vertex rather than raised. After the first descent a fresh simplex is
/// restarted from the best point, config.restarts times.
/// Requires a finite objective at x0.
OptimResult minimize(const Objective& objective, std::span<const double> x0,
                     const SimplexConfig& config = {});

/// Bijection between a family's parameter domain and an unconstrained space:
/// strictly positive parameters map through the natural log, and the second
/// generalized family's n maps as m = (n - 1) / 2 in log space so both
/// generalized forms search the same geometry. Boundary values are rejected.
std::vector<double> transform_to_unconstrained(Family family, std::span<const double> params);
std::vector<double> transform_from_unconstrained(Family family, std::span<const double> t);

} // namespace unitfit
