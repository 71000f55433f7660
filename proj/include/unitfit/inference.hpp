#pragma once

#include "unitfit/dataset.hpp"
#include "unitfit/distributions.hpp"
#include "unitfit/optim.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace unitfit {

using Matrix = std::vector<std::vector<double>>;

/// Raised by hessian_fd when a stencil point leaves the feasible set.
class HessianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symmetric central-difference Hessian with steps h_i = 1e-4 * max(1, |x_i|),
/// symmetrized as (H + H^T)/2. Throws HessianError when the function is not
/// finite at any stencil point.
Matrix hessian_fd(const std::function<double(std::span<const double>)>& fn,
                  std::span<const double> x);

struct WaldTest {
    double z;
    double p;           // two-sided standard-normal tail probability
    std::string label;  // "P<0.001" below the threshold, the numeric p otherwise
};

/// Wald significance of a single estimate; requires se > 0.
WaldTest wald_test(double theta_hat, double se);

/// Maximum-likelihood fit of one family plus the inference block the
/// comparison tables carry. The variance block `vcov_scaled` is the inverse of
/// the observed information (negative Hessian of the total log-likelihood at
/// the optimum); standard errors are sqrt(vcov_scaled[i][i] / n_obs).
struct FitResult {
    explicit FitResult(FamilySpec s) : spec(std::move(s)) {}

    FamilySpec spec;  // at the MLE
    double log_lik = 0.0;
    bool converged = false;
    int n_obs = 0;

    bool vcov_ok = false;  // false: Hessian unavailable or not negative definite
    Matrix vcov_scaled;    // NaN-filled when !vcov_ok
    std::vector<double> se;
    double determinant = 0.0;
    std::vector<double> wald_z;
    std::vector<double> wald_p;
    std::vector<std::string> wald_label;

    int iterations = 0;  // convergence trace, summed over the start grid
    int function_evals = 0;
};

/// Multi-start Nelder-Mead maximum likelihood in the unconstrained space.
/// Start grid: for two-parameter families the first parameter (or n, expressed
/// through the shared m coordinate for the second generalized form) ranges
/// over {0.5, 2, 10} and alpha over {0.5, 1, 2}; one-parameter shape families
/// start at {0.5, 2, 10} and the unit-Rayleigh alpha at {0.5, 1, 2}.
/// Requires n_obs >= d + 2.
FitResult fit_mle(Family family, const Dataset& data, const SimplexConfig& config = {});

/// Start grid used by fit_mle, exposed for tests.
std::vector<std::vector<double>> start_grid(Family family);

double matrix_det(const Matrix& m);
Matrix matrix_inverse(const Matrix& m);  // throws std::domain_error when singular

} // namespace unitfit
