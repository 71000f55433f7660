#include "unitfit/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace unitfit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double checked_eval(const std::function<double(std::span<const double>)>& fn,
                    std::span<const double> x) {
    const double v = fn(x);
    if (!std::isfinite(v)) {
        throw HessianError("objective not finite at a finite-difference stencil point");
    }
    return v;
}

// leading principal minors all positive <=> positive definite (symmetric input)
bool positive_definite(const Matrix& m) {
    const size_t d = m.size();
    Matrix a = m;
    for (size_t k = 0; k < d; ++k) {
        if (!(a[k][k] > 0.0)) return false;
        for (size_t i = k + 1; i < d; ++i) {
            const double factor = a[i][k] / a[k][k];
            for (size_t j = k; j < d; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return true;
}

} // namespace

Matrix hessian_fd(const std::function<double(std::span<const double>)>& fn,
                  std::span<const double> x) {
    const size_t d = x.size();
    std::vector<double> h(d);
    for (size_t i = 0; i < d; ++i) h[i] = 1e-4 * std::max(1.0, std::fabs(x[i]));

    std::vector<double> p(x.begin(), x.end());
    const double f0 = checked_eval(fn, p);

    Matrix H(d, std::vector<double>(d, 0.0));
    for (size_t i = 0; i < d; ++i) {
        p[i] = x[i] + h[i];
        const double fp = checked_eval(fn, p);
        p[i] = x[i] - h[i];
        const double fm = checked_eval(fn, p);
        p[i] = x[i];
        H[i][i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for (size_t j = i + 1; j < d; ++j) {
            p[i] = x[i] + h[i]; p[j] = x[j] + h[j];
            const double fpp = checked_eval(fn, p);
            p[j] = x[j] - h[j];
            const double fpm = checked_eval(fn, p);
            p[i] = x[i] - h[i]; p[j] = x[j] + h[j];
            const double fmp = checked_eval(fn, p);
            p[j] = x[j] - h[j];
            const double fmm = checked_eval(fn, p);
            p[i] = x[i]; p[j] = x[j];
            H[i][j] = H[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
        }
    }
    // symmetrize; the cross stencil is symmetric already, the transpose guards rounding
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i + 1; j < d; ++j) {
            const double s = 0.5 * (H[i][j] + H[j][i]);
            H[i][j] = H[j][i] = s;
        }
    }
    return H;
}

WaldTest wald_test(double theta_hat, double se) {
    if (!(se > 0.0)) throw std::domain_error("wald_test: standard error must be positive");
    const double z = theta_hat / se;
    const double p = std::erfc(std::fabs(z) / std::sqrt(2.0));
    std::string label;
    if (p < 0.001) {
        label = "P<0.001";
    } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", p);
        label = buf;
    }
    return WaldTest{z, p, label};
}

double matrix_det(const Matrix& m) {
    const size_t d = m.size();
    Matrix a = m;
    double det = 1.0;
    for (size_t k = 0; k < d; ++k) {
        size_t pivot = k;
        for (size_t i = k + 1; i < d; ++i) {
            if (std::fabs(a[i][k]) > std::fabs(a[pivot][k])) pivot = i;
        }
        if (a[pivot][k] == 0.0) return 0.0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (size_t i = k + 1; i < d; ++i) {
            const double factor = a[i][k] / a[k][k];
            for (size_t j = k; j < d; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return det;
}

Matrix matrix_inverse(const Matrix& m) {
    const size_t d = m.size();
    Matrix a = m;
    Matrix inv(d, std::vector<double>(d, 0.0));
    for (size_t i = 0; i < d; ++i) inv[i][i] = 1.0;
    for (size_t k = 0; k < d; ++k) {
        size_t pivot = k;
        for (size_t i = k + 1; i < d; ++i) {
            if (std::fabs(a[i][k]) > std::fabs(a[pivot][k])) pivot = i;
        }
        if (a[pivot][k] == 0.0) throw std::domain_error("matrix_inverse: singular matrix");
        std::swap(a[pivot], a[k]);
        std::swap(inv[pivot], inv[k]);
        const double diag = a[k][k];
        for (size_t j = 0; j < d; ++j) {
            a[k][j] /= diag;
            inv[k][j] /= diag;
        }
        for (size_t i = 0; i < d; ++i) {
            if (i == k) continue;
            const double factor = a[i][k];
            if (factor == 0.0) continue;
            for (size_t j = 0; j < d; ++j) {
                a[i][j] -= factor * a[k][j];
                inv[i][j] -= factor * inv[k][j];
            }
        }
    }
    return inv;
}

std::vector<std::vector<double>> start_grid(Family family) {
    static const double shape[] = {0.5, 2.0, 10.0};
    static const double alpha[] = {0.5, 1.0, 2.0};
    std::vector<std::vector<double>> grid;
    switch (family) {
        case Family::beta:
        case Family::kumaraswamy:
            for (double a : alpha) {
                for (double b : shape) grid.push_back({a, b});
            }
            break;
        case Family::topp_leone:
        case Family::unit_lindley:
            for (double t : shape) grid.push_back({t});
            break;
        case Family::mbur:
            for (double a : alpha) grid.push_back({a});
            break;
        case Family::gombur1:
            for (double n : shape) {
                for (double a : alpha) grid.push_back({n, a});
            }
            break;
        case Family::gombur2:
            // same m-grid as the first form under n = 2m + 1
            for (double m : shape) {
                for (double a : alpha) grid.push_back({2.0 * m + 1.0, a});
            }
            break;
    }
    return grid;
}

FitResult fit_mle(Family family, const Dataset& data, const SimplexConfig& config) {
    const int d = param_count(family);
    const int n = data.n();
    if (n < d + 2) {
        throw std::domain_error("fit_mle: need at least " + std::to_string(d + 2) +
                                " observations, got " + std::to_string(n));
    }
    config.validate();

    const std::span<const double> sample(data.values);
    auto neg_ll = [&](std::span<const double> t) {
        const std::vector<double> p = transform_from_unconstrained(family, t);
        if (!params_in_domain(family, p)) return std::numeric_limits<double>::infinity();
        return -log_likelihood(FamilySpec(family, p), sample);
    };

    bool have_best = false;
    OptimResult best;
    int iterations = 0, evals = 0;
    for (const auto& start : start_grid(family)) {
        const std::vector<double> t0 = transform_to_unconstrained(family, start);
        OptimResult r = minimize(neg_ll, t0, config);
        iterations += r.iterations;
        evals += r.function_evals;
        const bool better = !have_best || (r.converged && !best.converged) ||
                            (r.converged == best.converged && r.f_min < best.f_min);
        if (better) {
            best = std::move(r);
            have_best = true;
        }
    }

    FitResult out(FamilySpec(family, transform_from_unconstrained(family, best.x_min)));
    out.log_lik = -best.f_min;
    out.converged = best.converged;
    out.n_obs = n;
    out.iterations = iterations;
    out.function_evals = evals;

    out.vcov_scaled.assign(d, std::vector<double>(d, kNaN));
    out.se.assign(d, kNaN);
    out.determinant = kNaN;
    out.wald_z.assign(d, kNaN);
    out.wald_p.assign(d, kNaN);
    out.wald_label.assign(d, "-");

    auto ll_at = [&](std::span<const double> p) {
        if (!params_in_domain(family, p)) return -std::numeric_limits<double>::infinity();
        return log_likelihood(FamilySpec(family, std::vector<double>(p.begin(), p.end())), sample);
    };
    try {
        const Matrix H = hessian_fd(ll_at, out.spec.params);
        Matrix neg_h = H;
        for (auto& row : neg_h) {
            for (double& v : row) v = -v;
        }
        if (positive_definite(neg_h)) {
            out.vcov_scaled = matrix_inverse(neg_h);
            out.determinant = matrix_det(out.vcov_scaled);
            for (int i = 0; i < d; ++i) {
                out.se[i] = std::sqrt(out.vcov_scaled[i][i] / n);
                const WaldTest w = wald_test(out.spec.params[i], out.se[i]);
                out.wald_z[i] = w.z;
                out.wald_p[i] = w.p;
                out.wald_label[i] = w.label;
            }
            out.vcov_ok = true;
        }
    } catch (const HessianError&) {
        // inference block stays unavailable
    }
    return out;
}

} // namespace unitfit
