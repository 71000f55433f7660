#include "unitfit/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace unitfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double eval(const Objective& f, std::span<const double> x, int& evals) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;  // non-finite objective = worst vertex
}

struct RunResult {
    std::vector<double> x;
    double f;
    int iterations;
    bool converged;
};

RunResult run_simplex(const Objective& f, std::span<const double> x0, const SimplexConfig& cfg,
                      int& evals) {
    const size_t d = x0.size();
    std::vector<std::vector<double>> verts(d + 1, std::vector<double>(x0.begin(), x0.end()));
    for (size_t i = 0; i < d; ++i) {
        double& c = verts[i + 1][i];
        c = c != 0.0 ? 1.05 * c : 0.00025;
    }
    std::vector<double> fv(d + 1);
    for (size_t i = 0; i <= d; ++i) fv[i] = eval(f, verts[i], evals);

    std::vector<size_t> order(d + 1);
    std::vector<double> centroid(d), xr(d), xe(d), xc(d);

    int iter = 0;
    bool converged = false;
    for (; iter < cfg.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return fv[a] < fv[b]; });

        const size_t best = order[0];
        const size_t worst = order[d];
        const size_t second_worst = order[d == 0 ? 0 : d - 1];

        double f_spread = 0.0, x_spread = 0.0;
        for (size_t i = 0; i <= d; ++i) {
            f_spread = std::max(f_spread, std::fabs(fv[i] - fv[best]));
            for (size_t j = 0; j < d; ++j) {
                x_spread = std::max(x_spread, std::fabs(verts[i][j] - verts[best][j]));
            }
        }
        if (f_spread <= cfg.f_tolerance && x_spread <= cfg.x_tolerance) {
            converged = true;
            break;
        }

        for (size_t j = 0; j < d; ++j) {
            double s = 0.0;
            for (size_t i = 0; i <= d; ++i) {
                if (i != worst) s += verts[i][j];
            }
            centroid[j] = s / static_cast<double>(d);
        }

        for (size_t j = 0; j < d; ++j) {
            xr[j] = centroid[j] + cfg.reflection * (centroid[j] - verts[worst][j]);
        }
        const double fr = eval(f, xr, evals);

        if (fr < fv[best]) {
            for (size_t j = 0; j < d; ++j) {
                xe[j] = centroid[j] + cfg.expansion * (xr[j] - centroid[j]);
            }
            const double fe = eval(f, xe, evals);
            if (fe < fr) {
                verts[worst] = xe;
                fv[worst] = fe;
            } else {
                verts[worst] = xr;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second_worst]) {
            verts[worst] = xr;
            fv[worst] = fr;
            continue;
        }

        if (fr < fv[worst]) {
            // outside contraction
            for (size_t j = 0; j < d; ++j) {
                xc[j] = centroid[j] + cfg.contraction * (xr[j] - centroid[j]);
            }
            const double fc = eval(f, xc, evals);
            if (fc <= fr) {
                verts[worst] = xc;
                fv[worst] = fc;
                continue;
            }
        } else {
            // inside contraction
            for (size_t j = 0; j < d; ++j) {
                xc[j] = centroid[j] - cfg.contraction * (centroid[j] - verts[worst][j]);
            }
            const double fc = eval(f, xc, evals);
            if (fc < fv[worst]) {
                verts[worst] = xc;
                fv[worst] = fc;
                continue;
            }
        }

        for (size_t i = 0; i <= d; ++i) {
            if (i == best) continue;
            for (size_t j = 0; j < d; ++j) {
                verts[i][j] = verts[best][j] + cfg.shrink * (verts[i][j] - verts[best][j]);
            }
            fv[i] = eval(f, verts[i], evals);
        }
    }

    size_t best = 0;
    for (size_t i = 1; i <= d; ++i) {
        if (fv[i] < fv[best]) best = i;
    }
    return RunResult{verts[best], fv[best], iter, converged};
}

} // namespace

void SimplexConfig::validate() const {
    if (!(reflection > 0.0) || !(expansion > 1.0) || !(contraction > 0.0) ||
        !(contraction < 1.0) || !(shrink > 0.0) || !(shrink < 1.0) || !(f_tolerance > 0.0) ||
        !(x_tolerance > 0.0) || max_iterations < 1 || restarts < 0) {
        throw std::invalid_argument("invalid simplex configuration");
    }
}

OptimResult minimize(const Objective& objective, std::span<const double> x0,
                     const SimplexConfig& config) {
    config.validate();
    if (x0.empty()) throw std::invalid_argument("minimize: empty start vector");

    int evals = 0;
    const double f0 = eval(objective, x0, evals);
    if (!std::isfinite(f0)) {
        throw std::invalid_argument("minimize: objective not finite at the start point");
    }

    OptimResult out;
    out.x_min.assign(x0.begin(), x0.end());
    out.f_min = f0;

    int total_iter = 0;
    bool converged = false;
    for (int run = 0; run <= config.restarts; ++run) {
        RunResult r = run_simplex(objective, out.x_min, config, evals);
        total_iter += r.iterations;
        converged = r.converged;
        if (r.f <= out.f_min) {
            out.x_min = std::move(r.x);
            out.f_min = r.f;
        }
    }
    out.iterations = total_iter;
    out.converged = converged;
    out.function_evals = evals;
    return out;
}

std::vector<double> transform_to_unconstrained(Family family, std::span<const double> params) {
    validate_params(family, params);
    std::vector<double> t(params.begin(), params.end());
    if (family == Family::gombur2) {
        if (!(params[0] > 1.0)) {
            throw std::domain_error("transform requires n > 1 for the second generalized form");
        }
        t[0] = std::log((params[0] - 1.0) / 2.0);
        t[1] = std::log(params[1]);
        return t;
    }
    for (double& v : t) {
        if (!(v > 0.0)) {
            throw std::domain_error("transform requires strictly positive parameters");
        }
        v = std::log(v);
    }
    return t;
}

std::vector<double> transform_from_unconstrained(Family family, std::span<const double> t) {
    if (static_cast<int>(t.size()) != param_count(family)) {
        throw std::domain_error("transform dimension mismatch");
    }
    std::vector<double> p(t.begin(), t.end());
    if (family == Family::gombur2) {
        p[0] = 2.0 * std::exp(t[0]) + 1.0;
        p[1] = std::exp(t[1]);
        return p;
    }
    for (double& v : p) v = std::exp(v);
    return p;
}

} // namespace unitfit
