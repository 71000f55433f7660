#include "unitfit/distributions.hpp"

#include "unitfit/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace unitfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;

// log(1 - exp(u)) for u < 0, stable on both ends.
double log1mexp(double u) {
    return u > -kLn2 ? std::log(-std::expm1(u)) : std::log1p(-std::exp(u));
}

void require_interior(double y) {
    if (!(y > 0.0) || !(y < 1.0)) {
        throw std::domain_error("observation " + std::to_string(y) + " lies outside (0, 1)");
    }
}

struct FamilyInfo {
    Family family;
    const char* name;
    int n_params;
    std::array<const char*, 2> params;
};

constexpr std::array<FamilyInfo, 7> kInfo = {{
    {Family::beta, "beta", 2, {"alpha", "beta"}},
    {Family::kumaraswamy, "kumaraswamy", 2, {"alpha", "beta"}},
    {Family::topp_leone, "topp_leone", 1, {"theta", nullptr}},
    {Family::unit_lindley, "unit_lindley", 1, {"theta", nullptr}},
    {Family::mbur, "mbur", 1, {"alpha", nullptr}},
    {Family::gombur1, "gombur1", 2, {"n", "alpha"}},
    {Family::gombur2, "gombur2", 2, {"n", "alpha"}},
}};

const FamilyInfo& info(Family f) { return kInfo[static_cast<size_t>(f)]; }

} // namespace

int param_count(Family family) { return info(family).n_params; }

std::string_view family_name(Family family) { return info(family).name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& fi : kInfo) {
        if (name == fi.name) return fi.family;
    }
    return std::nullopt;
}

std::span<const char* const> param_names(Family family) {
    const auto& fi = info(family);
    return {fi.params.data(), static_cast<size_t>(fi.n_params)};
}

bool params_in_domain(Family family, std::span<const double> params) {
    if (static_cast<int>(params.size()) != param_count(family)) return false;
    for (double p : params) {
        if (!std::isfinite(p)) return false;
    }
    switch (family) {
        case Family::beta:
        case Family::kumaraswamy:
            return params[0] > 0.0 && params[1] > 0.0;
        case Family::topp_leone:
        case Family::unit_lindley:
        case Family::mbur:
            return params[0] > 0.0;
        case Family::gombur1:
            return params[0] >= 0.0 && params[1] > 0.0;
        case Family::gombur2:
            return params[0] >= 1.0 && params[1] > 0.0;
    }
    return false;
}

void validate_params(Family family, std::span<const double> params) {
    if (static_cast<int>(params.size()) != param_count(family)) {
        throw std::domain_error(std::string(family_name(family)) + " takes " +
                                std::to_string(param_count(family)) + " parameter(s), got " +
                                std::to_string(params.size()));
    }
    if (!params_in_domain(family, params)) {
        std::string msg = std::string(family_name(family)) + " parameters out of domain:";
        for (double p : params) msg += " " + std::to_string(p);
        throw std::domain_error(msg);
    }
}

FamilySpec::FamilySpec(Family f, std::vector<double> p) : family(f), params(std::move(p)) {
    validate_params(family, params);
}

double log_pdf(const FamilySpec& spec, double y) {
    require_interior(y);
    const auto& p = spec.params;
    const double ln_y = std::log(y);
    switch (spec.family) {
        case Family::beta: {
            const double a = p[0], b = p[1];
            return specfun::log_gamma(a + b) - specfun::log_gamma(a) - specfun::log_gamma(b) +
                   (a - 1.0) * ln_y + (b - 1.0) * std::log1p(-y);
        }
        case Family::kumaraswamy: {
            const double a = p[0], b = p[1];
            return std::log(a) + std::log(b) + (a - 1.0) * ln_y + (b - 1.0) * log1mexp(a * ln_y);
        }
        case Family::topp_leone: {
            const double t = p[0];
            // density t * (2 - 2y) * (2y - y^2)^(t-1), with 2y - y^2 = y (2 - y)
            return std::log(t) + std::log(2.0 - 2.0 * y) + (t - 1.0) * (ln_y + std::log(2.0 - y));
        }
        case Family::unit_lindley: {
            const double t = p[0];
            return 2.0 * std::log(t) - std::log1p(t) - 3.0 * std::log1p(-y) - t * y / (1.0 - y);
        }
        case Family::mbur: {
            const double a = p[0];
            const double ia2 = 1.0 / (a * a);
            return std::log(6.0) - 2.0 * std::log(a) + log1mexp(ia2 * ln_y) +
                   (2.0 * ia2 - 1.0) * ln_y;
        }
        case Family::gombur1: {
            const double n = p[0], a = p[1];
            const double ia2 = 1.0 / (a * a);
            const double bracket = n == 0.0 ? 0.0 : n * log1mexp(ia2 * ln_y);
            return specfun::log_gamma(2.0 * n + 2.0) - 2.0 * specfun::log_gamma(n + 1.0) -
                   2.0 * std::log(a) + bracket + ((n + 1.0) * ia2 - 1.0) * ln_y;
        }
        case Family::gombur2: {
            const double n = p[0], a = p[1];
            const double ia2 = 1.0 / (a * a);
            const double half = (n - 1.0) / 2.0;
            const double bracket = half == 0.0 ? 0.0 : half * log1mexp(ia2 * ln_y);
            return specfun::log_gamma(n + 1.0) - 2.0 * specfun::log_gamma((n + 1.0) / 2.0) -
                   2.0 * std::log(a) + bracket + ((n + 1.0) / 2.0 * ia2 - 1.0) * ln_y;
        }
    }
    throw std::logic_error("unreachable family");
}

double pdf(const FamilySpec& spec, double y) { return std::exp(log_pdf(spec, y)); }

double cdf(const FamilySpec& spec, double y) {
    if (!std::isfinite(y) || y < 0.0 || y > 1.0) {
        throw std::domain_error("cdf argument " + std::to_string(y) + " lies outside [0, 1]");
    }
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 1.0;
    const auto& p = spec.params;
    const double ln_y = std::log(y);
    switch (spec.family) {
        case Family::beta:
            return specfun::reg_inc_beta(y, p[0], p[1]);
        case Family::kumaraswamy:
            // 1 - (1 - y^a)^b
            return -std::expm1(p[1] * log1mexp(p[0] * ln_y));
        case Family::topp_leone:
            return std::exp(p[0] * (ln_y + std::log(2.0 - y)));
        case Family::unit_lindley: {
            const double t = p[0];
            const double s = t * y / (1.0 - y);
            return -std::expm1(-s + std::log1p(s / (1.0 + t)));
        }
        case Family::mbur: {
            const double w = std::exp(ln_y / (p[0] * p[0]));
            return w * w * (3.0 - 2.0 * w);
        }
        case Family::gombur1: {
            const double w = std::exp(ln_y / (p[1] * p[1]));
            return specfun::reg_inc_beta(w, p[0] + 1.0, p[0] + 1.0);
        }
        case Family::gombur2: {
            const double w = std::exp(ln_y / (p[1] * p[1]));
            return specfun::reg_inc_beta(w, (p[0] + 1.0) / 2.0, (p[0] + 1.0) / 2.0);
        }
    }
    throw std::logic_error("unreachable family");
}

double quantile(const FamilySpec& spec, double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::domain_error("quantile probability " + std::to_string(p) +
                                " lies outside (0, 1)");
    }
    switch (spec.family) {
        case Family::kumaraswamy: {
            const double a = spec.params[0], b = spec.params[1];
            // y = (1 - (1-p)^(1/b))^(1/a)
            return std::exp(log1mexp(std::log1p(-p) / b) / a);
        }
        case Family::topp_leone: {
            const double t = spec.params[0];
            // (2y - y^2)^t = p  =>  y = 1 - sqrt(1 - p^(1/t))
            return 1.0 - std::sqrt(-std::expm1(std::log(p) / t));
        }
        default:
            break;
    }
    // bisection on the cdf; all supported cdfs are strictly increasing on (0,1)
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-17; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(spec, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double log_likelihood(const FamilySpec& spec, std::span<const double> data) {
    double total = 0.0;
    for (double y : data) {
        const double v = log_pdf(spec, y);
        if (!std::isfinite(v)) return -kInf;
        total += v;
    }
    return std::isfinite(total) ? total : -kInf;
}

GomburScore score_gombur1(double n, double alpha, std::span<const double> data) {
    if (!(n > 0.0) || !(alpha > 0.0)) {
        throw std::domain_error("score_gombur1 requires interior parameters n > 0, alpha > 0");
    }
    const double ia2 = 1.0 / (alpha * alpha);
    const double ia3 = ia2 / alpha;
    const double m = static_cast<double>(data.size());
    const double psi_term = 2.0 * specfun::digamma(2.0 * n + 2.0) - 2.0 * specfun::digamma(n + 1.0);

    double sum_lny = 0.0, sum_log1m = 0.0, sum_ratio = 0.0;
    for (double y : data) {
        const double ln_y = std::log(y);
        const double u = ia2 * ln_y;
        const double one_minus = -std::expm1(u);  // 1 - y^(1/alpha^2)
        sum_lny += ln_y;
        sum_log1m += log1mexp(u);
        sum_ratio += std::exp(u) * ln_y / one_minus;
    }
    return GomburScore{
        m * psi_term + sum_log1m + ia2 * sum_lny,
        -2.0 * m / alpha + 2.0 * n * ia3 * sum_ratio - 2.0 * (n + 1.0) * ia3 * sum_lny,
    };
}

GomburScore score_gombur2(double n, double alpha, std::span<const double> data) {
    if (!(n > 1.0) || !(alpha > 0.0)) {
        throw std::domain_error("score_gombur2 requires interior parameters n > 1, alpha > 0");
    }
    const double ia2 = 1.0 / (alpha * alpha);
    const double ia3 = ia2 / alpha;
    const double m = static_cast<double>(data.size());
    const double psi_term = specfun::digamma(n + 1.0) - specfun::digamma((n + 1.0) / 2.0);

    double sum_lny = 0.0, sum_log1m = 0.0, sum_ratio = 0.0;
    for (double y : data) {
        const double ln_y = std::log(y);
        const double u = ia2 * ln_y;
        sum_lny += ln_y;
        sum_log1m += log1mexp(u);
        sum_ratio += std::exp(u) * ln_y / (-std::expm1(u));
    }
    return GomburScore{
        m * psi_term + 0.5 * sum_log1m + 0.5 * ia2 * sum_lny,
        -2.0 * m / alpha + (n - 1.0) * ia3 * sum_ratio - (n + 1.0) * ia3 * sum_lny,
    };
}

} // namespace unitfit
