#include "unitfit/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace unitfit {

namespace {

std::vector<double> sorted_copy(std::span<const double> data) {
    if (data.empty()) throw std::domain_error("goodness-of-fit statistics need a nonempty sample");
    std::vector<double> s(data.begin(), data.end());
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

double ks_statistic(std::span<const double> data, const CdfFn& cdf) {
    const auto s = sorted_copy(data);
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        d = std::max(d, std::max((i + 1) / n - f, f - i / n));
    }
    return d;
}

double ks_reported_statistic(std::span<const double> data, const CdfFn& cdf) {
    const auto s = sorted_copy(data);
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
        d = std::max(d, std::fabs(cdf(s[i]) - (i + 1) / n));
    }
    return d;
}

double ks_pvalue(double d, int n) {
    if (n < 1 || d < 0.0 || d > 1.0) {
        throw std::domain_error("ks_pvalue: need 0 <= d <= 1 and n >= 1");
    }
    const double rn = std::sqrt(static_cast<double>(n));
    const double lambda = (rn + 0.12 + 0.11 / rn) * d;
    double sum = 0.0;
    for (int k = 1; k <= 101; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-12) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double cvm_statistic(std::span<const double> data, const CdfFn& cdf) {
    const auto s = sorted_copy(data);
    const double n = static_cast<double>(s.size());
    double acc = 1.0 / (12.0 * n);
    for (size_t i = 0; i < s.size(); ++i) {
        const double r = cdf(s[i]) - (2.0 * (i + 1) - 1.0) / (2.0 * n);
        acc += r * r;
    }
    return acc;
}

double ad_statistic(std::span<const double> data, const CdfFn& cdf, bool* clamped) {
    const auto s = sorted_copy(data);
    const size_t n = s.size();
    bool hit = false;
    auto clamp_f = [&](double f) {
        if (f < 1e-300 || f > 1.0 - 1e-15) {
            hit = true;
            return std::clamp(f, 1e-300, 1.0 - 1e-15);
        }
        return f;
    };
    std::vector<double> f(n);
    for (size_t i = 0; i < n; ++i) f[i] = clamp_f(cdf(s[i]));
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double w = (2.0 * (i + 1) - 1.0) / static_cast<double>(n);
        acc += w * (std::log(f[i]) + std::log(1.0 - f[n - 1 - i]));
    }
    if (clamped) *clamped = hit;
    return -static_cast<double>(n) - acc;
}

CriteriaReport criteria(double log_lik, int k, int n) {
    if (n <= k + 1) {
        throw std::domain_error("criteria: need n > k + 1, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
    }
    const double m2ll = -2.0 * log_lik;
    return CriteriaReport{
        m2ll + 2.0 * k,
        m2ll + 2.0 * k * n / static_cast<double>(n - k - 1),
        m2ll + k * std::log(static_cast<double>(n)),
        m2ll + 2.0 * k * std::log(std::log(static_cast<double>(n))),
        log_lik,
        k,
        n,
    };
}

GofReport gof_report(std::span<const double> data, const CdfFn& cdf) {
    GofReport r{};
    r.ks = ks_reported_statistic(data, cdf);
    r.ks_sup = ks_statistic(data, cdf);
    r.ks_p = ks_pvalue(r.ks_sup, static_cast<int>(data.size()));
    r.h0_rejected = r.ks_p < 0.05;
    r.cvm = cvm_statistic(data, cdf);
    r.ad = ad_statistic(data, cdf, &r.ad_clamped);
    return r;
}

} // namespace unitfit
