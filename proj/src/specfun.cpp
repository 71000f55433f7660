#include "unitfit/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace unitfit::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double x, const char* fn) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::domain_error(std::string(fn) + ": argument must be a finite positive real, got " +
                                std::to_string(x));
    }
}

// Lanczos approximation, g = 7, 9 coefficients. Good to ~1e-14 relative for x > 0.5.
double lanczos_log_gamma(double x) {
    static const double coeff[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double sum = coeff[0];
    for (int i = 1; i < 9; ++i) sum += coeff[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    constexpr int max_iter = 300;
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) break;
    }
    return h;
}

} // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x < 0.5) {
        // reflection keeps the Lanczos argument away from the pole at 0
        return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
    }
    return lanczos_log_gamma(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    // upward recurrence psi(x) = psi(x+1) - 1/x until the asymptotic series applies
    double acc = 0.0;
    while (x < 6.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double u = inv * inv;
    // psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k)
    const double series =
        u * (1.0 / 12 -
        u * (1.0 / 120 -
        u * (1.0 / 252 -
        u * (1.0 / 240 -
        u * (1.0 / 132 -
        u * (691.0 / 32760 -
        u / 12))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double reg_inc_beta(double x, double a, double b) {
    require_positive(a, "reg_inc_beta");
    require_positive(b, "reg_inc_beta");
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw std::domain_error("reg_inc_beta: x must lie in [0, 1], got " + std::to_string(x));
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double ln_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

} // namespace unitfit::specfun
