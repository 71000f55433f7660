#pragma once

#include <functional>
#include <span>

namespace unitfit {

using CdfFn = std::function<double(double)>;

/// Goodness-of-fit block of a comparison table.
///
/// `ks` is the distance the tables report: max_i |F(y_(i)) - i/n|, the
/// discrepancy at the upper step heights of the empirical CDF. `ks_sup` is the
/// exact two-sided supremum of |F_n - F| for the right-continuous step eCDF,
/// which is the statistic the p-value and the H0 decision are based on.
struct GofReport {
    double ks;
    double ks_sup;
    double ks_p;
    bool h0_rejected;  // ks_p < 0.05
    double ad;
    double cvm;
    bool ad_clamped;  // fitted CDF hit 0/1 at a sample point and was clamped
};

struct CriteriaReport {
    double aic;
    double caic;
    double bic;
    double hqic;
    double log_lik;
    int k;
    int n;
};

/// Exact supremum of |F_n - F|: max_i max(i/n - F(y_(i)), F(y_(i)) - (i-1)/n)
/// over the sorted sample.
double ks_statistic(std::span<const double> data, const CdfFn& cdf);

/// The distance printed in the comparison tables: max_i |F(y_(i)) - i/n|.
double ks_reported_statistic(std::span<const double> data, const CdfFn& cdf);

/// Kolmogorov survival probability with the small-sample adjustment
/// lambda = (sqrt(n) + 0.12 + 0.11/sqrt(n)) * d, series truncated below 1e-12,
/// clamped to [0, 1].
double ks_pvalue(double d, int n);

/// 1/(12n) + sum_i (F(y_(i)) - (2i-1)/(2n))^2 over the sorted sample.
double cvm_statistic(std::span<const double> data, const CdfFn& cdf);

/// -n - sum_i ((2i-1)/n) [ln F(y_(i)) + ln(1 - F(y_(n-i+1)))] over the sorted
/// sample. F values are clamped to [1e-300, 1 - 1e-15]; *clamped reports
/// whether clamping occurred.
double ad_statistic(std::span<const double> data, const CdfFn& cdf, bool* clamped = nullptr);

/// Information criteria. Requires n > k + 1 (the small-sample AIC denominator).
CriteriaReport criteria(double log_lik, int k, int n);

/// All goodness-of-fit statistics for one fitted CDF.
GofReport gof_report(std::span<const double> data, const CdfFn& cdf);

} // namespace unitfit
