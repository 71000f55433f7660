#include "unitfit/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unitfit {

FamilyBlock fit_family_block(const Dataset& data, Family family, const SimplexConfig& config) {
    FamilyBlock block{family,
                      FitResult(FamilySpec(family, std::vector<double>(param_count(family), 1.0))),
                      GofReport{}, CriteriaReport{}, {}};
    try {
        block.fit = fit_mle(family, data, config);
        const FamilySpec& spec = block.fit.spec;
        block.gof = gof_report(data.values, [&spec](double y) { return cdf(spec, y); });
        block.criteria = criteria(block.fit.log_lik, param_count(family), data.n());
    } catch (const std::exception& e) {
        block.failure = e.what();
    }
    return block;
}

ComparisonTable build_comparison(const Dataset& data, std::span<const Family> families,
                                 const SimplexConfig& config) {
    if (families.empty()) throw std::invalid_argument("build_comparison: no families requested");
    ComparisonTable table;
    table.dataset = data.name;
    table.n_obs = data.n();
    table.blocks.reserve(families.size());
    for (Family f : families) table.blocks.push_back(fit_family_block(data, f, config));
    return table;
}

namespace {

constexpr int kCurvePoints = 512;

std::vector<double> sorted_sample(const Dataset& data) {
    std::vector<double> s = data.values;
    std::sort(s.begin(), s.end());
    return s;
}

Series sampled_curve(const FamilySpec& spec, bool density) {
    Series out;
    out.label = std::string(family_name(spec.family));
    out.points.reserve(kCurvePoints);
    for (int j = 1; j <= kCurvePoints; ++j) {
        const double x = static_cast<double>(j) / (kCurvePoints + 1);
        out.points.emplace_back(x, density ? pdf(spec, x) : cdf(spec, x));
    }
    return out;
}

} // namespace

PlotSeries ecdf_overlay(const Dataset& data, std::span<const FamilySpec> specs) {
    PlotSeries plot{PlotKind::ecdf_overlay, {}, {}};
    Series ecdf{"ecdf", {}};
    const auto s = sorted_sample(data);
    const double n = static_cast<double>(s.size());
    for (size_t i = 0; i < s.size(); ++i) ecdf.points.emplace_back(s[i], (i + 1) / n);
    plot.series.push_back(std::move(ecdf));
    for (const auto& spec : specs) plot.series.push_back(sampled_curve(spec, false));
    return plot;
}

PlotSeries pdf_overlay(const Dataset& data, std::span<const FamilySpec> specs) {
    PlotSeries plot{PlotKind::pdf_overlay, {}, {}};
    const auto s = sorted_sample(data);
    const int n = static_cast<int>(s.size());
    const int bins = static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    const double lo = s.front(), hi = s.back();
    const double width = (hi - lo) / bins;
    plot.bins.assign(bins, HistBin{});
    for (int b = 0; b < bins; ++b) {
        plot.bins[b].lo = lo + b * width;
        plot.bins[b].hi = b + 1 == bins ? hi : lo + (b + 1) * width;
    }
    for (double y : s) {
        int b = width > 0.0 ? static_cast<int>((y - lo) / width) : 0;
        b = std::clamp(b, 0, bins - 1);
        plot.bins[b].density += 1.0;
    }
    for (auto& bin : plot.bins) bin.density /= n * width;
    for (const auto& spec : specs) plot.series.push_back(sampled_curve(spec, true));
    return plot;
}

PlotSeries pp_points(const Dataset& data, const FamilySpec& spec) {
    PlotSeries plot{PlotKind::pp, {}, {}};
    Series pts{std::string(family_name(spec.family)), {}};
    const auto s = sorted_sample(data);
    const double n = static_cast<double>(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        pts.points.emplace_back(cdf(spec, s[i]), (i + 0.5) / n);
    }
    plot.series.push_back(std::move(pts));
    return plot;
}

PlotSeries qq_points(const Dataset& data, const FamilySpec& spec) {
    PlotSeries plot{PlotKind::qq, {}, {}};
    Series pts{std::string(family_name(spec.family)), {}};
    const auto s = sorted_sample(data);
    const double n = static_cast<double>(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        pts.points.emplace_back(quantile(spec, (i + 0.5) / n), s[i]);
    }
    plot.series.push_back(std::move(pts));
    return plot;
}

} // namespace unitfit
