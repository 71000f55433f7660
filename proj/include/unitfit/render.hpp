#pragma once

#include "unitfit/report.hpp"

#include <json.hpp>

#include <string>

namespace unitfit {

using Json = nlohmann::ordered_json;

/// Canonical machine form of a comparison: top-level keys `dataset`,
/// `n_obs` and `families`; each family block mirrors the fit, GOF and
/// criteria field names. The human renderers below consume this form, so
/// every output format is derived from the same numbers.
Json comparison_to_json(const ComparisonTable& table);

Json describe_to_json(const Dataset& data, const DescriptiveStats& stats);

/// Markdown rendering (reference-style comparison table, 4 decimal places).
std::string comparison_markdown(const Json& doc);
std::string describe_markdown(const Json& doc);

/// Long-format CSV (dataset,family,field,value) at full precision.
std::string comparison_csv(const Json& doc);
std::string describe_csv(const Json& doc);

/// Long-format CSV of plot points: series,x,y (histogram bins as
/// hist_lo,hist_hi,density rows in a leading block for density overlays).
std::string plot_csv(const PlotSeries& plot);

/// Standalone SVG 1.1: one polyline per series, diagonal reference line for
/// the probability and quantile plots, histogram bars for density overlays.
std::string plot_svg(const PlotSeries& plot, const std::string& title);

/// Fixed-point with 4 decimals (human formats) and shortest round-trip form
/// (machine formats).
std::string format_fixed(double v);
std::string format_full(double v);

} // namespace unitfit
