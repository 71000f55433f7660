#pragma once

#include "unitfit/dataset.hpp"
#include "unitfit/gof.hpp"
#include "unitfit/inference.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unitfit {

/// One family column of a comparison table. When the fit ran but did not
/// converge, `fit.converged` is false; `failure` is set only when fitting
/// itself failed outright.
struct FamilyBlock {
    Family family;
    FitResult fit;
    GofReport gof;
    CriteriaReport criteria;
    std::string failure;  // empty on success

    bool failed() const { return !failure.empty(); }
};

/// The per-dataset comparison: one block per requested family, in request order.
struct ComparisonTable {
    std::string dataset;
    int n_obs = 0;
    std::vector<FamilyBlock> blocks;
};

/// Fit one family and assemble its full block (inference + GOF + criteria).
FamilyBlock fit_family_block(const Dataset& data, Family family,
                             const SimplexConfig& config = {});

/// Fit every requested family; families that fail are included with a failure
/// marker rather than omitted.
ComparisonTable build_comparison(const Dataset& data, std::span<const Family> families,
                                 const SimplexConfig& config = {});

enum class PlotKind { ecdf_overlay, pdf_overlay, pp, qq };

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct HistBin {
    double lo;
    double hi;
    double density;
};

struct PlotSeries {
    PlotKind kind;
    std::vector<Series> series;
    std::vector<HistBin> bins;  // pdf_overlay only; bar areas sum to 1
};

/// Empirical staircase (sorted sample against step heights i/n) plus each
/// family's CDF sampled on 512 equispaced interior points.
PlotSeries ecdf_overlay(const Dataset& data, std::span<const FamilySpec> specs);

/// Density-normalized histogram (Sturges bin count, ceil(log2 n) + 1, spanning
/// [min, max]) plus each family's density on 512 equispaced interior points.
PlotSeries pdf_overlay(const Dataset& data, std::span<const FamilySpec> specs);

/// Probability-probability points (F(y_(i)), (i - 0.5)/n), i = 1..n.
PlotSeries pp_points(const Dataset& data, const FamilySpec& spec);

/// Quantile-quantile points (quantile((i - 0.5)/n), y_(i)), i = 1..n.
PlotSeries qq_points(const Dataset& data, const FamilySpec& spec);

} // namespace unitfit
