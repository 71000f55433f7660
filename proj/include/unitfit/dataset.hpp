#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unitfit {

/// Named sample of observations, every value strictly inside (0, 1).
struct Dataset {
    int id = 0;  // 1..14 for the embedded corpus, 0 for external data
    std::string name;
    std::vector<double> values;

    int n() const { return static_cast<int>(values.size()); }
};

struct DescriptiveStats {
    double min;
    double mean;
    double std_dev;   // n-1 denominator
    double skewness;  // bias-corrected sample skewness; NaN for n < 3
    double kurtosis;  // bias-corrected, non-excess; NaN for n < 4
    double q25;
    double q50;
    double q75;
    double max;
};

/// Raised when input text cannot be tokenized/parsed as a sample.
/// The message names the offending token and its 1-based position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The fourteen embedded datasets, ids 1..14, in canonical order.
const std::vector<Dataset>& embedded_datasets();

/// Embedded dataset by id; throws std::out_of_range for ids outside 1..14.
const Dataset& load_embedded(int id);

/// Embedded dataset by name ("dwelling", "flood", ...); nullptr when unknown.
const Dataset* find_embedded(std::string_view name);

/// Parse a plain-text sample: values separated by whitespace, commas or
/// semicolons; lines whose first non-blank character is '#' are comments.
/// Throws ParseError for malformed tokens and std::domain_error for values
/// outside the open interval (0, 1).
Dataset parse_values(std::string_view text, std::string name = "external");

/// Read and parse a file; throws std::ios_base::failure when unreadable.
Dataset load_file(const std::filesystem::path& path);

/// Full-precision text form accepted back by parse_values.
std::string serialize(const Dataset& data);

/// Descriptive statistics; requires n >= 2 and positive variance.
DescriptiveStats describe(std::span<const double> values);

/// Sample quantile by midpoint position: interpolates the sorted sample at
/// p*n + 0.5, clamped to [1, n].
double sample_quantile(std::span<const double> sorted_values, double p);

} // namespace unitfit
