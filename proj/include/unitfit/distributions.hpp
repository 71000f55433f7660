#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace unitfit {

/// The seven distribution families supported on the open unit interval.
enum class Family {
    beta,
    kumaraswamy,
    topp_leone,
    unit_lindley,
    mbur,
    gombur1,
    gombur2,
};

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::beta,      Family::kumaraswamy, Family::topp_leone, Family::unit_lindley,
    Family::mbur,      Family::gombur1,     Family::gombur2,
};

int param_count(Family family);
std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
std::span<const char* const> param_names(Family family);

/// True when params are finite and inside the family's parameter domain:
///   beta, kumaraswamy: alpha > 0, beta > 0
///   topp_leone, unit_lindley: theta > 0
///   mbur: alpha > 0
///   gombur1: n >= 0, alpha > 0
///   gombur2: n >= 1, alpha > 0
bool params_in_domain(Family family, std::span<const double> params);

/// Throws std::domain_error when params_in_domain is false or the count is wrong.
void validate_params(Family family, std::span<const double> params);

/// A family together with a concrete parameter vector. Validates on construction.
struct FamilySpec {
    Family family;
    std::vector<double> params;

    FamilySpec(Family f, std::vector<double> p);
};

/// Pointwise log-density; throws std::domain_error unless 0 < y < 1.
double log_pdf(const FamilySpec& spec, double y);

/// Pointwise density, exp(log_pdf).
double pdf(const FamilySpec& spec, double y);

/// Distribution function; accepts the closed interval [0, 1] and returns the
/// boundary values 0 and 1 there.
double cdf(const FamilySpec& spec, double y);

/// Inverse distribution function for p strictly inside (0, 1).
/// Closed form for kumaraswamy and topp_leone, numeric inversion otherwise.
double quantile(const FamilySpec& spec, double p);

/// Total log-likelihood over the sample. Returns -infinity when any pointwise
/// log-density fails to be finite, so an optimizer can treat the parameter
/// point as infeasible.
double log_likelihood(const FamilySpec& spec, std::span<const double> data);

struct GomburScore {
    double d_n;
    double d_alpha;
};

/// Analytic total score of the two-parameter generalized families, summed over
/// the sample. Parameters must be strictly interior (n > 0 resp. n > 1).
GomburScore score_gombur1(double n, double alpha, std::span<const double> data);
GomburScore score_gombur2(double n, double alpha, std::span<const double> data);

} // namespace unitfit
