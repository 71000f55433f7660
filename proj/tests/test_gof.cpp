#include <doctest.h>

#include "oracles.hpp"
#include "unitfit/dataset.hpp"
#include "unitfit/distributions.hpp"
#include "unitfit/gof.hpp"

#include <cmath>
#include <stdexcept>

using namespace unitfit;

TEST_CASE("ks statistic on tiny samples") {
    const double one[] = {0.3};
    CHECK(ks_statistic(one, [](double) { return 0.5; }) == doctest::Approx(0.5));
    CHECK(ks_reported_statistic(one, [](double) { return 0.5; }) == doctest::Approx(0.5));

    // sample placed exactly at the fitted quantiles (2i-1)/(2n)
    const int n = 8;
    std::vector<double> interleaved;
    for (int i = 1; i <= n; ++i) interleaved.push_back((2.0 * i - 1.0) / (2.0 * n));
    const auto identity = [](double y) { return y; };
    CHECK(ks_statistic(interleaved, identity) == doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-12));
}

TEST_CASE("ks statistics at the reference dwelling optimum") {
    const auto& data = load_embedded(1).values;
    const FamilySpec spec(Family::gombur1, {5.7248, 2.4988});
    const auto F = [&](double y) { return cdf(spec, y); };
    CHECK(std::fabs(ks_statistic(data, F) - 0.1654) <= 0.002);
    CHECK(std::fabs(ks_reported_statistic(data, F) - 0.1654) <= 0.002);
}

TEST_CASE("the reported distance and the supremum differ when the fit sits above the steps") {
    // the canada death-rate fit is the canonical example
    const auto& data = load_embedded(6).values;
    const FamilySpec spec(Family::gombur1, {41.02961, 1.4623});
    const auto F = [&](double y) { return cdf(spec, y); };
    CHECK(std::fabs(ks_reported_statistic(data, F) - 0.0781) <= 0.002);
    CHECK(std::fabs(ks_statistic(data, F) - 0.0959) <= 0.002);
    CHECK(ks_statistic(data, F) >= ks_reported_statistic(data, F));
}

TEST_CASE("ks p-value limits and frozen points") {
    CHECK(ks_pvalue(0.0, 31) == 1.0);
    CHECK(ks_pvalue(1e-6, 31) == 1.0);
    CHECK(ks_pvalue(1.0, 500) <= 1e-12);
    // frozen against an independent high-precision evaluation of the series
    CHECK(ks_pvalue(0.1654, 31) == doctest::Approx(0.3348783189).epsilon(1e-8));
    CHECK(ks_pvalue(0.0781, 56) == doctest::Approx(0.8708761645).epsilon(1e-8));
    CHECK(ks_pvalue(0.3202, 20) == doctest::Approx(0.0252869857).epsilon(1e-8));
    for (double d : {0.05, 0.2, 0.5}) {
        const double p = ks_pvalue(d, 25);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
    CHECK_THROWS_AS(ks_pvalue(-0.1, 10), std::domain_error);
    CHECK_THROWS_AS(ks_pvalue(0.5, 0), std::domain_error);
}

TEST_CASE("cvm statistic") {
    const double one[] = {0.3};
    CHECK(cvm_statistic(one, [](double) { return 0.5; }) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-12));

    const int n = 10;
    std::vector<double> perfect;
    for (int i = 1; i <= n; ++i) perfect.push_back((2.0 * i - 1.0) / (2.0 * n));
    CHECK(cvm_statistic(perfect, [](double y) { return y; }) ==
          doctest::Approx(1.0 / (12.0 * n)).epsilon(1e-12));

    const auto& data = load_embedded(1).values;
    const FamilySpec spec(Family::gombur1, {5.7248, 2.4988});
    CHECK(std::fabs(cvm_statistic(data, [&](double y) { return cdf(spec, y); }) - 0.1515) <=
          0.005);
}

TEST_CASE("ad statistic") {
    const double one[] = {0.3};
    CHECK(ad_statistic(one, [](double) { return 0.5; }) ==
          doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-12));

    const auto& data = load_embedded(1).values;
    const FamilySpec g1(Family::gombur1, {5.7248, 2.4988});
    CHECK(std::fabs(ad_statistic(data, [&](double y) { return cdf(g1, y); }) - 0.8727) <= 0.01);
    const FamilySpec beta(Family::beta, {0.5086, 14.036});
    CHECK(std::fabs(ad_statistic(data, [&](double y) { return cdf(beta, y); }) - 1.288) <= 0.01);
}

TEST_CASE("ad clamps boundary cdf values and flags it") {
    const double data[] = {0.2, 0.8};
    bool clamped = false;
    const double v = ad_statistic(data, [](double y) { return y < 0.5 ? 0.0 : 1.0; }, &clamped);
    CHECK(clamped);
    CHECK(std::isfinite(v));
    clamped = true;
    ad_statistic(data, [](double y) { return y; }, &clamped);
    CHECK_FALSE(clamped);
}

TEST_CASE("information criteria") {
    const auto c = criteria(81.0731, 2, 31);
    CHECK(std::fabs(c.aic - (-158.1462)) <= 0.001);
    CHECK(std::fabs(c.caic - (-157.7176)) <= 0.001);
    CHECK(std::fabs(c.bic - (-155.2782)) <= 0.001);
    CHECK(std::fabs(c.hqic - (-157.2113)) <= 0.001);

    // formula identity at small n
    const auto h = criteria(0.0, 1, 15);
    CHECK(h.hqic == doctest::Approx(2.0 * std::log(std::log(15.0))).epsilon(1e-14));
    CHECK(h.aic == doctest::Approx(2.0).epsilon(1e-14));

    const auto c6 = criteria(85.783, 2, 56);
    CHECK(std::fabs(c6.aic - (-167.5661)) <= 0.001);
    CHECK(std::fabs(c6.bic - (-163.5154)) <= 0.001);

    CHECK_THROWS_AS(criteria(0.0, 2, 3), std::domain_error);
}

TEST_CASE("corrected aic penalty matches the reference tables") {
    struct Row { double ll; int k, n; double aic, caic; };
    const Row rows[] = {
        {78.7767, 2, 31, -153.5535, -153.1249},  // dwelling, first competitor
        {81.0731, 2, 31, -158.1462, -157.7176},  // dwelling, generalized form
        {14.2281, 2, 20, -24.4562, -23.7503},    // flood, generalized form
        {85.783, 2, 56, -167.5661, -167.3396},   // canada, generalized form
        {30.0395, 1, 20, -58.079, -57.8567},     // quality, one-parameter family
    };
    for (const auto& r : rows) {
        const auto c = criteria(r.ll, r.k, r.n);
        CHECK(std::fabs(c.aic - r.aic) <= 0.001);
        CHECK(std::fabs(c.caic - r.caic) <= 0.001);
        CHECK(std::fabs((c.caic - c.aic) -
                        (2.0 * r.k * r.n / double(r.n - r.k - 1) - 2.0 * r.k)) <= 1e-10);
    }
}

TEST_CASE("statistics equal their literal transcriptions") {
    oracles::Rng rng(57);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = rng.uniform_int(1, 12);
        std::vector<double> data;
        for (int i = 0; i < n; ++i) data.push_back(rng.uniform(0.02, 0.98));
        const double power = rng.uniform(0.4, 2.5);
        const auto F = [power](double y) { return std::pow(y, power); };
        CHECK(std::fabs(ks_statistic(data, F) - oracles::brute_ks(data, F)) <= 1e-12);
        CHECK(std::fabs(cvm_statistic(data, F) - oracles::brute_cvm(data, F)) <= 1e-12);
        CHECK(std::fabs(ad_statistic(data, F) - oracles::brute_ad(data, F)) <= 1e-12);
    }
}

TEST_CASE("ks is invariant under the probability integral transform") {
    const std::vector<std::pair<Family, std::vector<double>>> specs = {
        {Family::beta, {2.4, 2.8}},      {Family::kumaraswamy, {2.0, 3.0}},
        {Family::topp_leone, {2.24}},    {Family::unit_lindley, {1.63}},
        {Family::mbur, {1.04}},          {Family::gombur1, {5.72, 2.5}},
        {Family::gombur2, {12.45, 2.5}},
    };
    for (const auto& [family, params] : specs) {
        const FamilySpec spec(family, params);
        for (int id : {1, 4, 10}) {
            const auto& data = load_embedded(id).values;
            const auto F = [&](double y) { return cdf(spec, y); };
            const double direct = ks_statistic(data, F);
            std::vector<double> transformed;
            for (double y : data) transformed.push_back(cdf(spec, y));
            const double uniform = ks_statistic(transformed, [](double u) { return u; });
            CHECK(std::fabs(direct - uniform) <= 1e-12);
        }
    }
}

TEST_CASE("gof report is consistent") {
    const auto& data = load_embedded(1).values;
    const FamilySpec spec(Family::gombur1, {5.7248, 2.4988});
    const auto F = [&](double y) { return cdf(spec, y); };
    const GofReport r = gof_report(data, F);
    CHECK(r.ks == ks_reported_statistic(data, F));
    CHECK(r.ks_sup == ks_statistic(data, F));
    CHECK(r.ks_p == ks_pvalue(r.ks_sup, static_cast<int>(data.size())));
    CHECK(r.h0_rejected == (r.ks_p < 0.05));
    CHECK(r.ks >= 0.0);
    CHECK(r.ks <= 1.0);
    CHECK(r.cvm >= 1.0 / (12.0 * data.size()));
}
