#include <doctest.h>

#include "oracles.hpp"
#include "unitfit/dataset.hpp"
#include "unitfit/inference.hpp"

#include <cmath>

using namespace unitfit;

TEST_CASE("finite-difference hessian on quadratics") {
    const auto h1 = hessian_fd(
        [](std::span<const double> t) { return -0.5 * (t[0] - 1.0) * (t[0] - 1.0); },
        std::vector<double>{1.3});
    CHECK(std::fabs(h1[0][0] - (-1.0)) <= 1e-8);

    const auto h2 = hessian_fd(
        [](std::span<const double> t) {
            return -t[0] * t[0] - 3.0 * t[1] * t[1] - t[0] * t[1];
        },
        std::vector<double>{0.4, -0.2});
    CHECK(std::fabs(h2[0][0] - (-2.0)) <= 1e-6);
    CHECK(std::fabs(h2[0][1] - (-1.0)) <= 1e-6);
    CHECK(std::fabs(h2[1][0] - (-1.0)) <= 1e-6);
    CHECK(std::fabs(h2[1][1] - (-6.0)) <= 1e-6);
    CHECK(h2[0][1] == h2[1][0]);
}

TEST_CASE("hessian signals infeasible stencil points") {
    CHECK_THROWS_AS(hessian_fd(
                        [](std::span<const double> t) {
                            return t[0] > 1.0 ? std::numeric_limits<double>::quiet_NaN()
                                              : -t[0] * t[0];
                        },
                        std::vector<double>{1.0}),
                    HessianError);
}

TEST_CASE("wald test") {
    const auto w = wald_test(5.7248, 0.3004);
    CHECK(std::fabs(w.z - 19.06) <= 0.01);
    CHECK(w.label == "P<0.001");

    const auto zero = wald_test(0.0, 1.0);
    CHECK(zero.z == 0.0);
    CHECK(zero.p == 1.0);
    CHECK(zero.label == "1.0000");

    const auto borderline = wald_test(1.96, 1.0);
    CHECK(std::fabs(borderline.p - 0.05) <= 1e-3);

    CHECK_THROWS_AS(wald_test(1.0, 0.0), std::domain_error);
}

TEST_CASE("small matrix helpers") {
    const Matrix m = {{2.0, 1.0}, {1.0, 3.0}};
    CHECK(matrix_det(m) == doctest::Approx(5.0).epsilon(1e-14));
    const Matrix inv = matrix_inverse(m);
    CHECK(inv[0][0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(inv[0][1] == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(inv[1][1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK_THROWS_AS(matrix_inverse(Matrix{{1.0, 2.0}, {2.0, 4.0}}), std::domain_error);
}

TEST_CASE("full fit of the generalized family on the dwelling sample") {
    const auto fit = fit_mle(Family::gombur1, load_embedded(1));
    REQUIRE(fit.converged);
    REQUIRE(fit.vcov_ok);
    CHECK(std::fabs(fit.spec.params[0] - 5.7248) <= 0.01);
    CHECK(std::fabs(fit.spec.params[1] - 2.4988) <= 0.005);
    CHECK(std::fabs(fit.log_lik - 81.0731) <= 0.005);
    // variance block and derived quantities
    CHECK(std::fabs(fit.vcov_scaled[0][0] - 2.7974) <= 0.05 * 2.7974);
    CHECK(std::fabs(fit.vcov_scaled[1][1] - 0.008) <= 0.05 * 0.008);
    CHECK(std::fabs(fit.vcov_scaled[0][1] - 0.0255) <= 0.05 * 0.0255);
    CHECK(std::fabs(fit.se[0] - 0.3004) <= 0.01);
    CHECK(std::fabs(fit.se[1] - 0.0161) <= 0.001);
    CHECK(std::fabs(fit.determinant - 0.0218) <= 0.15 * 0.0218);
    CHECK(fit.wald_label[0] == "P<0.001");
    CHECK(fit.wald_label[1] == "P<0.001");
}

TEST_CASE("one-parameter fit carries a scalar variance block") {
    const auto fit = fit_mle(Family::mbur, load_embedded(1));
    REQUIRE(fit.converged);
    REQUIRE(fit.vcov_ok);
    CHECK(std::fabs(fit.spec.params[0] - 2.3519) <= 0.002);
    CHECK(std::fabs(fit.vcov_scaled[0][0] - 0.023) <= 0.05 * 0.023);
    CHECK(std::fabs(fit.se[0] - 0.0272) <= 0.05 * 0.0272);
    CHECK(fit.vcov_scaled.size() == 1);
    CHECK(fit.determinant == doctest::Approx(fit.vcov_scaled[0][0]));
}

TEST_CASE("the second form reports the reparameterized inference block") {
    const auto f1 = fit_mle(Family::gombur1, load_embedded(1));
    const auto f2 = fit_mle(Family::gombur2, load_embedded(1));
    REQUIRE(f1.converged);
    REQUIRE(f2.converged);
    CHECK(std::fabs(f2.spec.params[0] - 12.4496) <= 0.02);
    CHECK(std::fabs(f2.spec.params[0] - (2.0 * f1.spec.params[0] + 1.0)) <= 1e-3);
    CHECK(std::fabs(f2.se[0] - 0.6008) <= 0.01);
    CHECK(std::fabs(f2.log_lik - f1.log_lik) <= 1e-6);
    // variance block follows the jacobian of n -> 2n + 1
    CHECK(std::fabs(f2.vcov_scaled[0][0] - 4.0 * f1.vcov_scaled[0][0]) <=
          0.02 * 4.0 * f1.vcov_scaled[0][0]);
    CHECK(std::fabs(f2.vcov_scaled[0][1] - 2.0 * f1.vcov_scaled[0][1]) <=
          0.02 * std::fabs(2.0 * f1.vcov_scaled[0][1]));
    CHECK(std::fabs(f2.vcov_scaled[1][1] - f1.vcov_scaled[1][1]) <=
          0.01 * f1.vcov_scaled[1][1]);
    CHECK(std::fabs(f2.se[0] - 2.0 * f1.se[0]) <= 0.01 * 2.0 * f1.se[0]);
}

TEST_CASE("analytic score vanishes at every converged optimum") {
    for (int id : {1, 4, 10}) {
        const auto& data = load_embedded(id);
        const auto f1 = fit_mle(Family::gombur1, data);
        REQUIRE(f1.converged);
        const auto s = score_gombur1(f1.spec.params[0], f1.spec.params[1], data.values);
        const double norm = std::hypot(s.d_n, s.d_alpha);
        CHECK(norm <= 1e-3 * (1.0 + std::fabs(f1.log_lik)));
    }
}

TEST_CASE("standard errors and determinant recompute from the variance block") {
    const auto fit = fit_mle(Family::kumaraswamy, load_embedded(1));
    REQUIRE(fit.vcov_ok);
    for (size_t i = 0; i < fit.se.size(); ++i) {
        CHECK(fit.se[i] ==
              doctest::Approx(std::sqrt(fit.vcov_scaled[i][i] / fit.n_obs)).epsilon(1e-14));
    }
    const double det = fit.vcov_scaled[0][0] * fit.vcov_scaled[1][1] -
                       fit.vcov_scaled[0][1] * fit.vcov_scaled[1][0];
    CHECK(fit.determinant == doctest::Approx(det).epsilon(1e-12));
    CHECK(fit.determinant >= 0.0);
}

TEST_CASE("fit precondition on the sample size") {
    Dataset tiny{0, "tiny", {0.3, 0.5, 0.7}};
    CHECK_THROWS_AS(fit_mle(Family::beta, tiny), std::domain_error);
    CHECK_NOTHROW(fit_mle(Family::mbur, tiny));
}

TEST_CASE("start grid shapes") {
    CHECK(start_grid(Family::beta).size() == 9);
    CHECK(start_grid(Family::gombur1).size() == 9);
    CHECK(start_grid(Family::mbur).size() == 3);
    CHECK(start_grid(Family::topp_leone).size() == 3);
    for (const auto& s : start_grid(Family::gombur2)) CHECK(s[0] > 1.0);
}
