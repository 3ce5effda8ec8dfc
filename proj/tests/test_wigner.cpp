#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bwma/wigner.hpp"

using namespace bwma;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("valid_jm") {
    CHECK(valid_jm(0.5, 0.5));
    CHECK(valid_jm(1.0, -1.0));
    CHECK(valid_jm(1.5, -0.5));
    CHECK_FALSE(valid_jm(0.7, 0.5));
    CHECK_FALSE(valid_jm(1.0, 0.5));
    CHECK_FALSE(valid_jm(1.0, 2.0));
    CHECK_FALSE(valid_jm(-1.0, 0.0));
    CHECK_FALSE(valid_jm(13.0, 0.0));
}

TEST_CASE("little_d anchors") {
    const double th = 0.83;
    CHECK(little_d(1.0, 0.0, 0.0, th) == doctest::Approx(std::cos(th)).epsilon(1e-14));
    CHECK(little_d(1.0, 1.0, 0.0, th) ==
          doctest::Approx(-std::sin(th) / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(little_d(0.5, 0.5, 0.5, th) == doctest::Approx(std::cos(th / 2.0)).epsilon(1e-14));
    CHECK(little_d(0.5, -0.5, 0.5, th) == doctest::Approx(std::sin(th / 2.0)).epsilon(1e-14));

    // theta = 0 is the identity
    for (double j : {0.5, 1.0, 1.5, 2.0}) {
        const auto ms = m_values(j);
        for (std::size_t r = 0; r < ms.size(); ++r)
            for (std::size_t c = 0; c < ms.size(); ++c)
                CHECK(little_d(j, ms[r], ms[c], 0.0) ==
                      doctest::Approx(r == c ? 1.0 : 0.0).epsilon(1e-14));
    }

    // theta = pi: antidiagonal with sign (-1)^(j + m')
    for (double j : {0.5, 1.0, 2.0}) {
        const auto ms = m_values(j);
        for (std::size_t r = 0; r < ms.size(); ++r)
            for (std::size_t c = 0; c < ms.size(); ++c) {
                const double want =
                    (ms[r] == -ms[c]) ? std::pow(-1.0, j + ms[r]) : 0.0;
                CHECK(little_d(j, ms[r], ms[c], kPi) == doctest::Approx(want).epsilon(1e-13));
            }
    }
}

TEST_CASE("big_d j = 1 closed form") {
    const double th = 0.77, ph = 1.3;
    const Mat d = big_d({1.0, th, ph});
    const double c = std::cos(th), s = std::sin(th);
    const cplx ei = std::polar(1.0, ph);
    CHECK(std::abs(d(0, 0) - cplx((1.0 + c) / 2.0)) < 1e-14);
    CHECK(std::abs(d(0, 1) - (-s / std::sqrt(2.0)) * std::conj(ei)) < 1e-14);
    CHECK(std::abs(d(0, 2) - ((1.0 - c) / 2.0) * std::conj(ei * ei)) < 1e-14);
    CHECK(std::abs(d(1, 0) - (s / std::sqrt(2.0)) * ei) < 1e-14);
    CHECK(std::abs(d(1, 1) - cplx(c)) < 1e-14);
    CHECK(std::abs(d(1, 2) - (-s / std::sqrt(2.0)) * std::conj(ei)) < 1e-14);
    CHECK(std::abs(d(2, 0) - ((1.0 - c) / 2.0) * ei * ei) < 1e-14);
    CHECK(std::abs(d(2, 1) - (s / std::sqrt(2.0)) * ei) < 1e-14);
    CHECK(std::abs(d(2, 2) - cplx((1.0 + c) / 2.0)) < 1e-14);
}

TEST_CASE("big_d unitarity") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> th(0.0, kPi), ph(-kPi, kPi);
    for (double j : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Mat d = big_d({j, th(rng), ph(rng)});
            const int n = static_cast<int>(std::lround(2.0 * j)) + 1;
            CHECK(residual(Mat(d * d.adjoint()), Mat::Identity(n, n)) < 1e-12);
        }
    }
}

TEST_CASE("little_d symmetry at pi/2") {
    for (double j : {1.0, 1.5, 2.0}) {
        const auto ms = m_values(j);
        for (double mp : ms)
            for (double m : ms)
                CHECK(std::abs(little_d(j, mp, m, kPi / 2.0)) ==
                      doctest::Approx(std::abs(little_d(j, -mp, m, kPi / 2.0))).epsilon(1e-12));
    }
}

TEST_CASE("same-axis composition") {
    for (double j : {0.5, 1.0, 1.5}) {
        const Mat d1 = big_d({j, 0.4, 0.9});
        const Mat d2 = big_d({j, 0.7, 0.9});
        const Mat d12 = big_d({j, 1.1, 0.9});
        CHECK(residual(Mat(d2 * d1), d12) < 1e-13);
    }
}

TEST_CASE("exponential oracle") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> th(0.05, kPi - 0.05), ph(-kPi, kPi);
    for (double j : {0.5, 1.0, 1.5}) {
        for (int trial = 0; trial < 10; ++trial) {
            const WignerSpec spec{j, th(rng), ph(rng)};
            CHECK(residual(big_d(spec), big_d_exp(spec)) < 1e-10);
        }
    }
}

TEST_CASE("ybe_phi") {
    // equal triple: cos(phi) = cos(theta)/(1 - cos(theta))
    auto phi = ybe_phi(2.0 * kPi / 3.0, 2.0 * kPi / 3.0, 2.0 * kPi / 3.0);
    REQUIRE(phi.has_value());
    CHECK(*phi == doctest::Approx(std::acos(-1.0 / 3.0)).epsilon(1e-12));

    auto phi2 = ybe_phi(kPi / 2.0, kPi / 2.0, kPi / 2.0);
    REQUIRE(phi2.has_value());
    CHECK(*phi2 == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    // theta = pi stays regular in the reduced form: cos(phi) = -1/2
    auto phi3 = ybe_phi(kPi, kPi, kPi);
    REQUIRE(phi3.has_value());
    CHECK(*phi3 == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));

    // small equal angles have no solution
    CHECK_FALSE(ybe_phi(kPi / 6.0, kPi / 6.0, kPi / 6.0).has_value());
}

TEST_CASE("ybe_residual") {
    CHECK(ybe_residual(0.5, kPi / 2.0, kPi / 2.0, kPi / 2.0) < 1e-12);
    for (double j : {0.5, 1.0, 1.5}) {
        const double t = 2.0 * kPi / 3.0;
        CHECK(ybe_residual(j, t, t, t) < 1e-10);
    }
    CHECK_THROWS_AS(ybe_residual(1.0, kPi / 6.0, kPi / 6.0, kPi / 6.0), std::domain_error);

    // a wrong phi breaks the relation (negative control via braid at a
    // shifted angle)
    const double t = 2.0 * kPi / 3.0;
    const Mat a = big_d({1.0, t, 0.0});
    const Mat b = big_d({1.0, t, 0.3});  // phi far from 2 pi/3
    const Mat lhs = a * b * a;
    const Mat rhs = b * a * b;
    CHECK(residual(lhs, rhs) > 1e-2);
}

TEST_CASE("braid residual across the valid range") {
    for (double j : {0.5, 1.0, 1.5}) {
        for (int i = 0; i <= 50; ++i) {
            const double th = kPi / 3.0 + (kPi - kPi / 3.0) * i / 50.0;
            CHECK(braid_residual(j, th) < 1e-10);
        }
    }
}

TEST_CASE("x parameterization") {
    CHECK(x_to_theta(1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-13));
    CHECK(x_to_theta(0.0) == doctest::Approx(kPi / 4.0).epsilon(1e-13));
    CHECK(x_to_theta(1e8) == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-6));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.3, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(ybe_residual_x(1.0, dist(rng), dist(rng)) < 1e-10);
        CHECK(ybe_residual_x(0.5, dist(rng), dist(rng)) < 1e-10);
    }
}

TEST_CASE("rotation-to-representation correspondence") {
    Tolerance tol;
    tol.abs = 1e-10;
    tol.rel = 1e-10;
    RelationReport r1 = type_corr_check(TypeCase::I, tol);
    CHECK(r1.overall_pass);
    RelationReport r2 = type_corr_check(TypeCase::II, tol);
    CHECK(r2.overall_pass);
    CHECK(r2.worst() < 1e-12);
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(little_d(0.7, 0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(little_d(1.0, 0.5, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(big_d({-1.0, 1.0, 0.0}), std::invalid_argument);
}
