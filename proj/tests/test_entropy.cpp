#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bwma/entropy.hpp"

using namespace bwma;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("reduced probabilities") {
    // j = 1/2: (cos^2, sin^2) of theta/2
    const double th = 0.9;
    Eigen::VectorXd p = reduced_probs(0.5, 0.5, th);
    CHECK(p(0) == doctest::Approx(std::cos(th / 2.0) * std::cos(th / 2.0)).epsilon(1e-13));
    CHECK(p(1) == doctest::Approx(std::sin(th / 2.0) * std::sin(th / 2.0)).epsilon(1e-13));
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-13));

    // j = 1, m = 1 at pi/2: (1/4, 1/2, 1/4)
    Eigen::VectorXd q = reduced_probs(1.0, 1.0, kPi / 2.0);
    CHECK(q(0) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(q(1) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(q(2) == doctest::Approx(0.25).epsilon(1e-13));

    CHECK_THROWS_AS(reduced_probs(1.0, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("entropy") {
    Eigen::VectorXd half(2);
    half << 0.5, 0.5;
    CHECK(entropy(half) == doctest::Approx(1.0).epsilon(1e-13));

    Eigen::VectorXd pure(3);
    pure << 1.0, 0.0, 0.0;
    CHECK(entropy(pure) == doctest::Approx(0.0));

    Eigen::VectorXd uni(3);
    uni << 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0;
    CHECK(entropy(uni) == doctest::Approx(std::log2(3.0)).epsilon(1e-13));

    Eigen::VectorXd bad(2);
    bad << 0.7, 0.7;
    CHECK_THROWS_AS(entropy(bad), std::invalid_argument);
    Eigen::VectorXd neg(2);
    neg << 1.5, -0.5;
    CHECK_THROWS_AS(entropy(neg), std::invalid_argument);
}

TEST_CASE("l1 norm") {
    // theta = pi: permutation matrix, f = 1
    for (double j : {0.5, 1.0, 1.5, 2.0}) CHECK(l1_norm(j, j, kPi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l1_norm(0.5, 0.5, kPi / 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(l1_norm(1.0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bound gap") {
    // j = 1, m = 1 at pi/2: f = 1/4 + 1/sqrt(2) + ... gives a strict gap
    const double g = bound_gap(1.0, 1.0, kPi / 2.0);
    CHECK(g > 0.0);
    const double f = l1_norm(1.0, 1.0, kPi / 2.0);
    CHECK(2.0 * std::log2(f) < std::log2(3.0));

    // the gap closes only when the amplitudes are flat in modulus
    CHECK(std::abs(bound_gap(0.5, 0.5, kPi / 2.0)) < 1e-12);

    for (double j : {0.5, 1.0, 1.5, 2.0}) {
        const auto ms = m_values(j);
        for (double m : ms) {
            for (int i = 1; i <= 40; ++i) {
                CHECK(bound_gap(j, m, kPi * i / 40.0) >= -1e-12);
            }
        }
    }
}

TEST_CASE("scan basics") {
    CHECK_THROWS_AS(scan(0.5, 0.5, 50), std::invalid_argument);

    ScanResult r = scan(0.5, 0.5);
    CHECK(r.records.size() == 2001);
    CHECK(r.records.front().theta == doctest::Approx(kPi / 2001.0).epsilon(1e-12));
    CHECK(r.records.back().theta == doctest::Approx(kPi).epsilon(1e-12));
    CHECK_FALSE(r.report.m_zero);

    // every record respects the bound
    for (const auto& rec : r.records) CHECK(rec.bound_gap >= -1e-12);

    // common extrema: maximum at pi/2, minimum at pi
    REQUIRE(r.report.common_extrema.size() == 2);
    CHECK(std::abs(r.report.common_extrema[0] - kPi / 2.0) <= 2.0 * r.report.grid_step);
    CHECK(std::abs(r.report.common_extrema[1] - kPi) <= 2.0 * r.report.grid_step);

    // endpoint values
    CHECK(r.records.back().entropy < 1e-10);
    CHECK(std::abs(r.records.back().l1 - 1.0) < 1e-10);
}

TEST_CASE("scan symmetry") {
    // S and f are even about pi/2 for j = 1/2 (|d| depends on theta only
    // through cos^2 and sin^2 of theta/2 swapped under theta -> pi - theta)
    const double a = 0.6;
    Eigen::VectorXd p1 = reduced_probs(0.5, 0.5, a);
    Eigen::VectorXd p2 = reduced_probs(0.5, 0.5, kPi - a);
    CHECK(entropy(p1) == doctest::Approx(entropy(p2)).epsilon(1e-12));
    CHECK(l1_norm(0.5, 0.5, a) == doctest::Approx(l1_norm(0.5, 0.5, kPi - a)).epsilon(1e-12));
}

TEST_CASE("scan with half-integer j above 1") {
    ScanResult r = scan(1.5, 0.5);
    CHECK_FALSE(r.report.m_zero);
    for (const auto& rec : r.records) CHECK(rec.bound_gap >= -1e-12);
    // pi/2 is a common stationary point here too
    bool found = false;
    for (double t : r.report.common_extrema)
        if (std::abs(t - kPi / 2.0) <= 2.0 * r.report.grid_step) found = true;
    CHECK(found);
}

TEST_CASE("scan with m = 0 is flagged") {
    ScanResult r = scan(1.0, 0.0);
    CHECK(r.report.m_zero);
    for (const auto& rec : r.records) CHECK(rec.bound_gap >= -1e-12);
    // the m = 0 column hits the bound at its maxima: S = 2 log2 f = log2 3
    double best_s = 0.0, best_gap = 1.0;
    for (const auto& rec : r.records) {
        if (rec.entropy > best_s) {
            best_s = rec.entropy;
            best_gap = rec.bound_gap;
        }
    }
    CHECK(best_s == doctest::Approx(std::log2(3.0)).epsilon(1e-6));
    CHECK(std::abs(best_gap) < 1e-6);
}

TEST_CASE("stationarity at pi/2") {
    PiHalfCheck c1 = pi_half_check(1.0, 1.0);
    CHECK(c1.pass);
    CHECK(c1.ds_abs < 1e-6);
    REQUIRE(c1.product_abs.has_value());
    CHECK(*c1.product_abs < 1e-10);

    PiHalfCheck c2 = pi_half_check(2.0, 1.0);
    CHECK(c2.pass);
    REQUIRE(c2.product_abs.has_value());
    CHECK(*c2.product_abs < 1e-10);

    for (double j : {0.5, 1.0, 1.5, 2.0}) {
        for (double m : m_values(j)) {
            if (std::abs(m) < 0.25) continue;
            CHECK(pi_half_check(j, m).ds_abs < 1e-6);
        }
    }
}

TEST_CASE("csv output") {
    ScanResult r = scan(0.5, 0.5, 101);
    std::ostringstream os;
    write_csv(os, r.records);
    const std::string text = os.str();
    CHECK(text.rfind("theta,entropy,l1,d_entropy,d_l1,bound_gap\n", 0) == 0);

    // one line per record plus the header
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == 102);

    // deterministic: same scan, same bytes
    std::ostringstream os2;
    write_csv(os2, scan(0.5, 0.5, 101).records);
    CHECK(os2.str() == text);
}
