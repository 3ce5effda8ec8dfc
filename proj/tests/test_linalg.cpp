#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bwma/linalg.hpp"

using namespace bwma;

namespace {

Mat random_mat(int rows, int cols, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

}  // namespace

TEST_CASE("kron basics") {
    const Mat i2 = Mat::Identity(2, 2);
    const Mat i3 = Mat::Identity(3, 3);
    CHECK(residual(kron(i2, i3), Mat::Identity(6, 6)) == doctest::Approx(0.0));

    Mat d(2, 2);
    d << 1.0, 0.0, 0.0, 2.0;
    Mat want = Mat::Zero(4, 4);
    want(0, 0) = 1.0;
    want(1, 1) = 1.0;
    want(2, 2) = 2.0;
    want(3, 3) = 2.0;
    CHECK(residual(kron(d, i2), want) == doctest::Approx(0.0));
}

TEST_CASE("kron mixed product and associativity") {
    std::mt19937 rng(7);
    const Mat a = random_mat(2, 2, rng), b = random_mat(2, 2, rng);
    const Mat c = random_mat(2, 2, rng), d = random_mat(2, 2, rng);
    CHECK(residual(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-14);
    CHECK(residual(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
}

TEST_CASE("embed_two_site") {
    std::mt19937 rng(11);
    const Mat i9 = Mat::Identity(9, 9);
    CHECK(residual(embed_two_site(i9, 1, 2, 2), i9) == doctest::Approx(0.0));

    const Mat op = random_mat(9, 9, rng);
    CHECK(residual(embed_two_site(op, 1, 2, 3), kron(op, Mat::Identity(3, 3))) < 1e-14);
    CHECK(residual(embed_two_site(op, 2, 3, 3), kron(Mat::Identity(3, 3), op)) < 1e-14);

    // trace multiplies by the dimension of the untouched factors
    const cplx tr = embed_two_site(op, 1, 3, 4).trace();
    CHECK(std::abs(tr - op.trace() * 9.0) < 1e-10);

    // operators on disjoint pairs commute
    const Mat x = embed_two_site(op, 1, 2, 4);
    const Mat y = embed_two_site(random_mat(9, 9, rng), 3, 4, 4);
    CHECK(residual(x * y, y * x) < 1e-12);

    CHECK_THROWS_AS(embed_two_site(op, 2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(embed_two_site(op, 1, 5, 4), std::invalid_argument);
}

TEST_CASE("residual definition") {
    const Mat i3 = Mat::Identity(3, 3);
    CHECK(residual(i3, i3) == doctest::Approx(0.0));
    CHECK(residual(Mat::Zero(3, 3), i3) == doctest::Approx(1.0));
    CHECK(residual(i3, Mat(2.0 * i3)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(residual(i3, Mat::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("eig_hermitian") {
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    EighResult r = eig_hermitian(d);
    CHECK(r.values(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.values(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.values(2) == doctest::Approx(3.0).epsilon(1e-14));

    Mat px(2, 2);
    px << 0.0, 1.0, 1.0, 0.0;
    EighResult rx = eig_hermitian(px);
    CHECK(rx.values(0) == doctest::Approx(-1.0));
    CHECK(rx.values(1) == doctest::Approx(1.0));

    std::mt19937 rng(3);
    Mat a = random_mat(9, 9, rng);
    a = (a + a.adjoint().eval()) / 2.0;
    EighResult ra = eig_hermitian(a);
    Mat recon = ra.vectors * ra.values.cast<cplx>().asDiagonal() * ra.vectors.adjoint();
    CHECK(residual(recon, a) < 1e-12);
    CHECK(residual(Mat(ra.vectors.adjoint() * ra.vectors), Mat::Identity(9, 9)) < 1e-12);

    // phase convention: largest-modulus entry real positive
    for (Eigen::Index c = 0; c < 9; ++c) {
        Eigen::Index imax = 0;
        ra.vectors.col(c).cwiseAbs().maxCoeff(&imax);
        CHECK(ra.vectors(imax, c).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(ra.vectors(imax, c).real() > 0.0);
    }

    CHECK_THROWS_AS(eig_hermitian(random_mat(4, 4, rng)), std::invalid_argument);
}

TEST_CASE("matexp") {
    CHECK(residual(matexp(Mat::Zero(3, 3)), Mat::Identity(3, 3)) < 1e-15);

    Mat d = Mat::Zero(2, 2);
    d(0, 0) = cplx(0.0, 3.14159265358979323846);
    Mat want = Mat::Identity(2, 2);
    want(0, 0) = -1.0;
    CHECK(residual(matexp(d), want) < 1e-13);

    // derivative consistency: exp((t+h)A) vs exp(tA) exp(hA)
    std::mt19937 rng(5);
    Mat a = random_mat(4, 4, rng);
    CHECK(residual(matexp(Mat(0.7 * a)) * matexp(Mat(0.3 * a)), matexp(a)) < 1e-10);

    CHECK_THROWS_AS(matexp(Mat::Zero(9, 9)), std::invalid_argument);
}
