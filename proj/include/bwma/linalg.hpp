#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bwma {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-9;

    double threshold() const { return abs > rel ? abs : rel; }
};

// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

// Relative Frobenius distance: ||a - b||_F / max(1, ||b||_F).
double residual(const Mat& a, const Mat& b);

// Embed a two-site (9x9) spin-1 operator on sites k < l (1-based) of an
// n-site chain, identity elsewhere. Works for non-adjacent pairs.
Mat embed_two_site(const Mat& op, int k, int l, int n);

struct EighResult {
    Eigen::VectorXd values;   // ascending
    Mat vectors;              // columns, unitary
};

// Hermitian eigendecomposition. Each eigenvector is phase-fixed so that its
// first entry of largest modulus is real and positive, which keeps basis
// comparisons reproducible.
EighResult eig_hermitian(const Mat& a, const Tolerance& tol = {});

// Matrix exponential by scaling and squaring of the Taylor series.
// Intended for small generators only (dimension <= 8).
Mat matexp(const Mat& a);

}  // namespace bwma
