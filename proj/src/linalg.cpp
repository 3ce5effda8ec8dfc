#include "bwma/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bwma {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double residual(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("residual: shape mismatch");
    double nb = b.norm();
    return (a - b).norm() / (nb > 1.0 ? nb : 1.0);
}

Mat embed_two_site(const Mat& op, int k, int l, int n) {
    if (op.rows() != 9 || op.cols() != 9)
        throw std::invalid_argument("embed_two_site: operator must be 9x9");
    if (k < 1 || l <= k || l > n)
        throw std::invalid_argument("embed_two_site: need 1 <= k < l <= n");

    const long dim = static_cast<long>(std::pow(3.0, n) + 0.5);
    Mat out = Mat::Zero(dim, dim);
    std::vector<int> digits(n);
    for (long col = 0; col < dim; ++col) {
        long rest = col;
        for (int s = n - 1; s >= 0; --s) {
            digits[s] = static_cast<int>(rest % 3);
            rest /= 3;
        }
        const int a = digits[k - 1], b = digits[l - 1];
        for (int ap = 0; ap < 3; ++ap) {
            for (int bp = 0; bp < 3; ++bp) {
                const cplx v = op(ap * 3 + bp, a * 3 + b);
                if (v == cplx(0.0, 0.0)) continue;
                digits[k - 1] = ap;
                digits[l - 1] = bp;
                long row = 0;
                for (int s = 0; s < n; ++s) row = row * 3 + digits[s];
                out(row, col) += v;
            }
        }
        digits[k - 1] = a;
        digits[l - 1] = b;
    }
    return out;
}

EighResult eig_hermitian(const Mat& a, const Tolerance& tol) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("eig_hermitian: matrix not square");
    if (residual(a, a.adjoint().eval()) > tol.threshold() * 10.0 + 1e-12)
        throw std::invalid_argument("eig_hermitian: matrix not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Mat> solver(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: solver did not converge");

    EighResult r;
    r.values = solver.eigenvalues();
    r.vectors = solver.eigenvectors();
    for (Eigen::Index c = 0; c < r.vectors.cols(); ++c) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < r.vectors.rows(); ++i) {
            double m = std::abs(r.vectors(i, c));
            if (m > best + 1e-12) {
                best = m;
                imax = i;
            }
        }
        cplx pivot = r.vectors(imax, c);
        if (std::abs(pivot) > 0.0)
            r.vectors.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
    return r;
}

Mat matexp(const Mat& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("matexp: matrix not square");
    if (a.rows() > 8)
        throw std::invalid_argument("matexp: dimension larger than 8 not supported");

    double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (nrm > 0.5) {
        nrm /= 2.0;
        ++squarings;
    }
    const Mat as = a / std::pow(2.0, squarings);

    Mat term = Mat::Identity(a.rows(), a.cols());
    Mat sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = (term * as) / static_cast<double>(k);
        sum += term;
        if (term.norm() < 1e-18 * sum.norm()) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

}  // namespace bwma
