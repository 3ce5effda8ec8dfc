#include "bwma/params.hpp"

#include <cmath>
#include <stdexcept>

namespace bwma {

BwmaParams make_params(cplx lambda1, cplx sigma, BraidCase braid_case) {
    if (std::abs(lambda1) == 0.0) throw std::invalid_argument("make_params: lambda1 = 0");
    if (std::abs(sigma) == 0.0) throw std::invalid_argument("make_params: sigma = 0");

    BwmaParams p;
    p.lambda1 = lambda1;
    p.lambda2 = -1.0 / lambda1;
    p.sigma = sigma;
    p.w = p.lambda1 + p.lambda2;
    if (std::abs(p.w) < 1e-12)
        throw std::invalid_argument(
            "make_params: degenerate skein weight w = lambda1 - 1/lambda1 = 0 "
            "(lambda1 = +-1); the q -> 1 point is reachable only through the "
            "extrapolated limit (q1_limit_rep), not by direct substitution");
    p.d = 1.0 + (1.0 / sigma - sigma) / p.w;
    p.braid_case = braid_case;
    if (braid_case == BraidCase::unitary) {
        if (std::abs(std::abs(lambda1) - 1.0) > 1e-12 || std::abs(std::abs(sigma) - 1.0) > 1e-12)
            throw std::invalid_argument("make_params: unitary case needs |lambda1| = |sigma| = 1");
    }
    return p;
}

BwmaParams make_params_qm(cplx q, int m_power, BraidCase braid_case) {
    BwmaParams p = make_params(q, std::pow(q, static_cast<double>(m_power)), braid_case);
    p.q = q;
    p.m_power = m_power;
    return p;
}

Mat e_from_s(const Mat& s, const BwmaParams& p) {
    if (s.rows() != s.cols()) throw std::invalid_argument("e_from_s: matrix not square");
    Eigen::FullPivLU<Mat> lu(s);
    if (!lu.isInvertible()) throw std::invalid_argument("e_from_s: S not invertible");
    const Mat eye = Mat::Identity(s.rows(), s.cols());
    return (eye + p.w * s - s * s) / (p.sigma * p.w);
}

RelationReport check_bwma(const Mat& s12, const Mat& s23, const Mat& e12,
                          const Mat& e23, const BwmaParams& p,
                          const Tolerance& tol) {
    const auto n = s12.rows();
    if (s12.cols() != n || s23.rows() != n || s23.cols() != n ||
        e12.rows() != n || e12.cols() != n || e23.rows() != n || e23.cols() != n)
        throw std::invalid_argument("check_bwma: shape mismatch");

    const Mat eye = Mat::Identity(n, n);
    const Mat s12i = s12.inverse();
    const Mat s23i = s23.inverse();
    const double thr = tol.threshold();

    RelationReport r;
    auto chk = [&](const std::string& id, const Mat& lhs, const Mat& rhs) {
        r.add(id, residual(lhs, rhs), thr);
    };

    chk("braid", s12 * s23 * s12, s23 * s12 * s23);
    chk("eee_121", e12 * e23 * e12, e12);
    chk("eee_212", e23 * e12 * e23, e23);
    chk("e1_sq", e12 * e12, p.d * e12);
    chk("e2_sq", e23 * e23, p.d * e23);
    chk("skein_1", s12 - s12i, p.w * (eye - e12));
    chk("skein_2", s23 - s23i, p.w * (eye - e23));
    chk("se_1", s12 * e12, p.sigma * e12);
    chk("es_1", e12 * s12, p.sigma * e12);
    chk("se_2", s23 * e23, p.sigma * e23);
    chk("es_2", e23 * s23, p.sigma * e23);
    chk("e1s2s1_eq_s2s1e2", e12 * s23 * s12, s23 * s12 * e23);
    chk("e1s2s1_eq_e1e2", e12 * s23 * s12, e12 * e23);
    chk("e2s1s2_eq_s1s2e1", e23 * s12 * s23, s12 * s23 * e12);
    chk("e2s1s2_eq_e2e1", e23 * s12 * s23, e23 * e12);
    chk("s2e1s2_eq_s1i_e2_s1i", s23 * e12 * s23, s12i * e23 * s12i);
    chk("s1e2s1_eq_s2i_e1_s2i", s12 * e23 * s12, s23i * e12 * s23i);
    chk("e2e1s2_eq_e2s1i", e23 * e12 * s23, e23 * s12i);
    chk("e1e2s1_eq_e1s2i", e12 * e23 * s12, e12 * s23i);
    chk("s1e2e1_eq_s2i_e1", s12 * e23 * e12, s23i * e12);
    chk("s2e1e2_eq_s1i_e2", s23 * e12 * e23, s12i * e23);
    chk("e1s2e1", e12 * s23 * e12, (1.0 / p.sigma) * e12);
    chk("e2s1e2", e23 * s12 * e23, (1.0 / p.sigma) * e23);
    return r;
}

}  // namespace bwma
