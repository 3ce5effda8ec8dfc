#include "bwma/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "bwma/linalg.hpp"
#include "bwma/topo.hpp"

namespace bwma {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_half_integer(double x) {
    return std::abs(2.0 * x - std::round(2.0 * x)) < 1e-9;
}

double fact(int n) {
    double out = 1.0;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

}  // namespace

bool valid_jm(double j, double m) {
    if (!is_half_integer(j) || j < 0.0 || j > 12.0) return false;
    if (!is_half_integer(m) || std::abs(m) > j + 1e-9) return false;
    // m must differ from j by an integer
    return std::abs((j - m) - std::round(j - m)) < 1e-9;
}

double little_d(double j, double m_row, double m_col, double theta) {
    if (!valid_jm(j, m_row) || !valid_jm(j, m_col))
        throw std::invalid_argument("little_d: invalid (j, m) combination");
    const int jpmp = static_cast<int>(std::lround(j + m_row));
    const int jmmp = static_cast<int>(std::lround(j - m_row));
    const int jpm = static_cast<int>(std::lround(j + m_col));
    const int jmm = static_cast<int>(std::lround(j - m_col));
    const int dmm = static_cast<int>(std::lround(m_row - m_col));
    const int twoj = static_cast<int>(std::lround(2.0 * j));

    const double pref = std::sqrt(fact(jpmp) * fact(jmmp) * fact(jpm) * fact(jmm));
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);

    int kmin = std::max(0, -dmm);
    int kmax = std::min(jmmp, jpm);
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double sign = ((dmm + k) % 2 == 0) ? 1.0 : -1.0;
        const double den = fact(jpm - k) * fact(k) * fact(dmm + k) * fact(jmmp - k);
        sum += sign / den * std::pow(c, twoj + (-dmm) - 2 * k) * std::pow(s, dmm + 2 * k);
    }
    return pref * sum;
}

std::vector<double> m_values(double j) {
    std::vector<double> ms;
    const int n = static_cast<int>(std::lround(2.0 * j)) + 1;
    for (int k = 0; k < n; ++k) ms.push_back(j - k);
    return ms;
}

Mat big_d(const WignerSpec& spec) {
    if (!valid_jm(spec.j, spec.j)) throw std::invalid_argument("big_d: invalid j");
    const auto ms = m_values(spec.j);
    const int n = static_cast<int>(ms.size());
    Mat d(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            d(r, c) = std::polar(1.0, -(ms[r] - ms[c]) * spec.phi) *
                      little_d(spec.j, ms[r], ms[c], spec.theta);
    return d;
}

Mat big_d_exp(const WignerSpec& spec) {
    const auto ms = m_values(spec.j);
    const int n = static_cast<int>(ms.size());
    Mat jp = Mat::Zero(n, n);
    for (int c = 1; c < n; ++c) {
        const double m = ms[c];
        jp(c - 1, c) = std::sqrt(spec.j * (spec.j + 1.0) - m * (m + 1.0));
    }
    const Mat jm = jp.adjoint();
    const cplx xi = -(spec.theta / 2.0) * std::polar(1.0, -spec.phi);
    return matexp(xi * jp - std::conj(xi) * jm);
}

std::optional<double> ybe_phi(double theta1, double theta2, double theta3) {
    double val;
    if (std::abs(theta1 - theta2) < 1e-12 && std::abs(theta2 - theta3) < 1e-12) {
        // reduced form, regular at theta = pi where the tangents blow up
        const double ct = std::cos(theta1);
        if (std::abs(1.0 - ct) < 1e-14) return std::nullopt;
        val = ct / (1.0 - ct);
    } else {
        const double t1 = std::tan(theta1 / 2.0);
        const double t2 = std::tan(theta2 / 2.0);
        const double t3 = std::tan(theta3 / 2.0);
        if (!std::isfinite(t1) || !std::isfinite(t2) || !std::isfinite(t3) ||
            std::abs(t1 * t2 * t3) < 1e-14)
            throw std::domain_error("ybe_phi: tangent pole or zero in the triple");
        val = 0.5 * ((t1 + t3 - t2) / (t1 * t2 * t3) - 1.0);
    }
    if (std::abs(val) > 1.0 + 1e-12) return std::nullopt;
    if (val > 1.0) val = 1.0;
    if (val < -1.0) val = -1.0;
    return std::acos(val);
}

double ybe_residual(double j, double theta1, double theta2, double theta3) {
    const auto phi = ybe_phi(theta1, theta2, theta3);
    if (!phi) throw std::domain_error("ybe_residual: phi undefined for this triple");
    auto a = [&](double t) { return big_d({j, t, 0.0}); };
    auto b = [&](double t) { return big_d({j, t, *phi}); };
    const Mat lhs = a(theta1) * b(theta2) * a(theta3);
    const Mat rhs = b(theta3) * a(theta2) * b(theta1);
    return residual(lhs, rhs);
}

double braid_residual(double j, double theta) {
    return ybe_residual(j, theta, theta, theta);
}

double x_to_theta(double x) {
    return std::acos((1.0 - x) / std::sqrt(2.0 * (1.0 + x * x)));
}

double ybe_residual_x(double j, double x, double y) {
    return ybe_residual(j, x_to_theta(x), x_to_theta(x * y), x_to_theta(y));
}

RelationReport type_corr_check(TypeCase type, const Tolerance& tol) {
    const double rt2 = std::sqrt(2.0);
    Mat v(3, 3);
    v << 0.5, 1.0 / rt2, 0.5,
         cplx(0.0, 1.0 / rt2), 0.0, cplx(0.0, -1.0 / rt2),
         -0.5, 1.0 / rt2, -0.5;
    Mat gauge = Mat::Zero(3, 3);
    gauge(0, 0) = 1.0;
    gauge(1, 1) = cplx(0.0, 1.0);
    gauge(2, 2) = -1.0;

    const double thr = tol.threshold();
    RelationReport r;
    r.add("V unitary", residual(v * v.adjoint(), Mat::Identity(3, 3)), thr);

    auto conj_v = [&](double theta, double phi) {
        return Mat(v.adjoint() * big_d({1.0, theta, phi}) * v);
    };

    if (type == TypeCase::I) {
        TopoRep rep = q1_limit_rep(-3);
        Mat a_ref = Mat::Zero(3, 3);
        a_ref(0, 0) = -1.0;
        a_ref(1, 1) = 1.0;
        a_ref(2, 2) = -1.0;
        const double rt6 = std::sqrt(6.0);
        Mat b_ref(3, 3);
        b_ref << 1.0, cplx(0.0, rt6), -3.0,
                 cplx(0.0, -rt6), 2.0, cplx(0.0, -rt6),
                 -3.0, cplx(0.0, rt6), 1.0;
        b_ref *= -0.25;

        r.add("A: rotation(pi, 0) vs diagonal form", residual(conj_v(kPi, 0.0), a_ref), thr);
        r.add("A: rotation vs limit rep", residual(conj_v(kPi, 0.0), rep.a), thr);
        const Mat lhs = conj_v(kPi, -2.0 * kPi / 3.0);
        const Mat lhs_neg = conj_v(-kPi, -2.0 * kPi / 3.0);
        r.add("B: rotation(pi, -2pi/3) vs printed form", residual(lhs, b_ref), thr);
        r.add("B: rotation(-pi, -2pi/3) vs printed form", residual(lhs_neg, b_ref), thr);
        r.add("B: rotation vs gauged limit rep",
              residual(lhs, Mat(gauge * rep.b * gauge.adjoint())), thr);
    } else {
        const cplx l1 = std::polar(1.0, kPi / 4.0);
        TopoRep rep = build_rep(make_params(l1, -l1, BraidCase::unitary));
        const cplx scale = std::pow(l1, -3.0);  // overall phase of the printed family
        const Mat a2 = scale * rep.a;
        const Mat b2 = scale * rep.b;
        Mat a_ref = Mat::Zero(3, 3);
        a_ref(0, 0) = cplx(0.0, -1.0);
        a_ref(1, 1) = 1.0;
        a_ref(2, 2) = cplx(0.0, 1.0);
        Mat b_gauged_ref(3, 3);
        b_gauged_ref << 0.5, -1.0 / rt2, 0.5,
                        1.0 / rt2, 0.0, -1.0 / rt2,
                        0.5, 1.0 / rt2, 0.5;

        r.add("A: rotation(pi/2, 0) vs diagonal form", residual(conj_v(kPi / 2.0, 0.0), a_ref), thr);
        r.add("A: rotation vs rep", residual(conj_v(kPi / 2.0, 0.0), a2), thr);
        r.add("B: rotation(pi/2, -pi/2) vs gauged form",
              residual(conj_v(kPi / 2.0, -kPi / 2.0), b_gauged_ref), thr);
        r.add("B: gauged rotation(pi/2, pi/2) vs rep",
              residual(Mat(gauge * conj_v(kPi / 2.0, kPi / 2.0) * gauge.adjoint()), b2), thr);
        r.add("B: gauged rep vs gauged form",
              residual(Mat(gauge * b2 * gauge.adjoint()), b_gauged_ref), thr);
    }
    return r;
}

}  // namespace bwma
