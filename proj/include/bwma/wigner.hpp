#pragma once

#include <optional>

#include "bwma/params.hpp"

namespace bwma {

struct WignerSpec {
    double j = 0.5;     // half-integer, 2j a nonnegative integer
    double theta = 0.0;
    double phi = 0.0;
};

// Checks that j is a half-integer in range and m is compatible with it.
bool valid_jm(double j, double m);

// Small-d rotation element d^j_{m'm}(theta) by the factorial sum, with the
// convention d^1_{00} = cos(theta), d^1_{10} = -sin(theta)/sqrt(2).
double little_d(double j, double m_row, double m_col, double theta);

// m values j, j-1, ..., -j (row/column order of the matrices below).
std::vector<double> m_values(double j);

// Full rotation matrix D^j_{m'm} = e^{-i(m'-m) phi} d^j_{m'm}(theta).
Mat big_d(const WignerSpec& spec);

// Same rotation through the exponential of the raising/lowering generators;
// serves as an independent oracle for big_d (j <= 7/2).
Mat big_d_exp(const WignerSpec& spec);

// Angle phi solving the compatibility condition for a theta triple:
// cos(phi) = [(t1 + t3 - t2)/(t1 t2 t3) - 1]/2 with t_i = tan(theta_i/2).
// Equal triples use the reduced form cos(phi) = cos(theta)/(1 - cos(theta)),
// which also covers theta = pi. Returns nullopt when |cos(phi)| > 1.
std::optional<double> ybe_phi(double theta1, double theta2, double theta3);

// Residual of A(theta1) B(theta2) A(theta3) = B(theta3) A(theta2) B(theta1)
// with A(t) = D^j(t, 0), B(t) = D^j(t, phi) and phi from ybe_phi.
// Throws when phi is undefined for the triple.
double ybe_residual(double j, double theta1, double theta2, double theta3);

// Equal-angle (braid) specialization of the above.
double braid_residual(double j, double theta);

// theta = arccos((1 - x)/sqrt(2(1 + x^2))).
double x_to_theta(double x);

// Residual of the relation for the multiplicative parameterization
// (theta(x), theta(xy), theta(y)) with phi recomputed per triple.
double ybe_residual_x(double j, double x, double y);

enum class TypeCase { I, II };

// Conjugation checks tying the j = 1 rotation matrices at theta = +-pi
// (type I) and theta = +-pi/2 (type II) to the 3x3 braid representations,
// through the fixed unitary V and the diagonal gauge diag(1, i, -1).
RelationReport type_corr_check(TypeCase type, const Tolerance& tol = {});

}  // namespace bwma
