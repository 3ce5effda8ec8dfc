#pragma once

#include <array>

#include "bwma/params.hpp"

namespace bwma {

// Coefficients of the three-dimensional basis built on four strands from the
// diagrams (tcross, Uu, tsep), in that fixed order. The basis vectors have
// coefficient vectors c_i = (1, alpha_i, beta_i) for i = 1, 2 and
// c_3 = (0, 0, 1/d); f_i are the positive normalizers making the vectors
// unit length under the Gram form.
struct TopoCoeffs {
    std::array<cplx, 2> alpha;
    std::array<cplx, 2> beta;
    std::array<cplx, 2> f;
    Mat gram;  // 3x3 over (tcross, Uu, tsep)
};

// The 3x3 matrices of the two braid generators and their projectors in the
// basis above, together with the parameters and coefficients they came from.
struct TopoRep {
    Mat a, b, e_a, e_b;
    BwmaParams params;
    TopoCoeffs coeffs;
};

// Gram form of the three diagrams. Symmetric in the Hermitian case,
// conjugate-symmetric in the unitary case.
Mat gram_matrix(const BwmaParams& p);

// alpha_i = lambda_i, beta_i = -(1/sigma + lambda_i)/d, f_i by Gram
// normalization. Verifies uni-orthogonality of the normalized coefficient
// vectors before returning.
TopoCoeffs topo_coeffs(const BwmaParams& p);

// Build the full 3x3 representation. When validate is true (default) the
// relation suite is run as a gate and failure throws; pass validate = false
// to obtain the raw matrices for out-of-domain parameters (e.g. to measure
// which powers m actually support the construction).
TopoRep build_rep(const BwmaParams& p, const Tolerance& tol = {}, bool validate = true);

// Conjugate all four matrices by a unitary diagonal gauge: X -> g X g^dag.
TopoRep standardize(const TopoRep& rep, const Mat& gauge);

// The q -> 1 endpoint of the Hermitian family lambda1 = q, sigma = q^m,
// which is singular for direct construction (w = 0). Evaluated along
// q = 1 + eps for eps in {1e-4, 5e-5, 2.5e-5} and Richardson-extrapolated.
// The braid matrices are returned with the overall sign of the limiting
// convention (a = -diag(1,-1,1) for m = -3), i.e. sigma = -1 in params.
// extrap_residual (optional out) reports the max-abs difference between the
// last two extrapolation levels.
TopoRep q1_limit_rep(int m_power, double* extrap_residual = nullptr);

}  // namespace bwma
