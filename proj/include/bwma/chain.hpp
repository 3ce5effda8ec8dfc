#pragma once

#include <string>
#include <vector>

#include "bwma/params.hpp"
#include "bwma/topo.hpp"

namespace bwma {

// Single-site spin-1 operators in the basis (|1>, |0>, |-1>).
struct SpinOps {
    Mat s_plus, s_minus, s3, sx, sy;
};
SpinOps spin_ops();

struct ChainOperator {
    int n_sites = 0;
    Mat matrix;
    std::string label;
};

// Two-site building blocks (9x9): the exchange operator T and the rank-one
// projector M(phi) = |w><w| with |w> = |1,-1> + |-1,1> + e^{i phi}|0,0>.
Mat t_two_site();
Mat m_two_site(double phi);
Vec cup_vector(double phi);

ChainOperator t_op(int k, int l, int n);
ChainOperator m_op(int k, int l, int n, double phi);

// Checks T_{k,l} - M_{k,l}(phi) = S_k . S_l on every pair of an n-site
// chain. Holds for phi = pi; any other phi is a negative control.
RelationReport heisenberg_check(int n, double phi = 3.14159265358979323846,
                                double threshold = 1e-12);

enum class AlphaType { a, b };
enum class Generator { A, B };

// Spectral-parameter braid matrix built from a 3x3 representation:
// R(x) = (x-1)(x-x_alpha) S + w x (x-1) E - w x (x-x_alpha) I
// with x_a = -q^(1-m), x_b = q^-(m+1). Requires q-parameterized params.
Mat r_check_matrix(cplx x, AlphaType alpha, Generator gen, const TopoRep& rep);

// Rational limit on two sites: R(u) = I + u T - (u/(u-beta)) M.
Mat rational_r(double u, double beta, const Mat& t, const Mat& m);

// Periodic four-site Hamiltonian H = J sum_k (T_{k,k+1} - M_{k,k+1}(phi)).
ChainOperator build_hamiltonian(double j_coupling, double phi = 3.14159265358979323846);

// Total spin squared as 2n + 2 sum_{i<j} (T_{ij} - M_{ij}(pi)).
Mat total_s2(int n);

struct ChainSpectrum {
    Eigen::VectorXd eigenvalues;          // full 81
    Eigen::VectorXd singlet_eigenvalues;  // 3, ascending
    Mat singlet_vectors;                  // 81 x 3
    // expectation of T_{13} - M_{13} on each singlet eigenvector (equal to
    // the T_{24} - M_{24} expectation; equality residual reported below)
    std::vector<double> mu_values;
    // expectation of the full sum (T13 - M13) + (T24 - M24); twice the above
    std::vector<double> mu_sum_values;
    std::vector<double> s2_residuals;
    std::vector<double> pair_equality_residuals;
};
ChainSpectrum singlet_spectrum(const ChainOperator& h);

// The three-dimensional basis realized concretely on the 4-site chain at the
// degenerate point: e3 = (1/3)|w>_12 (x) |w>_34; e1, e2 span the rest of the
// singlet sector and diagonalize T_12 with eigenvalues +1 and -1. Phases are
// fixed by the overlap with the crossed-cup vector (cups on (2,3) and (1,4)):
// positive for e1, negative for e2. Columns are (e1, e2, e3).
Mat topo_vectors_q1();

struct ActionEntry {
    std::string entry;
    double computed = 0.0;
    double expected = 0.0;
    double abs_diff = 0.0;
};

// Projects the pair operators and the Hamiltonian onto the basis from
// topo_vectors_q1 and compares each coefficient against the reference value.
// Mismatching rows are reported, not errors; the computed column is ground
// truth. Includes the known-discrepant scalar entries (loop value, f
// normalizers, beta_1, mu_3) so the disagreements stay visible.
std::vector<ActionEntry> basis_action_report(double j_coupling = 1.0);

}  // namespace bwma
