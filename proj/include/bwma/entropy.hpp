#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "bwma/wigner.hpp"

namespace bwma {

// One theta sample of the entropy / L1-norm scan.
struct ScanRecord {
    double theta = 0.0;
    double entropy = 0.0;    // bits
    double l1 = 0.0;
    double d_entropy = 0.0;  // central-difference derivative
    double d_l1 = 0.0;
    double bound_gap = 0.0;  // 2 log2(l1) - entropy
};

struct Extremum {
    double theta = 0.0;
    bool is_max = false;
};

struct ExtremumReport {
    std::vector<Extremum> entropy_extrema;
    std::vector<Extremum> l1_extrema;
    std::vector<double> common_extrema;
    std::vector<double> entropy_only;
    std::vector<double> l1_only;
    bool m_zero = false;  // the common-extremum guarantee needs m != 0
    double grid_step = 0.0;
};

struct ScanResult {
    std::vector<ScanRecord> records;
    ExtremumReport report;
};

// p_{m'} = |d^j_{m'm}(theta)|^2 over m' = j..-j.
Eigen::VectorXd reduced_probs(double j, double m, double theta);

// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const Eigen::VectorXd& p);

// f = sum_{m'} |d^j_{m'm}(theta)|.
double l1_norm(double j, double m, double theta);

// 2 log2(f) - S; nonnegative up to roundoff.
double bound_gap(double j, double m, double theta);

// Scan theta over (0, pi] on an equispaced grid. Derivatives by central
// difference with step h; extrema located by derivative sign changes (which
// also catches the kinks of f where a component crosses zero) and the pi
// endpoint by one-sided comparison. S-extrema and f-extrema within two grid
// steps of each other count as common.
ScanResult scan(double j, double m, int points = 2001, double h = 1e-4);

struct PiHalfCheck {
    double ds_abs = 0.0;                   // |dS/dtheta| at pi/2
    std::optional<double> product_abs;     // |d^j_{0m} * (d/dtheta) d^j_{0m}| at pi/2 (2j even)
    bool pass = false;
};

// Verifies the stationarity of S at theta = pi/2 for m != 0.
PiHalfCheck pi_half_check(double j, double m);

// CSV emission: header theta,entropy,l1,d_entropy,d_l1,bound_gap, 12
// significant digits.
void write_csv(std::ostream& os, const std::vector<ScanRecord>& records);

}  // namespace bwma
