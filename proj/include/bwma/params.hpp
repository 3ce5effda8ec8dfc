#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwma/linalg.hpp"

namespace bwma {

enum class BraidCase { hermitian, unitary };

// Eigenvalue data of a BWM braid generator: spectrum {lambda1, lambda2, sigma}
// with lambda2 = -1/lambda1, skein weight w = lambda1 + lambda2 and loop value
// d = 1 + (1/sigma - sigma)/w.
struct BwmaParams {
    cplx lambda1;
    cplx lambda2;
    cplx sigma;
    cplx w;
    cplx d;
    BraidCase braid_case = BraidCase::hermitian;
    std::optional<cplx> q;        // set when parameterized as lambda1 = q
    std::optional<int> m_power;   // set when sigma = q^m
};

BwmaParams make_params(cplx lambda1, cplx sigma, BraidCase braid_case);

// Convenience for the q-parameterized families lambda1 = q, sigma = q^m.
BwmaParams make_params_qm(cplx q, int m_power, BraidCase braid_case);

// Projector from the braid via the skein relation:
// E = (sigma w)^-1 (I + w S - S^2).
// Annihilates the lambda1/lambda2 eigenspaces of S and acts as d on the
// sigma eigenspace.
Mat e_from_s(const Mat& s, const BwmaParams& p);

struct RelationEntry {
    std::string id;
    double residual = 0.0;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationEntry> entries;
    bool overall_pass = true;

    void add(const std::string& id, double res, double threshold) {
        entries.push_back({id, res, res < threshold});
        overall_pass = overall_pass && entries.back().pass;
    }
    double worst() const {
        double w = 0.0;
        for (const auto& e : entries)
            if (e.residual > w) w = e.residual;
        return w;
    }
};

// Full relation suite for a concrete pair of braid generators (s12, s23) and
// projectors (e12, e23) of equal dimension: braid relation, projector algebra,
// skein, the sigma eigenrelations, and the mixed two-generator identities
// (each dependent variant gets its own id).
RelationReport check_bwma(const Mat& s12, const Mat& s23, const Mat& e12,
                          const Mat& e23, const BwmaParams& p,
                          const Tolerance& tol = {});

}  // namespace bwma
