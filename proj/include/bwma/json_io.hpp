#pragma once

#include <nlohmann/json.hpp>

#include "bwma/chain.hpp"
#include "bwma/entropy.hpp"
#include "bwma/params.hpp"
#include "bwma/topo.hpp"

// JSON views of the report and representation types. Complex numbers are
// emitted as [re, im] pairs, matrices as nested row arrays.

namespace bwma {

inline nlohmann::json to_json(const cplx& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline nlohmann::json to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json to_json(const RelationReport& r) {
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& e : r.entries)
        rels.push_back({{"id", e.id}, {"residual", e.residual}, {"pass", e.pass}});
    return {{"relations", rels}, {"overall_pass", r.overall_pass}};
}

inline nlohmann::json to_json(const BwmaParams& p) {
    nlohmann::json j = {
        {"lambda1", to_json(p.lambda1)}, {"lambda2", to_json(p.lambda2)},
        {"sigma", to_json(p.sigma)},     {"w", to_json(p.w)},
        {"d", to_json(p.d)},
        {"case", p.braid_case == BraidCase::hermitian ? "hermitian" : "unitary"},
    };
    if (p.q) j["q"] = to_json(*p.q);
    if (p.m_power) j["m"] = *p.m_power;
    return j;
}

inline nlohmann::json to_json(const TopoRep& rep, const RelationReport& report) {
    return {{"A", to_json(rep.a)},     {"B", to_json(rep.b)},
            {"E_A", to_json(rep.e_a)}, {"E_B", to_json(rep.e_b)},
            {"params", to_json(rep.params)}, {"report", to_json(report)}};
}

inline nlohmann::json to_json(const std::vector<ActionEntry>& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : report)
        arr.push_back({{"entry", e.entry},
                       {"computed", e.computed},
                       {"paper", e.expected},
                       {"abs_diff", e.abs_diff}});
    return arr;
}

inline nlohmann::json to_json(const ChainSpectrum& s) {
    nlohmann::json j;
    j["singlet_eigenvalues"] = std::vector<double>(
        s.singlet_eigenvalues.data(), s.singlet_eigenvalues.data() + s.singlet_eigenvalues.size());
    j["mu_values"] = s.mu_values;
    j["mu_sum_values"] = s.mu_sum_values;
    j["s2_residuals"] = s.s2_residuals;
    j["pair_equality_residuals"] = s.pair_equality_residuals;
    return j;
}

inline nlohmann::json to_json(const ExtremumReport& r) {
    auto extrema = [](const std::vector<Extremum>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : v)
            arr.push_back({{"theta", e.theta}, {"kind", e.is_max ? "max" : "min"}});
        return arr;
    };
    return {{"entropy_extrema", extrema(r.entropy_extrema)},
            {"l1_extrema", extrema(r.l1_extrema)},
            {"common_extrema", r.common_extrema},
            {"entropy_only", r.entropy_only},
            {"l1_only", r.l1_only},
            {"m_zero", r.m_zero},
            {"grid_step", r.grid_step}};
}

}  // namespace bwma
