#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bwma/chain.hpp"
#include "bwma/entropy.hpp"
#include "bwma/params.hpp"
#include "bwma/topo.hpp"
#include "bwma/wigner.hpp"

namespace py = pybind11;
using namespace bwma;

namespace {

BraidCase case_from_string(const std::string& name) {
    if (name == "hermitian") return BraidCase::hermitian;
    if (name == "unitary") return BraidCase::unitary;
    throw std::invalid_argument("case must be 'hermitian' or 'unitary'");
}

py::dict params_dict(const BwmaParams& p) {
    py::dict d;
    d["lambda1"] = p.lambda1;
    d["lambda2"] = p.lambda2;
    d["sigma"] = p.sigma;
    d["w"] = p.w;
    d["d"] = p.d;
    d["case"] = p.braid_case == BraidCase::hermitian ? "hermitian" : "unitary";
    if (p.q) d["q"] = *p.q;
    if (p.m_power) d["m"] = *p.m_power;
    return d;
}

py::dict rep_dict(const TopoRep& rep) {
    py::dict d;
    d["A"] = rep.a;
    d["B"] = rep.b;
    d["E_A"] = rep.e_a;
    d["E_B"] = rep.e_b;
    d["params"] = params_dict(rep.params);
    d["f"] = std::vector<cplx>{rep.coeffs.f[0], rep.coeffs.f[1]};
    d["alpha"] = std::vector<cplx>{rep.coeffs.alpha[0], rep.coeffs.alpha[1]};
    d["beta"] = std::vector<cplx>{rep.coeffs.beta[0], rep.coeffs.beta[1]};
    d["gram"] = rep.coeffs.gram;
    return d;
}

py::list report_list(const RelationReport& r) {
    py::list out;
    for (const auto& e : r.entries) {
        py::dict d;
        d["id"] = e.id;
        d["residual"] = e.residual;
        d["pass"] = e.pass;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_bwmalab, mod) {
    mod.doc() = "BWM algebra representations, spin-1 chain diagnostics, and "
                "rotation-matrix entropy scans";

    mod.def(
        "make_params",
        [](cplx lambda1, cplx sigma, const std::string& c) {
            return params_dict(make_params(lambda1, sigma, case_from_string(c)));
        },
        py::arg("lambda1"), py::arg("sigma"), py::arg("case") = "hermitian");

    mod.def(
        "build_rep",
        [](cplx q, int m, const std::string& c, bool validate) {
            return rep_dict(build_rep(make_params_qm(q, m, case_from_string(c)), {}, validate));
        },
        py::arg("q"), py::arg("m"), py::arg("case") = "hermitian", py::arg("validate") = true);

    mod.def(
        "check_relations",
        [](cplx q, int m, const std::string& c) {
            TopoRep rep = build_rep(make_params_qm(q, m, case_from_string(c)), {}, false);
            return report_list(check_bwma(rep.a, rep.b, rep.e_a, rep.e_b, rep.params));
        },
        py::arg("q"), py::arg("m"), py::arg("case") = "hermitian");

    mod.def("e_from_s", [](const Mat& s, cplx lambda1, cplx sigma, const std::string& c) {
        return e_from_s(s, make_params(lambda1, sigma, case_from_string(c)));
    });

    mod.def(
        "q1_limit_rep",
        [](int m) {
            double err = 0.0;
            TopoRep rep = q1_limit_rep(m, &err);
            py::dict d = rep_dict(rep);
            d["extrap_residual"] = err;
            return d;
        },
        py::arg("m") = -3);

    mod.def(
        "heisenberg_residual",
        [](int n, double phi) { return heisenberg_check(n, phi).worst(); },
        py::arg("n") = 4, py::arg("phi") = 3.14159265358979323846);

    mod.def(
        "chain_spectrum",
        [](double j_coupling, double phi) {
            ChainSpectrum s = singlet_spectrum(build_hamiltonian(j_coupling, phi));
            py::dict d;
            d["eigenvalues"] = s.eigenvalues;
            d["singlet_eigenvalues"] = s.singlet_eigenvalues;
            d["mu_values"] = s.mu_values;
            d["mu_sum_values"] = s.mu_sum_values;
            d["s2_residuals"] = s.s2_residuals;
            d["pair_equality_residuals"] = s.pair_equality_residuals;
            return d;
        },
        py::arg("j_coupling") = 1.0, py::arg("phi") = 3.14159265358979323846);

    mod.def("topo_vectors", &topo_vectors_q1);

    mod.def(
        "basis_action_report",
        [](double j_coupling) {
            py::list out;
            for (const auto& e : basis_action_report(j_coupling)) {
                py::dict d;
                d["entry"] = e.entry;
                d["computed"] = e.computed;
                d["paper"] = e.expected;
                d["abs_diff"] = e.abs_diff;
                out.append(d);
            }
            return out;
        },
        py::arg("j_coupling") = 1.0);

    mod.def("little_d", &little_d, py::arg("j"), py::arg("m_row"), py::arg("m_col"),
            py::arg("theta"));
    mod.def(
        "big_d", [](double j, double theta, double phi) { return big_d({j, theta, phi}); },
        py::arg("j"), py::arg("theta"), py::arg("phi") = 0.0);
    mod.def("ybe_phi", &ybe_phi);
    mod.def("ybe_residual", &ybe_residual);
    mod.def("braid_residual", &braid_residual);
    mod.def("x_to_theta", &x_to_theta);
    mod.def(
        "type_corr_check",
        [](const std::string& which) {
            return report_list(
                type_corr_check(which == "I" ? TypeCase::I : TypeCase::II));
        },
        py::arg("which") = "I");

    mod.def("reduced_probs", &reduced_probs);
    mod.def("entropy_bits", &entropy);
    mod.def("l1_norm", &l1_norm);
    mod.def("bound_gap", &bound_gap);
    mod.def(
        "scan",
        [](double j, double m, int points, double h) {
            ScanResult r = scan(j, m, points, h);
            Eigen::MatrixXd records(r.records.size(), 6);
            for (size_t i = 0; i < r.records.size(); ++i) {
                const auto& rec = r.records[i];
                records.row(static_cast<Eigen::Index>(i)) << rec.theta, rec.entropy, rec.l1,
                    rec.d_entropy, rec.d_l1, rec.bound_gap;
            }
            py::dict d;
            d["records"] = records;
            d["columns"] =
                std::vector<std::string>{"theta", "entropy", "l1", "d_entropy", "d_l1", "bound_gap"};
            d["common_extrema"] = r.report.common_extrema;
            d["entropy_only"] = r.report.entropy_only;
            d["l1_only"] = r.report.l1_only;
            d["m_zero"] = r.report.m_zero;
            return d;
        },
        py::arg("j"), py::arg("m"), py::arg("points") = 2001, py::arg("h") = 1e-4);
}
