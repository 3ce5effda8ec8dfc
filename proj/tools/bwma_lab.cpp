// Command-line front end for the BWM representation laboratory: relation
// verification, chain diagnostics, entropy/L1 scans, rotation-matrix YBE
// checks, and D-matrix printing.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <string>

#include "bwma/chain.hpp"
#include "bwma/entropy.hpp"
#include "bwma/json_io.hpp"
#include "bwma/topo.hpp"
#include "bwma/wigner.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Angles: decimals or symbolic multiples of pi ("pi/2", "2pi/3", "-pi").
double parse_angle(const std::string& text) {
    static const std::regex sym(R"(^\s*([+-]?)(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, sym)) {
        double value = kPi;
        if (m[2].length() > 0) value *= std::stod(m[2].str());
        if (m[3].length() > 0) value /= std::stod(m[3].str());
        if (m[1].str() == "-") value = -value;
        return value;
    }
    size_t pos = 0;
    double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad angle: " + text);
    return value;
}

// Fractions for j and m: "3/2", "-1/2", "2", "0.5".
double parse_fraction(const std::string& text) {
    static const std::regex frac(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, frac))
        return std::stod(m[1].str()) / std::stod(m[2].str());
    size_t pos = 0;
    double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad fraction: " + text);
    return value;
}

// q values: real decimals or unit-modulus "e^{i*<angle>}".
bwma::cplx parse_q(const std::string& text) {
    static const std::regex expform(R"(^\s*e\^\{?i\*?([^}]*)\}?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, expform))
        return std::polar(1.0, parse_angle(m[1].str()));
    return bwma::cplx(parse_angle(text), 0.0);
}

void print_report(const bwma::RelationReport& report, const std::string& head) {
    std::printf("%s\n", head.c_str());
    for (const auto& e : report.entries)
        std::printf("  %-28s %.3e %s\n", e.id.c_str(), e.residual, e.pass ? "ok" : "FAIL");
    std::printf("  overall: %s\n", report.overall_pass ? "pass" : "FAIL");
}

int cmd_verify(const std::string& case_name, const std::string& q_text, int m_power,
               int count, const bwma::Tolerance& tol, unsigned seed, bool json_out) {
    const bwma::BraidCase braid_case =
        case_name == "unitary" ? bwma::BraidCase::unitary : bwma::BraidCase::hermitian;

    std::vector<bwma::cplx> qs;
    if (q_text == "random") {
        std::mt19937 rng(seed);
        for (int i = 0; i < count; ++i) {
            if (braid_case == bwma::BraidCase::hermitian) {
                std::uniform_real_distribution<double> dist(0.6, 1.8);
                double q = dist(rng);
                while (std::abs(q - 1.0) < 0.02) q = dist(rng);
                qs.emplace_back(q, 0.0);
            } else {
                std::uniform_int_distribution<int> dist(5, 12);
                qs.push_back(std::polar(1.0, kPi / dist(rng)));
            }
        }
    } else {
        qs.push_back(parse_q(q_text));
    }

    bool all_pass = true;
    nlohmann::json out = nlohmann::json::array();
    for (const bwma::cplx& q : qs) {
        bwma::TopoRep rep =
            bwma::build_rep(bwma::make_params_qm(q, m_power, braid_case), tol, false);
        bwma::RelationReport report =
            bwma::check_bwma(rep.a, rep.b, rep.e_a, rep.e_b, rep.params, tol);
        all_pass = all_pass && report.overall_pass;
        if (json_out) {
            out.push_back(bwma::to_json(rep, report));
        } else {
            char head[96];
            std::snprintf(head, sizeof(head), "q = %.6g%+.6gi, m = %d:", q.real(), q.imag(),
                          m_power);
            print_report(report, head);
        }
    }
    if (json_out) std::printf("%s\n", out.dump(2).c_str());
    return all_pass ? 0 : 1;
}

int cmd_chain(double phi, double j_coupling, const bwma::Tolerance& tol, bool json_out) {
    bwma::RelationReport heis = bwma::heisenberg_check(4, phi);
    bwma::ChainSpectrum spec = bwma::singlet_spectrum(bwma::build_hamiltonian(j_coupling, phi));
    std::vector<bwma::ActionEntry> table = bwma::basis_action_report(j_coupling);

    bool ok = heis.overall_pass;
    const double want[3] = {-6.0 * j_coupling, -2.0 * j_coupling, 0.0};
    for (int k = 0; k < 3; ++k)
        ok = ok && std::abs(spec.singlet_eigenvalues(k) - want[k]) < tol.threshold() * 100.0;

    if (json_out) {
        nlohmann::json out = {{"heisenberg", bwma::to_json(heis)},
                              {"spectrum", bwma::to_json(spec)},
                              {"coefficient_table", bwma::to_json(table)}};
        std::printf("%s\n", out.dump(2).c_str());
        return ok ? 0 : 1;
    }

    print_report(heis, "exchange-minus-projector identity (all pairs):");
    std::printf("singlet eigenvalues:");
    for (int k = 0; k < 3; ++k) std::printf(" %.9g", spec.singlet_eigenvalues(k));
    std::printf("\nmu values (pair form):");
    for (double mu : spec.mu_values) std::printf(" %.9g", mu);
    std::printf("\nmu values (two-pair sum):");
    for (double mu : spec.mu_sum_values) std::printf(" %.9g", mu);
    std::printf("\ntotal-spin residuals:");
    for (double r : spec.s2_residuals) std::printf(" %.3e", r);
    std::printf("\ncoefficient table (computed / reference / |diff|):\n");
    for (const auto& e : table)
        std::printf("  %-26s %+12.9f  %+12.9f  %.3e%s\n", e.entry.c_str(), e.computed,
                    e.expected, e.abs_diff, e.abs_diff > 1e-9 ? "  <-- differs" : "");
    std::printf("spectrum check: %s\n", ok ? "pass" : "FAIL");
    return ok ? 0 : 1;
}

int cmd_scan(double j, double m, int points, const std::string& out_path, bool json_out) {
    bwma::ScanResult result = bwma::scan(j, m, points);
    if (result.report.m_zero)
        std::printf("note: m = 0, the common-extremum guarantee does not apply\n");
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::fprintf(stderr, "cannot open %s\n", out_path.c_str());
            return 2;
        }
        bwma::write_csv(out, result.records);
        std::printf("wrote %zu rows to %s\n", result.records.size(), out_path.c_str());
    }
    if (json_out) {
        std::printf("%s\n", bwma::to_json(result.report).dump(2).c_str());
        return 0;
    }
    auto show = [](const char* name, const std::vector<bwma::Extremum>& v) {
        std::printf("%s:", name);
        for (const auto& e : v) std::printf(" %.6f(%s)", e.theta, e.is_max ? "max" : "min");
        std::printf("\n");
    };
    show("entropy extrema", result.report.entropy_extrema);
    show("l1 extrema", result.report.l1_extrema);
    std::printf("common extrema:");
    for (double t : result.report.common_extrema) std::printf(" %.6f", t);
    std::printf("\nentropy-only:");
    for (double t : result.report.entropy_only) std::printf(" %.6f", t);
    std::printf("\nl1-only:");
    for (double t : result.report.l1_only) std::printf(" %.6f", t);
    std::printf("\n");
    return 0;
}

int cmd_ybe(double j, const std::vector<std::string>& theta_texts,
            const std::vector<double>& xy, const bwma::Tolerance& tol) {
    double t1, t2, t3;
    if (!xy.empty()) {
        t1 = bwma::x_to_theta(xy[0]);
        t2 = bwma::x_to_theta(xy[0] * xy[1]);
        t3 = bwma::x_to_theta(xy[1]);
    } else {
        t1 = parse_angle(theta_texts[0]);
        t2 = parse_angle(theta_texts[1]);
        t3 = parse_angle(theta_texts[2]);
    }
    auto phi = bwma::ybe_phi(t1, t2, t3);
    if (!phi) {
        std::fprintf(stderr, "phi undefined for this triple (|cos phi| > 1)\n");
        return 2;
    }
    const double res = bwma::ybe_residual(j, t1, t2, t3);
    std::printf("theta = (%.9g, %.9g, %.9g), phi = %.9g, residual = %.3e\n", t1, t2, t3,
                *phi, res);
    return res < tol.threshold() ? 0 : 1;
}

int cmd_wigner(double j, double theta, double phi, bool json_out) {
    const bwma::Mat d = bwma::big_d({j, theta, phi});
    if (json_out) {
        std::printf("%s\n", bwma::to_json(d).dump(2).c_str());
        return 0;
    }
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
        for (Eigen::Index c = 0; c < d.cols(); ++c)
            std::printf(" %+10.6f%+10.6fi", d(r, c).real(), d(r, c).imag());
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BWM representation laboratory"};
    app.require_subcommand(1);

    bwma::Tolerance tol;
    bool json_out = false;
    unsigned seed = 12345;
    app.add_option("--abs-tol", tol.abs, "absolute tolerance");
    app.add_option("--rel-tol", tol.rel, "relative tolerance");
    app.add_flag("--json", json_out, "emit JSON instead of plain text");
    app.add_option("--seed", seed, "seed for random parameter draws");

    auto* verify = app.add_subcommand("verify", "run the relation suite on a 3x3 representation");
    std::string case_name = "hermitian", q_text = "1.2";
    int m_power = -2, count = 25;
    verify->add_option("--case", case_name, "hermitian or unitary")
        ->check(CLI::IsMember({"hermitian", "unitary"}));
    verify->add_option("--q", q_text, "q value, e^{i*pi/8} form, or 'random'");
    verify->add_option("--m", m_power, "power m in sigma = q^m");
    verify->add_option("--count", count, "number of draws for --q random");

    auto* chain = app.add_subcommand("chain", "four-site chain diagnostics");
    std::string phi_text = "pi";
    double j_coupling = 1.0;
    chain->add_option("--phi", phi_text, "projector phase (default pi)");
    chain->add_option("--J", j_coupling, "coupling");

    auto* scan = app.add_subcommand("scan", "entropy / L1-norm scan over theta");
    std::string j_text = "1/2", m_text = "1/2", out_path;
    int points = 2001;
    scan->add_option("--j", j_text, "total spin j (fraction allowed)");
    scan->add_option("--m", m_text, "magnetic quantum number m (fraction allowed)");
    scan->add_option("--points", points, "grid points on (0, pi]");
    scan->add_option("--out", out_path, "CSV output path");

    auto* ybe = app.add_subcommand("ybe", "parameterized braid relation residual");
    std::string yj_text = "1";
    std::vector<std::string> theta_texts;
    std::vector<double> xy;
    ybe->add_option("--j", yj_text, "total spin j");
    ybe->add_option("--theta", theta_texts, "three angles")->expected(3);
    ybe->add_option("--x", xy, "multiplicative parameters x y")->expected(2);

    auto* wigner = app.add_subcommand("wigner", "print a rotation matrix D^j");
    std::string wj_text = "1", wtheta_text = "0", wphi_text = "0";
    wigner->add_option("--j", wj_text, "total spin j");
    wigner->add_option("--theta", wtheta_text, "angle theta");
    wigner->add_option("--phi", wphi_text, "angle phi");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(case_name, q_text, m_power, count, tol, seed, json_out);
        if (chain->parsed())
            return cmd_chain(parse_angle(phi_text), j_coupling, tol, json_out);
        if (scan->parsed()) {
            const double j = parse_fraction(j_text), m = parse_fraction(m_text);
            if (!bwma::valid_jm(j, m)) {
                std::fprintf(stderr, "invalid (j, m) = (%g, %g)\n", j, m);
                return 2;
            }
            return cmd_scan(j, m, points, out_path, json_out);
        }
        if (ybe->parsed()) {
            if (theta_texts.size() != 3 && xy.size() != 2) {
                std::fprintf(stderr, "need --theta t1 t2 t3 or --x x y\n");
                return 2;
            }
            const double j = parse_fraction(yj_text);
            if (!bwma::valid_jm(j, j)) {
                std::fprintf(stderr, "invalid j = %g\n", j);
                return 2;
            }
            return cmd_ybe(j, theta_texts, xy, tol);
        }
        if (wigner->parsed()) {
            const double j = parse_fraction(wj_text);
            if (!bwma::valid_jm(j, j)) {
                std::fprintf(stderr, "invalid j = %g\n", j);
                return 2;
            }
            return cmd_wigner(j, parse_angle(wtheta_text), parse_angle(wphi_text), json_out);
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
