#include "bwma/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bwma {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Eigen::VectorXd reduced_probs(double j, double m, double theta) {
    if (!valid_jm(j, m)) throw std::invalid_argument("reduced_probs: invalid (j, m)");
    const auto ms = m_values(j);
    Eigen::VectorXd p(ms.size());
    for (size_t i = 0; i < ms.size(); ++i) {
        const double d = little_d(j, ms[i], m, theta);
        p(static_cast<Eigen::Index>(i)) = d * d;
    }
    return p;
}

double entropy(const Eigen::VectorXd& p) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -1e-12) throw std::invalid_argument("entropy: negative probability");
        sum += p(i);
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("entropy: probabilities do not sum to 1");
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) > 0.0) s -= p(i) * std::log2(p(i));
    return s;
}

double l1_norm(double j, double m, double theta) {
    if (!valid_jm(j, m)) throw std::invalid_argument("l1_norm: invalid (j, m)");
    double f = 0.0;
    for (double mp : m_values(j)) f += std::abs(little_d(j, mp, m, theta));
    return f;
}

double bound_gap(double j, double m, double theta) {
    return 2.0 * std::log2(l1_norm(j, m, theta)) - entropy(reduced_probs(j, m, theta));
}

namespace {

std::vector<Extremum> locate_extrema(const std::vector<double>& theta,
                                     const std::vector<double>& value,
                                     const std::vector<double>& deriv) {
    std::vector<Extremum> out;
    const size_t n = theta.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (deriv[i] == 0.0 && deriv[i + 1] == 0.0) continue;
        if (deriv[i] * deriv[i + 1] <= 0.0) {
            const size_t at = (std::abs(deriv[i]) <= std::abs(deriv[i + 1])) ? i : i + 1;
            if (!out.empty() && theta[at] - out.back().theta < 1.5 * (theta[1] - theta[0]))
                continue;
            out.push_back({theta[at], deriv[i] > deriv[i + 1]});
        }
    }
    // the pi endpoint is an extremum of the closed interval; classify by
    // one-sided comparison
    if (out.empty() || kPi - out.back().theta > 1.5 * (theta[1] - theta[0]))
        out.push_back({theta[n - 1], value[n - 1] >= value[n - 2]});
    return out;
}

}  // namespace

ScanResult scan(double j, double m, int points, double h) {
    if (!valid_jm(j, m)) throw std::invalid_argument("scan: invalid (j, m)");
    if (points < 100) throw std::invalid_argument("scan: grid too coarse (need >= 100 points)");

    ScanResult result;
    const double step = kPi / points;
    std::vector<double> thetas, svals, fvals, ds, df;
    for (int i = 1; i <= points; ++i) {
        const double theta = i * step;
        ScanRecord rec;
        rec.theta = theta;
        rec.entropy = entropy(reduced_probs(j, m, theta));
        rec.l1 = l1_norm(j, m, theta);
        rec.d_entropy = (entropy(reduced_probs(j, m, theta + h)) -
                         entropy(reduced_probs(j, m, theta - h))) / (2.0 * h);
        rec.d_l1 = (l1_norm(j, m, theta + h) - l1_norm(j, m, theta - h)) / (2.0 * h);
        rec.bound_gap = 2.0 * std::log2(rec.l1) - rec.entropy;
        result.records.push_back(rec);
        thetas.push_back(theta);
        svals.push_back(rec.entropy);
        fvals.push_back(rec.l1);
        ds.push_back(rec.d_entropy);
        df.push_back(rec.d_l1);
    }

    ExtremumReport& rep = result.report;
    rep.m_zero = std::abs(m) < 1e-12;
    rep.grid_step = step;
    rep.entropy_extrema = locate_extrema(thetas, svals, ds);
    rep.l1_extrema = locate_extrema(thetas, fvals, df);

    const double match = 2.0 * step;
    std::vector<bool> l1_used(rep.l1_extrema.size(), false);
    for (const auto& es : rep.entropy_extrema) {
        bool found = false;
        for (size_t k = 0; k < rep.l1_extrema.size(); ++k) {
            if (std::abs(es.theta - rep.l1_extrema[k].theta) <= match) {
                found = true;
                l1_used[k] = true;
            }
        }
        if (found)
            rep.common_extrema.push_back(es.theta);
        else
            rep.entropy_only.push_back(es.theta);
    }
    for (size_t k = 0; k < rep.l1_extrema.size(); ++k)
        if (!l1_used[k]) rep.l1_only.push_back(rep.l1_extrema[k].theta);
    return result;
}

PiHalfCheck pi_half_check(double j, double m) {
    if (!valid_jm(j, m) || std::abs(m) < 1e-12)
        throw std::invalid_argument("pi_half_check: needs valid j and m != 0");
    PiHalfCheck out;
    const double h = 1e-4;
    out.ds_abs = std::abs((entropy(reduced_probs(j, m, kPi / 2.0 + h)) -
                           entropy(reduced_probs(j, m, kPi / 2.0 - h))) / (2.0 * h));
    out.pass = out.ds_abs < 1e-6;
    const bool integer_j = std::abs(j - std::round(j)) < 1e-9;
    if (integer_j) {
        const double hd = 1e-6;
        const double d0 = little_d(j, 0.0, m, kPi / 2.0);
        const double dprime = (little_d(j, 0.0, m, kPi / 2.0 + hd) -
                               little_d(j, 0.0, m, kPi / 2.0 - hd)) / (2.0 * hd);
        out.product_abs = std::abs(d0 * dprime);
        out.pass = out.pass && *out.product_abs < 1e-10;
    }
    return out;
}

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
    os << "theta,entropy,l1,d_entropy,d_l1,bound_gap\n";
    char buf[160];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      r.theta, r.entropy, r.l1, r.d_entropy, r.d_l1, r.bound_gap);
        os << buf;
    }
}

}  // namespace bwma
