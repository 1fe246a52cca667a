// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/factorization.hpp"

#include "pointbethe/bethe_engine.hpp"
#include "pointbethe/errors.hpp"
#include "pointbethe/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pointbethe {

namespace {

// R(+/-), T(+/-) at one argument.
struct Amp {
    Complex rp, rm, tp, tm;
};

Amp amp_at(const CouplingParameters& params, double u) {
    const AmplitudeSet a = amplitudes(params, u);
    return {a.s_r_plus, a.s_r_minus, a.s_t_plus, a.s_t_minus};
}

} // namespace

double FactorizationReport::max_residual() const noexcept {
    return *std::max_element(residuals.begin(), residuals.end());
}

double FactorizationReport::max_universal_residual() const noexcept {
    return *std::max_element(residuals.begin(), residuals.begin() + kUniversalCount);
}

std::array<Complex, kFactorizationCount> factorization_terms(const CouplingParameters& params, double u, double v) {
    const Amp au = amp_at(params, u);
    const Amp nu = amp_at(params, -u);
    const Amp av = amp_at(params, v);
    const Amp aw = amp_at(params, u + v);

    std::array<Complex, kFactorizationCount> f;
    f[0] = au.rp * nu.rp + au.tm * nu.tp - 1.0;
    f[1] = au.rm * nu.rm + au.tp * nu.tm - 1.0;
    f[2] = au.rp * nu.tm + au.tm * nu.rm;
    f[3] = au.rm * nu.tp + au.tp * nu.rp;
    f[4] = av.rm * aw.rp * au.rm - au.rp * aw.rm * av.rp;
    f[5] = av.rp * aw.tp * au.tm - au.tp * aw.tm * av.rp;
    f[6] = av.rm * aw.tm * au.tp - au.tm * aw.tp * av.rm;
    f[7] = av.rp * aw.rp * au.tm + av.tm * aw.rp * au.rm - au.rp * aw.tm * av.rp;
    f[8] = av.rm * aw.rp * au.tp + av.tp * aw.rp * au.rp - au.rp * aw.tp * av.rp;
    f[9] = av.rm * aw.rm * au.tp + av.tp * aw.rm * au.rp - au.rm * aw.tp * av.rm;
    f[10] = av.rp * aw.rm * au.tm + av.tm * aw.rp * au.rm - au.rm * aw.tm * av.rp;
    f[11] = av.rp * aw.rm * au.tm + av.tm * aw.rm * au.rm - au.rm * aw.tm * av.rm;
    f[12] = av.rm * aw.rp * au.tp + av.tp * aw.rm * au.rp - au.rp * aw.tp * av.rm;
    return f;
}

std::array<double, 3> reduced_condition_residuals(const CouplingParameters& p) {
    return {std::abs(p.gamma), std::abs(p.lambda * (p.c * p.lambda + p.eta * p.eta - 1.0)),
            std::abs(p.lambda * p.eta)};
}

FactorizationReport check_factorization(const CouplingParameters& params, std::span<const UvSample> samples) {
    FactorizationReport report;
    report.params = params;
    report.samples.assign(samples.begin(), samples.end());
    report.reduced_condition_residuals = reduced_condition_residuals(params);
    for (const UvSample& s : samples) {
        const auto f = factorization_terms(params, s.u, s.v);
        for (std::size_t e = 0; e < kFactorizationCount; ++e) {
            report.residuals[e] = std::max(report.residuals[e], std::abs(f[e]));
        }
    }
    return report;
}

FactorizationReport check_factorization(const CouplingParameters& params, double u, double v) {
    const UvSample s{u, v};
    return check_factorization(params, std::span<const UvSample>(&s, 1));
}

std::string to_string(IntegrabilityTag tag) {
    switch (tag) {
    case IntegrabilityTag::Family1:
        return "Family1";
    case IntegrabilityTag::Family2:
        return "Family2";
    case IntegrabilityTag::NotIntegrable:
        return "NotIntegrable";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, IntegrabilityTag tag) { return os << to_string(tag); }

IntegrabilityClass classify(const CouplingParameters& p, double tol) {
    IntegrabilityClass out;
    out.tolerance = tol;
    if (std::abs(p.lambda) <= tol && std::abs(p.gamma) <= tol) {
        out.tag = IntegrabilityTag::Family1;
    } else if (std::abs(p.gamma) <= tol && std::abs(p.eta) <= tol && std::abs(p.c * p.lambda - 1.0) <= tol) {
        out.tag = IntegrabilityTag::Family2;
    } else {
        out.tag = IntegrabilityTag::NotIntegrable;
    }
    return out;
}

bool ScanRow::consistent() const noexcept {
    if (passes != cls.integrable()) return false;
    return passes || max_residual >= kFailFloor;
}

std::vector<ScanRow> scan_couplings(const GridSpec& grid, double pass_tolerance) {
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    std::uint64_t index = 0;
    for (double c : grid.c) {
        for (double lambda : grid.lambda) {
            for (double gamma : grid.gamma) {
                for (double eta : grid.eta) {
                    const auto params = CouplingParameters::checked(c, lambda, gamma, eta);
                    const auto panel = uv_panel(params, derive_seed(grid.seed, index++), grid.samples);
                    ScanRow row;
                    row.params = params;
                    row.cls = classify(params);
                    row.max_residual = check_factorization(params, panel).max_residual();
                    row.passes = row.max_residual <= pass_tolerance;
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows) {
    std::ostringstream buf;
    buf << std::setprecision(17);
    buf << "c,lambda,gamma,eta,class,max_residual\n";
    for (const ScanRow& r : rows) {
        buf << r.params.c << ',' << r.params.lambda << ',' << r.params.gamma << ',' << r.params.eta << ','
            << r.cls.tag << ',' << r.max_residual << '\n';
    }
    os << buf.str();
}

double YangBaxterReport::max_residual() const noexcept { return std::max({unitarity, braid, commutation}); }

YangBaxterReport yang_baxter_matrix_check(const CouplingParameters& params, int n,
                                          std::span<const UvSample> samples) {
    if (n < 3 || n > kMaxParticles) throw std::out_of_range("Yang-Baxter check needs 3 <= N <= 6");
    YangBaxterReport report;
    report.n_particles = n;
    report.samples = samples.size();
    const auto order = static_cast<Eigen::Index>(factorial(n));
    const ComplexMatrix identity = ComplexMatrix::Identity(order, order);
    const auto max_abs = [](const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); };

    for (const UvSample& s : samples) {
        const double u = s.u;
        const double v = s.v;
        for (int i = 1; i < n; ++i) {
            const YangMatrix yu = build_yang_matrix(params, n, i, u);
            const YangMatrix ymu = build_yang_matrix(params, n, i, -u);
            report.unitarity = std::max(report.unitarity, max_abs(ymu.apply(yu.dense()) - identity));

            if (i + 1 < n) {
                const YangMatrix yi_v = build_yang_matrix(params, n, i, v);
                const YangMatrix yi_w = build_yang_matrix(params, n, i, u + v);
                const YangMatrix yj_u = build_yang_matrix(params, n, i + 1, u);
                const YangMatrix yj_v = build_yang_matrix(params, n, i + 1, v);
                const YangMatrix yj_w = build_yang_matrix(params, n, i + 1, u + v);
                const ComplexMatrix lhs = yi_v.apply(yj_w.apply(yu.dense()));
                const ComplexMatrix rhs = yj_u.apply(yi_w.apply(yj_v.dense()));
                report.braid = std::max(report.braid, max_abs(lhs - rhs));
            }
            for (int j = i + 2; j < n; ++j) {
                const YangMatrix yj_v = build_yang_matrix(params, n, j, v);
                const ComplexMatrix lhs = yu.apply(yj_v.dense());
                const ComplexMatrix rhs = yj_v.apply(yu.dense());
                report.commutation = std::max(report.commutation, max_abs(lhs - rhs));
            }
        }
    }
    return report;
}

YangBaxterReport yang_baxter_matrix_check(const CouplingParameters& params, int n, std::size_t samples,
                                          std::uint64_t seed) {
    const auto panel = uv_panel(params, seed, samples);
    return yang_baxter_matrix_check(params, n, panel);
}

std::array<std::size_t, 6> orbit_positions(int n, int site, std::size_t q_prime) {
    const auto perms = permutation_table(n);
    const std::size_t a = q_prime;
    const std::size_t b = perms->right_transposition(a, site);
    const std::size_t c = perms->right_transposition(a, site + 1);
    const std::size_t d = perms->right_transposition(c, site);
    const std::size_t e = perms->right_transposition(b, site + 1);
    const std::size_t f = perms->right_transposition(e, site);
    return {a, b, c, d, e, f};
}

double block_reduction_check(const CouplingParameters& params, int n, int site, double u, double v) {
    if (n < 4 || n > kMaxParticles) throw std::out_of_range("block reduction needs 4 <= N <= 6");
    if (site < 1 || site > n - 2) throw std::out_of_range("block reduction needs 1 <= i <= N - 2");
    const ComplexMatrix small_i = build_yang_matrix(params, 3, 1, u).dense();
    const ComplexMatrix small_j = build_yang_matrix(params, 3, 2, v).dense();
    const ComplexMatrix big_i = build_yang_matrix(params, n, site, u).dense();
    const ComplexMatrix big_j = build_yang_matrix(params, n, site + 1, v).dense();

    const auto perms = permutation_table(n);
    double worst = 0.0;
    for (std::size_t q = 0; q < perms->order(); ++q) {
        const Permutation& p = perms->at(q);
        // The largest orbit element is increasing on positions i, i+1, i+2.
        if (!(p(site) < p(site + 1) && p(site + 1) < p(site + 2))) continue;
        const auto orbit = orbit_positions(n, site, q);
        for (int r = 0; r < 6; ++r) {
            for (int s = 0; s < 6; ++s) {
                const auto br = static_cast<Eigen::Index>(orbit[static_cast<std::size_t>(r)]);
                const auto bs = static_cast<Eigen::Index>(orbit[static_cast<std::size_t>(s)]);
                worst = std::max({worst, std::abs(big_i(br, bs) - small_i(r, s)),
                                  std::abs(big_j(br, bs) - small_j(r, s))});
            }
        }
    }
    return worst;
}

} // namespace pointbethe
