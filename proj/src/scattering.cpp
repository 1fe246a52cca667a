// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/scattering.hpp"

#include "pointbethe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace pointbethe {

namespace {

struct PlusPair {
    Complex s_t;
    Complex s_r;
};

PlusPair plus_amplitudes(const CouplingParameters& p, double u, Complex den) {
    const double g2e2 = p.gamma * p.gamma + p.eta * p.eta;
    const Complex t_num = Complex{g2e2 + p.c * p.lambda - 1.0, -2.0 * p.eta} * u;
    const Complex r_num = Complex{2.0 * p.gamma * u, p.lambda * u * u + p.c};
    return {t_num / den, r_num / den};
}

// Residuals of both boundary conditions on the boundary x1 = x2 = x0 for
// psi_- = e1 + s_r e2 (x1 < x2) and psi_+ = s_t e1 (x2 < x1), with D = d1 - d2.
Eigen::Vector2cd boundary_conditions(const CouplingParameters& p, double k1, double k2, double x0,
                                     Complex s_t, Complex s_r) {
    const Complex e1 = std::exp(kI * (k1 * x0 + k2 * x0));
    const Complex e2 = std::exp(kI * (k2 * x0 + k1 * x0));
    const Complex d_e1 = kI * (k1 - k2) * e1;
    const Complex d_e2 = kI * (k2 - k1) * e2;

    const Complex psi_minus = e1 + s_r * e2;
    const Complex psi_plus = s_t * e1;
    const Complex dpsi_minus = d_e1 + s_r * d_e2;
    const Complex dpsi_plus = s_t * d_e1;
    const Complex avg = 0.5 * (psi_plus + psi_minus);
    const Complex davg = 0.5 * (dpsi_plus + dpsi_minus);

    const Complex g_minus_ie{p.gamma, -p.eta};
    const Complex g_plus_ie{p.gamma, p.eta};
    Eigen::Vector2cd r;
    r(0) = (dpsi_plus - dpsi_minus) - 2.0 * p.c * avg + 2.0 * g_minus_ie * davg;
    r(1) = (psi_plus - psi_minus) - 2.0 * p.lambda * davg - 2.0 * g_plus_ie * avg;
    return r;
}

PlusPair solve_boundary_system(const CouplingParameters& p, double k1, double k2) {
    constexpr double x0 = 0.3125;
    // The conditions are affine in (s_t, s_r); recover the coefficients by probing.
    const Eigen::Vector2cd r0 = boundary_conditions(p, k1, k2, x0, 0.0, 0.0);
    const Eigen::Vector2cd col_t = boundary_conditions(p, k1, k2, x0, 1.0, 0.0) - r0;
    const Eigen::Vector2cd col_r = boundary_conditions(p, k1, k2, x0, 0.0, 1.0) - r0;
    Eigen::Matrix2cd a;
    a << col_t, col_r;
    const double scale = std::max({a.cwiseAbs().maxCoeff(), r0.cwiseAbs().maxCoeff(), 1.0});
    if (std::abs(a.determinant()) <= 1e-13 * scale * scale) {
        std::ostringstream msg;
        msg << "boundary system singular at k1=" << k1 << ", k2=" << k2;
        throw SingularSystem(msg.str());
    }
    const Eigen::Vector2cd x = a.fullPivLu().solve(-r0);
    return {x(0), x(1)};
}

} // namespace

Complex amplitude_denominator(const CouplingParameters& p, double u) {
    const double b = p.gamma * p.gamma + p.eta * p.eta + p.c * p.lambda + 1.0;
    return Complex{-b * u, p.lambda * u * u - p.c};
}

double pole_distance(const CouplingParameters& p, double u) {
    return std::abs(amplitude_denominator(p, u)) / std::max(1.0, u * u);
}

AmplitudeSet amplitudes(const CouplingParameters& p, double u) {
    const Complex den = amplitude_denominator(p, u);
    if (std::abs(den) <= kPoleGuard * std::max(1.0, u * u)) {
        std::ostringstream msg;
        msg << "amplitude pole at u=" << u << " for (c, lambda, gamma, eta) = (" << p.c << ", "
            << p.lambda << ", " << p.gamma << ", " << p.eta << ")";
        throw PoleAtU(msg.str());
    }
    const PlusPair plus = plus_amplitudes(p, u, den);
    const PlusPair minus = plus_amplitudes(p.reflected(), u, den);
    return AmplitudeSet{plus.s_t, plus.s_r, minus.s_t, minus.s_r, u};
}

AmplitudeSet amplitudes_bvp_oracle(const CouplingParameters& p, double k1, double k2) {
    if (k1 == k2) throw std::invalid_argument("oracle requires k1 != k2");
    const PlusPair plus = solve_boundary_system(p, k1, k2);
    const PlusPair minus = solve_boundary_system(p.reflected(), k1, k2);
    return AmplitudeSet{plus.s_t, plus.s_r, minus.s_t, minus.s_r, k1 - k2};
}

} // namespace pointbethe
