// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/couplings.hpp"

#include "pointbethe/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pointbethe {

namespace {
constexpr double kDegenerateDet = 1e-12;
}

CouplingParameters CouplingParameters::checked(double c, double lambda, double gamma, double eta) {
    CouplingParameters p{c, lambda, gamma, eta};
    if (!p.is_finite()) {
        std::ostringstream msg;
        msg << "coupling parameters must be finite: (" << c << ", " << lambda << ", " << gamma
            << ", " << eta << ")";
        throw std::invalid_argument(msg.str());
    }
    return p;
}

bool CouplingParameters::is_finite() const noexcept {
    return std::isfinite(c) && std::isfinite(lambda) && std::isfinite(gamma) && std::isfinite(eta);
}

BoundaryPair build_u_pm(const CouplingParameters& p) {
    const Complex g_minus_ie{p.gamma, -p.eta};
    const Complex g_plus_ie{p.gamma, p.eta};
    BoundaryPair out;
    out.plus << 1.0 + g_minus_ie, -p.c / 2.0, -2.0 * p.lambda, 1.0 - g_plus_ie;
    out.minus << 1.0 - g_minus_ie, p.c / 2.0, 2.0 * p.lambda, 1.0 + g_plus_ie;
    return out;
}

BoundaryMatrix boundary_matrix(const CouplingParameters& p) {
    const auto [plus, minus] = build_u_pm(p);
    const Complex det = plus.determinant();
    if (std::abs(det) <= kDegenerateDet) {
        std::ostringstream msg;
        msg << "det(U+) = " << det << " vanishes; boundary conditions are separated or limiting";
        throw DegenerateBoundary(msg.str());
    }
    Eigen::Matrix2cd inv;
    inv << plus(1, 1), -plus(0, 1), -plus(1, 0), plus(0, 0);
    inv /= det;
    return BoundaryMatrix{inv * minus};
}

double check_symplectic(const BoundaryMatrix& bm) {
    Eigen::Matrix2cd j;
    j << 0.0, -1.0, 1.0, 0.0;
    const Eigen::Matrix2cd diff = bm.u.adjoint() * j * bm.u - j;
    return diff.cwiseAbs().maxCoeff();
}

GaugeData gauge_data(const CouplingParameters& p) {
    if (p.lambda != 0.0 || p.gamma != 0.0) {
        throw NotGaugeFamily("gauge map requires lambda = gamma = 0");
    }
    const Complex phase = Complex{1.0, p.eta} / Complex{1.0, -p.eta};
    double alpha = std::arg(phase);
    if (alpha <= -M_PI) alpha += 2.0 * M_PI;
    return GaugeData{p.c / (1.0 + p.eta * p.eta), alpha};
}

} // namespace pointbethe
