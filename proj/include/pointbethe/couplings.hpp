// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file couplings.hpp
 * @brief The four-parameter family of local two-body interactions.
 *
 * A local interaction at x = 0 is parameterized by real couplings
 * (c, lambda, gamma, eta): c is the delta strength, lambda the
 * delta-prime-type strength, gamma and eta the first-derivative couplings.
 * Units are hbar = 2m = 1, so the kinetic term is -d^2/dx^2.
 *
 * The interaction is equivalent to the matching conditions
 *
 *     U+ (psi'(0+), psi(0+))^T = U- (psi'(-0), psi(-0))^T,
 *
 * i.e. (psi'(0+), psi(0+))^T = U (psi'(-0), psi(-0))^T with U = U+^{-1} U-.
 */

#pragma once

#include "pointbethe/types.hpp"

#include <Eigen/Dense>

namespace pointbethe {

struct CouplingParameters {
    double c = 0.0;
    double lambda = 0.0;
    double gamma = 0.0;
    double eta = 0.0;

    /// Throws std::invalid_argument unless all four couplings are finite.
    static CouplingParameters checked(double c, double lambda, double gamma, double eta);

    bool is_finite() const noexcept;

    /// Couplings with (gamma, eta) -> (-gamma, -eta); used for the minus amplitudes.
    CouplingParameters reflected() const noexcept { return {c, lambda, -gamma, -eta}; }

    friend bool operator==(const CouplingParameters&, const CouplingParameters&) = default;
};

/// Acts on (psi', psi) column vectors: row 1 maps to psi'(0+), row 2 to psi(0+).
struct BoundaryMatrix {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();

    Complex u11() const { return u(0, 0); }
    Complex u12() const { return u(0, 1); }
    Complex u21() const { return u(1, 0); }
    Complex u22() const { return u(1, 1); }
};

/// Parameters of the step-function gauge relating (c, 0, 0, eta) to a pure delta.
struct GaugeData {
    double c_tilde = 0.0;
    double alpha = 0.0; ///< principal branch, in (-pi, pi]
};

struct BoundaryPair {
    Eigen::Matrix2cd plus;
    Eigen::Matrix2cd minus;
};

BoundaryPair build_u_pm(const CouplingParameters& params);

/// U = U+^{-1} U-. Throws DegenerateBoundary when |det U+| <= 1e-12.
BoundaryMatrix boundary_matrix(const CouplingParameters& params);

/// Max-norm of U^dagger J U - J with J = [[0, -1], [1, 0]].
double check_symplectic(const BoundaryMatrix& bm);

/// Throws NotGaugeFamily unless lambda == gamma == 0.
GaugeData gauge_data(const CouplingParameters& params);

} // namespace pointbethe
