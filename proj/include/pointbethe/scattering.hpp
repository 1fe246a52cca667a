// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scattering.hpp
 * @brief Two-body reflection and transmission amplitudes.
 *
 * For relative momentum u = k1 - k2 the plus amplitudes are
 *
 *   S_T^+(u) = (g^2 + e^2 - 2ie + c l - 1) u / D(u)
 *   S_R^+(u) = (i l u^2 + 2 g u + i c) / D(u)
 *   D(u)     = i l u^2 - (g^2 + e^2 + c l + 1) u - i c
 *
 * and the minus amplitudes flip (gamma, eta) -> (-gamma, -eta). D is even in
 * (gamma, eta), so both sets share their poles.
 */

#pragma once

#include "pointbethe/couplings.hpp"
#include "pointbethe/types.hpp"

namespace pointbethe {

struct AmplitudeSet {
    Complex s_t_plus;
    Complex s_r_plus;
    Complex s_t_minus;
    Complex s_r_minus;
    double u = 0.0;
};

/// Pole guard band: |D(u)| <= kPoleGuard * max(1, u^2) counts as a pole.
inline constexpr double kPoleGuard = 1e-12;

Complex amplitude_denominator(const CouplingParameters& params, double u);

/// |D(u)| / max(1, u^2); small values mean u sits near a bound-state pole.
double pole_distance(const CouplingParameters& params, double u);

/// Closed form. Throws PoleAtU inside the guard band.
AmplitudeSet amplitudes(const CouplingParameters& params, double u);

/// Independent route: inserts the two-body plane-wave Ansatz into the
/// regularized boundary conditions at x1 = x2 and solves the 2x2 system for
/// (S_T, S_R); the minus pair comes from the reflected couplings.
/// Throws SingularSystem when the system is numerically singular.
AmplitudeSet amplitudes_bvp_oracle(const CouplingParameters& params, double k1, double k2);

} // namespace pointbethe
