// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file factorization.hpp
 * @brief Consistency identities for the two-body amplitudes, the matrix
 *        Yang-Baxter relations and the integrability classification.
 *
 * The identities are rational in (u, v). They are tested by evaluation on a
 * seeded panel of (u, v) pairs, which detects a violation with probability one.
 */

#pragma once

#include "pointbethe/couplings.hpp"
#include "pointbethe/panel.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace pointbethe {

inline constexpr std::size_t kFactorizationCount = 13;
/// The first four identities (unitarity of the two-body problem) hold for all couplings.
inline constexpr std::size_t kUniversalCount = 4;

inline constexpr double kPassTolerance = 1e-8;
inline constexpr double kFailFloor = 1e-3;
/// Tolerance used when an operation needs to know that couplings are integrable.
inline constexpr double kIntegrabilityTolerance = 1e-8;

struct FactorizationReport {
    CouplingParameters params;
    std::vector<UvSample> samples;
    /// Max |LHS - RHS| per identity over the samples.
    std::array<double, kFactorizationCount> residuals{};
    /// (|gamma|, |lambda (c lambda + eta^2 - 1)|, |lambda eta|).
    std::array<double, 3> reduced_condition_residuals{};

    double max_residual() const noexcept;
    double max_universal_residual() const noexcept;
};

/// Residuals LHS - RHS of all identities at one (u, v). Throws PoleAtU.
std::array<Complex, kFactorizationCount> factorization_terms(const CouplingParameters& params, double u, double v);

FactorizationReport check_factorization(const CouplingParameters& params, double u, double v);
FactorizationReport check_factorization(const CouplingParameters& params, std::span<const UvSample> samples);

std::array<double, 3> reduced_condition_residuals(const CouplingParameters& params);

enum class IntegrabilityTag { Family1, Family2, NotIntegrable };

std::string to_string(IntegrabilityTag tag);
std::ostream& operator<<(std::ostream& os, IntegrabilityTag tag);

struct IntegrabilityClass {
    IntegrabilityTag tag = IntegrabilityTag::NotIntegrable;
    double tolerance = kIntegrabilityTolerance;

    bool integrable() const noexcept { return tag != IntegrabilityTag::NotIntegrable; }
};

/// Family1: lambda = gamma = 0. Family2: c lambda = 1, gamma = eta = 0.
IntegrabilityClass classify(const CouplingParameters& params, double tol = kIntegrabilityTolerance);

struct GridSpec {
    std::vector<double> c;
    std::vector<double> lambda;
    std::vector<double> gamma;
    std::vector<double> eta;
    std::uint64_t seed = 0;
    std::size_t samples = kDefaultPanelSize;

    std::size_t size() const noexcept { return c.size() * lambda.size() * gamma.size() * eta.size(); }
};

struct ScanRow {
    CouplingParameters params;
    IntegrabilityClass cls;
    double max_residual = 0.0;
    bool passes = false; ///< max_residual <= pass tolerance

    /// Residual verdict and classification agree, with the fail floor respected.
    bool consistent() const noexcept;
};

/// Grid order: c outermost, eta innermost. Each point gets its own seeded panel.
std::vector<ScanRow> scan_couplings(const GridSpec& grid, double pass_tolerance = kPassTolerance);

/// `c,lambda,gamma,eta,class,max_residual` with 17 significant digits.
void write_scan_csv(std::ostream& os, std::span<const ScanRow> rows);

struct YangBaxterReport {
    int n_particles = 0;
    std::size_t samples = 0;
    double unitarity = 0.0;   ///< Y_i(-u) Y_i(u) - I
    double braid = 0.0;       ///< Y_i(v) Y_{i+1}(u+v) Y_i(u) - Y_{i+1}(u) Y_i(u+v) Y_{i+1}(v)
    double commutation = 0.0; ///< Y_i(u) Y_j(v) - Y_j(v) Y_i(u), |i - j| >= 2

    double max_residual() const noexcept;
};

/// Max-norm residuals over `samples` seeded (u, v) pairs and all admissible i, j.
/// Requires 3 <= N <= 6. Throws PoleAtU.
YangBaxterReport yang_baxter_matrix_check(const CouplingParameters& params, int n, std::size_t samples,
                                          std::uint64_t seed = 0);
YangBaxterReport yang_baxter_matrix_check(const CouplingParameters& params, int n,
                                          std::span<const UvSample> samples);

/// Elements of the orbit of Q' under <T_i, T_{i+1}> as 0-based positions, in the
/// order Q', Q'T_i, Q'T_{i+1}, Q'T_{i+1}T_i, Q'T_iT_{i+1}, Q'T_iT_{i+1}T_i.
std::array<std::size_t, 6> orbit_positions(int n, int site, std::size_t q_prime);

/// Max entrywise deviation of the 6x6 restrictions of Y_i(u), Y_{i+1}(v) on every
/// orbit from the N = 3 matrices Y_1(u), Y_2(v). Requires N >= 4, 1 <= i <= N - 2.
double block_reduction_check(const CouplingParameters& params, int n, int site, double u, double v);

} // namespace pointbethe
