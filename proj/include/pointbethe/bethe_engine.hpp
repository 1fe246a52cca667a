// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe_engine.hpp
 * @brief Coordinate Bethe Ansatz coefficients and the N! x N! matrices Y_i(u).
 *
 * In the wedge x_{Q(1)} < ... < x_{Q(N)} the eigenfunction is
 *
 *     psi(x) = sum_P A_P(Q) exp(i sum_j k_{P(j)} x_{Q(j)}).
 *
 * A_P is the vector (A_P(Q))_Q in rank order (identity first). Neighbouring
 * momentum orderings are related by A_{PT_i} = Y_i(k_{P(i)} - k_{P(i+1)}) A_P with
 * Y_i(u) = S_R^i(u) + S_T^i(u) T^_i, and A_P = Y_P(k) A_I follows by composing
 * these steps along any word for P. The words agree exactly when the
 * couplings are integrable.
 */

#pragma once

#include "pointbethe/couplings.hpp"
#include "pointbethe/permutation.hpp"
#include "pointbethe/scattering.hpp"
#include "pointbethe/types.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace pointbethe {

/// Shared, lazily built permutation table for S_N (thread-safe).
std::shared_ptr<const PermutationTable> permutation_table(int n);

/// Largest N for which N! x N! matrices are built.
inline constexpr int kMaxParticles = 6;

/// Pairwise-distinct momenta k_1..k_N.
class MomentumVector {
public:
    /// Throws std::invalid_argument for non-finite or coinciding (|k_i - k_j| <= 1e-12) momenta.
    explicit MomentumVector(std::vector<double> k);

    int size() const noexcept { return static_cast<int>(k_.size()); }
    /// k_j, 1-based.
    double operator()(int j) const { return k_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<double>& values() const noexcept { return k_; }
    double energy() const noexcept;

private:
    std::vector<double> k_;
};

/// Amplitude slot on a diagonal of S_R^i / S_T^i.
enum class Branch { Plus, Minus };

class YangMatrix {
public:
    YangMatrix(std::shared_ptr<const PermutationTable> table, int site, double u,
               std::vector<Complex> diag_r, std::vector<Complex> diag_t);

    int n_particles() const noexcept { return table_->n_particles(); }
    int site() const noexcept { return site_; }
    double u() const noexcept { return u_; }
    std::size_t order() const noexcept { return diag_r_.size(); }

    /// Diagonal of S_R^i and S_T^i, rank order.
    const std::vector<Complex>& diag_r() const noexcept { return diag_r_; }
    const std::vector<Complex>& diag_t() const noexcept { return diag_t_; }
    /// Column paired with `row` through right multiplication by T_i.
    std::size_t partner(std::size_t row) const { return table_->right_transposition(row, site_); }

    ComplexVector apply(const ComplexVector& a) const;
    /// Y * m, column by column.
    ComplexMatrix apply(const ComplexMatrix& m) const;
    ComplexMatrix dense() const;

private:
    std::shared_ptr<const PermutationTable> table_;
    int site_;
    double u_;
    std::vector<Complex> diag_r_;
    std::vector<Complex> diag_t_;
};

/// Y_i(u) from the two-body relations: for Q with Q(i) < Q(i+1),
/// row Q = S_R^+ at Q, S_T^- at QT_i; row QT_i = S_R^- at QT_i, S_T^+ at Q.
YangMatrix build_yang_matrix(const CouplingParameters& params, int n, int site, double u);
/// Same construction from given amplitude values.
YangMatrix build_yang_matrix(const AmplitudeSet& amps, int n, int site);

/// S_R branch for each diagonal entry read off the closed-form index pattern
/// (period (i+1)!); S_T takes the opposite branch.
std::vector<Branch> periodic_branch_pattern(int n, int site);

struct SDiagonals {
    std::vector<Complex> s_r;
    std::vector<Complex> s_t;
};

/// Diagonals of S_R^i, S_T^i from the periodic pattern. Cross-check for build_yang_matrix.
SDiagonals build_s_diagonals_periodic(const CouplingParameters& params, int n, int site, double u);

/// Length-N! coefficient vector in rank order.
struct CoefficientVector {
    int n_particles = 1;
    ComplexVector entries;

    /// Throws std::invalid_argument unless entries.size() == N!.
    static CoefficientVector checked(int n, ComplexVector entries);
    /// Unit vector at the wedge of rank `position + 1`.
    static CoefficientVector unit(int n, std::size_t position = 0);
};

/// A_P = Y_P(k) A_I along decompose(P). Throws NotIntegrable outside both
/// integrable families, PoleAtU when a step hits a pole.
CoefficientVector propagate(const CouplingParameters& params, const MomentumVector& momenta,
                            const CoefficientVector& a_identity, const Permutation& p);

/// Same along an explicit word T_{w_1} ... T_{w_L}.
CoefficientVector propagate_word(const CouplingParameters& params, const MomentumVector& momenta,
                                 const CoefficientVector& a_identity, std::span<const int> word);

/// Full coefficient table: table[p] = A_P for P at rank position p.
class BetheState {
public:
    /// Propagates `a_identity` to every P (integrable couplings only).
    static BetheState build(const CouplingParameters& params, const MomentumVector& momenta,
                            const CoefficientVector& a_identity);
    /// Wraps a given table without checking the coefficient relations.
    static BetheState from_table(const CouplingParameters& params, const MomentumVector& momenta,
                                 std::vector<ComplexVector> table);

    const CouplingParameters& params() const noexcept { return params_; }
    const MomentumVector& momenta() const noexcept { return momenta_; }
    int n_particles() const noexcept { return momenta_.size(); }
    const PermutationTable& permutations() const noexcept { return *perms_; }
    /// A_P(Q) by rank positions.
    Complex coefficient(std::size_t p, std::size_t q) const {
        return table_[p](static_cast<Eigen::Index>(q));
    }
    const std::vector<ComplexVector>& table() const noexcept { return table_; }
    double energy() const noexcept { return momenta_.energy(); }

private:
    BetheState(const CouplingParameters& params, const MomentumVector& momenta,
               std::vector<ComplexVector> table);

    CouplingParameters params_;
    MomentumVector momenta_;
    std::shared_ptr<const PermutationTable> perms_;
    std::vector<ComplexVector> table_;
};

/// Largest violation of the two-body coefficient relations over all P, i and
/// Q with Q(i) < Q(i+1).
double coefficient_relation_residual(const BetheState& state);

struct BcOracleResult {
    std::vector<ComplexVector> table; ///< least-squares A_P, rank order
    double residual = 0.0;            ///< max |row| of the full system / max |A_I|
    std::size_t n_equations = 0;
    std::size_t nullity = 0;          ///< numerical null-space dimension of the homogeneous system
    std::size_t expected_nullity = 0; ///< N!
    bool rank_ok() const noexcept { return nullity == expected_nullity; }
};

/// Brute force: assembles every boundary relation between the A_P(Q) (two per
/// P, i and Q with Q(i) < Q(i+1)), fixes the vector A_I and solves the rest in
/// the least-squares sense. Requires N <= 4.
BcOracleResult coefficients_bc_oracle(const CouplingParameters& params, const MomentumVector& momenta,
                                      const CoefficientVector& a_identity);

} // namespace pointbethe
