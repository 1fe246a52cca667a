// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file wavefunction.hpp
 * @brief Position-space evaluation of Bethe eigenfunctions, boundary-condition
 *        residuals, the determinant eigenfunction and the step-function gauge.
 *
 * Inside a wedge x_{Q(1)} < ... < x_{Q(N)} every function here is a finite sum of
 * plane waves, so values and gradients are available in closed form and can be
 * continued to the wedge boundary. One-sided limits at x_j = x_k are taken from
 * the two wedges that share that face.
 */

#pragma once

#include "pointbethe/bethe_engine.hpp"
#include "pointbethe/couplings.hpp"
#include "pointbethe/permutation.hpp"
#include "pointbethe/types.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

namespace pointbethe {

/// Coordinates closer than this count as coinciding.
inline constexpr double kCoincidenceTolerance = 1e-12;

class PositionVector {
public:
    /// Throws std::invalid_argument for an empty or non-finite vector.
    explicit PositionVector(std::vector<double> x);

    int size() const noexcept { return static_cast<int>(x_.size()); }
    /// x_j, 1-based.
    double operator()(int j) const { return x_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<double>& values() const noexcept { return x_; }

private:
    std::vector<double> x_;
};

struct Wedge {
    Permutation ordering; ///< x_{Q(1)} < ... < x_{Q(N)}
};

/// Sorting permutation of x. Throws OnBoundary when two coordinates coincide within `tol`.
Wedge locate_wedge(const PositionVector& x, double tol = kCoincidenceTolerance);

/// Value and gradient (d/dx_1 .. d/dx_N) of a wedge's plane-wave expansion.
struct WedgeJet {
    Complex value;
    std::vector<Complex> gradient;
};

/// Plane-wave expansion belonging to wedge Q, evaluated (continued) at x.
using WedgeFunction = std::function<WedgeJet(const Permutation& q, const PositionVector& x)>;

/// sum_P A_P(Q) exp(i sum_j k_{P(j)} x_{Q(j)}) and its gradient.
WedgeJet wedge_jet(const BetheState& state, const Permutation& q, const PositionVector& x);
WedgeFunction as_wedge_function(const BetheState& state);

/// psi(x). On a coincidence set it returns the average over all wedges whose
/// closure contains x.
Complex evaluate(const BetheState& state, const PositionVector& x, double tol = kCoincidenceTolerance);

struct BoundaryResidual {
    double r1 = 0.0; ///< derivative jump condition
    double r2 = 0.0; ///< value jump condition

    double max() const noexcept { return r1 > r2 ? r1 : r2; }
};

/// Max residuals of
///   (d_j - d_k)psi|+ - (d_j - d_k)psi|- = 2c avg(psi) - 2(gamma - i eta) avg((d_j - d_k)psi)
///   psi|+ - psi|-                       = 2 lambda avg((d_j - d_k)psi) + 2(gamma + i eta) avg(psi)
/// where + is the side x_j > x_k. Each sample must satisfy x_j = x_k with the
/// other coordinates apart. Requires j < k.
BoundaryResidual boundary_residual(const WedgeFunction& f, const CouplingParameters& params, int j, int k,
                                   std::span<const PositionVector> samples);
BoundaryResidual boundary_residual(const BetheState& state, int j, int k, std::span<const PositionVector> samples);

/// Random points in [-half_width, half_width]^N with x_j = x_k and every other
/// pair at least `gap` apart.
std::vector<PositionVector> boundary_samples(int n, int j, int k, std::size_t count, std::uint64_t seed,
                                             double half_width = 2.0, double gap = 1e-2);
/// Random points with all pairs at least `gap` apart.
std::vector<PositionVector> interior_samples(int n, std::size_t count, std::uint64_t seed,
                                             double half_width = 2.0, double gap = 1e-2);

/// Coefficient of exp(i k_P . x) in the determinant eigenfunction,
/// sgn(P) prod_{j>k} (i(k_{P(j)} - k_{P(k)}) + c), rank order in P.
std::vector<Complex> determinant_coefficients(const MomentumVector& k, double c);

/// prod_{j>k} (d_j - d_k + c) det[exp(i k_m x_n)] for x in the closure of the
/// identity wedge. Throws WrongWedge otherwise.
Complex determinant_eigenfunction(const MomentumVector& k, double c, const PositionVector& x,
                                  double tol = kCoincidenceTolerance);
/// Value and gradient of the same expansion; no wedge check.
WedgeJet determinant_jet(const MomentumVector& k, double c, const PositionVector& x);

enum class Statistics { Boson, Fermion };

/// psi(x) = sigma(Q) psi_I(x_Q) with sigma = 1 (bosons) or sgn(Q) (fermions).
/// On a coincidence set bosons use the continuous value and fermions give 0.
Complex extend_by_statistics(const std::function<Complex(const PositionVector&)>& value_in_identity_wedge,
                             Statistics statistics, const PositionVector& x, double tol = kCoincidenceTolerance);

/// Wedge-wise form of extend_by_statistics for a jet given on the identity wedge.
WedgeFunction extend_jet_by_statistics(std::function<WedgeJet(const PositionVector&)> jet_in_identity_wedge,
                                       Statistics statistics);

/// Number of pairs j < k with x_j > x_k, counting coincidences as 1/2.
double inversion_weight(const PositionVector& x, double tol = kCoincidenceTolerance);

/// exp(-i alpha sum_{j<k} Theta(x_j - x_k)) psi(x) with Theta(0) = 1/2.
Complex gauge_map(const BetheState& state, const PositionVector& x, double alpha);
/// Same with alpha from gauge_data. Throws NotGaugeFamily.
Complex gauge_map(const BetheState& state, const PositionVector& x);
/// The gauged function wedge by wedge (constant phase per wedge).
WedgeFunction gauged_wedge_function(const BetheState& state, double alpha);
/// Gauged state as a Bethe state of the delta gas (c_tilde, 0, 0, 0):
/// A~_P(Q) = exp(-i alpha inv(Q)) A_P(Q). Throws NotGaugeFamily.
BetheState gauge_transform(const BetheState& state);

/// (sum_j d_j^2 + E) psi by central differences with step h.
Complex schrodinger_residual_fd(const std::function<Complex(const PositionVector&)>& psi, double energy,
                                const PositionVector& x, double h);
Complex schrodinger_residual_fd(const BetheState& state, const PositionVector& x, double h);

/// `x1,...,xN,re_psi,im_psi` with 17 significant digits.
void write_grid_csv(std::ostream& os, const std::function<Complex(const PositionVector&)>& psi,
                    std::span<const PositionVector> points);

} // namespace pointbethe
