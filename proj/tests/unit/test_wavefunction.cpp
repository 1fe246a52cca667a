// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/errors.hpp"
#include "pointbethe/wavefunction.hpp"

#include "oracles.hpp"

#include <sstream>

#include <gtest/gtest.h>

using namespace pointbethe;

namespace {

PositionVector pos(std::vector<double> x) { return PositionVector(std::move(x)); }

BetheState make_state(const CouplingParameters& p, std::vector<double> k) {
    const int n = static_cast<int>(k.size());
    return BetheState::build(p, MomentumVector(std::move(k)), CoefficientVector::unit(n));
}

double all_pairs_residual(const WedgeFunction& f, const CouplingParameters& p, int n, std::uint64_t seed) {
    double worst = 0.0;
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            const auto samples = boundary_samples(n, j, k, 50, seed + static_cast<std::uint64_t>(10 * j + k));
            worst = std::max(worst, boundary_residual(f, p, j, k, samples).max());
        }
    return worst;
}

} // namespace

TEST(Wedge, Locate) {
    EXPECT_TRUE(locate_wedge(pos({1, 2, 3})).ordering.is_identity());
    EXPECT_EQ(locate_wedge(pos({3, 1, 2})).ordering, Permutation({2, 3, 1}));
    EXPECT_THROW(locate_wedge(pos({1, 1, 2})), OnBoundary);
    EXPECT_THROW(pos({0.0, NAN}), std::invalid_argument);
}

TEST(Evaluate, SingleParticle) {
    const BetheState s = make_state({1, 0, 0, 0}, {0.7});
    EXPECT_LT(std::abs(evaluate(s, pos({1.3})) - std::exp(kI * 0.7 * 1.3)), 1e-15);
}

TEST(Evaluate, FreePlaneWave) {
    const BetheState s = make_state({0, 0, 0, 0}, {0.4, -1.1});
    for (const auto& x : {std::vector<double>{0.1, 0.9}, std::vector<double>{1.5, -0.2}, std::vector<double>{0.3, 0.3}}) {
        const Complex expected = std::exp(kI * (0.4 * x[0] - 1.1 * x[1]));
        EXPECT_LT(std::abs(evaluate(s, pos(x)) - expected), 1e-14);
    }
}

TEST(Evaluate, CoincidenceAveragesWedges) {
    const BetheState s = make_state({1.2, 0, 0, 0.4}, {0.4, -1.1});
    const PositionVector x = pos({0.5, 0.5});
    const Complex a = wedge_jet(s, Permutation({1, 2}), x).value;
    const Complex b = wedge_jet(s, Permutation({2, 1}), x).value;
    EXPECT_LT(std::abs(evaluate(s, x) - 0.5 * (a + b)), 1e-15);
}

TEST(BoundaryResidual, FreeIsExact) {
    const BetheState s = make_state({0, 0, 0, 0}, {0.4, -1.1, 0.2});
    // Same plane wave on both sides of every face; only rounding remains.
    EXPECT_LT(all_pairs_residual(as_wedge_function(s), s.params(), 3, 1), 1e-14);
}

TEST(BoundaryResidual, IntegrableStates) {
    for (const CouplingParameters p : {CouplingParameters{2, 0, 0, 1}, CouplingParameters{-0.7, 0, 0, 0.3},
                                       CouplingParameters{2, 0.5, 0, 0}, CouplingParameters{0.5, 2, 0, 0}}) {
        EXPECT_LT(all_pairs_residual(as_wedge_function(make_state(p, {0.4, -1.1})), p, 2, 2), 1e-9);
        EXPECT_LT(all_pairs_residual(as_wedge_function(make_state(p, {0.4, -1.1, 1.7})), p, 3, 3), 1e-9);
    }
}

TEST(BoundaryResidual, CorruptedTableIsDetected) {
    const CouplingParameters p{2, 0, 0, 1};
    const BetheState s = make_state(p, {0.4, -1.1, 1.7});
    auto table = s.table();
    table[3](1) += 1e-2;
    const BetheState bad = BetheState::from_table(p, s.momenta(), table);
    EXPECT_GE(all_pairs_residual(as_wedge_function(bad), p, 3, 3), 1e-4);
}

TEST(BoundaryResidual, SampleGenerator) {
    const auto samples = boundary_samples(4, 2, 4, 20, 5);
    ASSERT_EQ(samples.size(), 20u);
    for (const auto& x : samples) {
        EXPECT_EQ(x(2), x(4));
        EXPECT_GE(std::abs(x(1) - x(3)), 1e-2);
    }
    EXPECT_THROW(boundary_samples(3, 2, 1, 1, 0), std::invalid_argument);
}

TEST(Schrodinger, FiniteDifferences) {
    const double h = 1e-4;
    for (const CouplingParameters p : {CouplingParameters{2, 0, 0, 1}, CouplingParameters{2, 0.5, 0, 0}}) {
        const BetheState s = make_state(p, {0.4, -1.1, 1.7});
        for (const auto& x : interior_samples(3, 20, 9, 2.0, 0.05)) {
            const double scale = std::max(1.0, std::abs(evaluate(s, x)));
            EXPECT_LT(std::abs(schrodinger_residual_fd(s, x, h)), 100 * h * h * scale);
        }
    }
}

TEST(Determinant, ClosedFormMatchesDifferentiation) {
    EXPECT_LT(std::abs(determinant_eigenfunction(MomentumVector({1, -1}), 2.0, pos({0, 1})) -
                       oracle::determinant_by_differentiation({1, -1}, 2.0, {0, 1})),
              1e-12);
    for (double c : {0.0, 1.5, -0.8}) {
        const std::vector<double> k{0.3, -0.9, 1.4};
        const std::vector<double> x{-0.7, 0.2, 1.1};
        EXPECT_LT(std::abs(determinant_eigenfunction(MomentumVector(k), c, pos(x)) -
                           oracle::determinant_by_differentiation(k, c, x)),
                  1e-11);
    }
}

TEST(Determinant, SingleParticle) {
    EXPECT_LT(std::abs(determinant_eigenfunction(MomentumVector({0.6}), 1.0, pos({2.0})) - std::exp(kI * 1.2)), 1e-15);
}

TEST(Determinant, WrongWedge) {
    EXPECT_THROW(determinant_eigenfunction(MomentumVector({1, -1}), 2.0, pos({1, 0})), WrongWedge);
    EXPECT_NO_THROW(determinant_eigenfunction(MomentumVector({1, -1}), 2.0, pos({0.5, 0.5})));
}

TEST(Determinant, ProportionalToBetheCoefficients) {
    for (double c : {2.0, 0.5}) {
        for (int n : {2, 3}) {
            std::vector<double> kv{0.4, -1.1, 1.7};
            kv.resize(static_cast<std::size_t>(n));
            const MomentumVector k(kv);
            const BetheState s = BetheState::build({c, 1.0 / c, 0, 0}, k, CoefficientVector::unit(n));
            const auto d = determinant_coefficients(k, c);
            const Complex ratio = d[0] / s.coefficient(0, 0);
            for (std::size_t p = 0; p < d.size(); ++p) {
                EXPECT_LT(std::abs(d[p] - ratio * s.coefficient(p, 0)), 1e-10 * std::abs(d[0]));
            }
        }
    }
}

TEST(Statistics, SymmetryUnderSwaps) {
    const MomentumVector k({0.4, -1.1, 1.7});
    const auto psi = [&k](const PositionVector& x) { return determinant_eigenfunction(k, 1.0, x); };
    const PositionVector x = pos({0.3, -0.5, 1.2});
    const PositionVector swapped = pos({-0.5, 0.3, 1.2});
    EXPECT_LT(std::abs(extend_by_statistics(psi, Statistics::Boson, x) -
                       extend_by_statistics(psi, Statistics::Boson, swapped)),
              1e-14);
    EXPECT_LT(std::abs(extend_by_statistics(psi, Statistics::Fermion, x) +
                       extend_by_statistics(psi, Statistics::Fermion, swapped)),
              1e-14);
    EXPECT_EQ(extend_by_statistics(psi, Statistics::Fermion, pos({0.3, 0.3, 1.0})), Complex(0.0, 0.0));
}

TEST(Statistics, ExtendedDeterminantSatisfiesBoundaryConditions) {
    for (double c : {2.0, 0.5}) {
        const CouplingParameters p{c, 1.0 / c, 0, 0};
        for (int n : {2, 3}) {
            std::vector<double> kv{0.4, -1.1, 1.7};
            kv.resize(static_cast<std::size_t>(n));
            const MomentumVector k(kv);
            for (Statistics st : {Statistics::Fermion, Statistics::Boson}) {
                const WedgeFunction f =
                    extend_jet_by_statistics([k, c](const PositionVector& y) { return determinant_jet(k, c, y); }, st);
                EXPECT_LT(all_pairs_residual(f, p, n, 4), 1e-9 * std::max(1.0, std::abs(determinant_coefficients(k, c)[0])));
            }
        }
    }
}

TEST(Gauge, MapsToDeltaGas) {
    for (const auto& [c, eta] : {std::pair{2.0, 1.0}, std::pair{1.0, 0.5}}) {
        const CouplingParameters p{c, 0, 0, eta};
        const CouplingParameters delta{c / (1 + eta * eta), 0, 0, 0};
        for (int n : {2, 3}) {
            std::vector<double> kv{0.4, -1.1, 1.7};
            kv.resize(static_cast<std::size_t>(n));
            const BetheState s = make_state(p, kv);
            const double alpha = gauge_data(p).alpha;
            EXPECT_LT(all_pairs_residual(gauged_wedge_function(s, alpha), delta, n, 6), 1e-9);
            // Without the phase the state does not solve the delta gas.
            EXPECT_GT(all_pairs_residual(as_wedge_function(s), delta, n, 6), 1e-3);
        }
    }
}

TEST(Gauge, TransformIsBetheStateOfDeltaGas) {
    const CouplingParameters p{2, 0, 0, 1};
    const BetheState s = make_state(p, {0.4, -1.1, 1.7});
    const BetheState mapped = gauge_transform(s);
    EXPECT_NEAR(mapped.params().c, 1.0, 1e-15);
    EXPECT_LT(coefficient_relation_residual(mapped), 1e-12);
    const PositionVector x = pos({0.8, -0.3, 0.1});
    EXPECT_LT(std::abs(evaluate(mapped, x) - gauge_map(s, x)), 1e-13);
}

TEST(Gauge, RoundTripAndTrivialPhase) {
    const BetheState s = make_state({2, 0, 0, 1}, {0.4, -1.1, 1.7});
    const PositionVector x = pos({0.8, -0.3, 0.1});
    const double alpha = 0.9;
    const Complex there = gauge_map(s, x, alpha);
    const Complex back = std::exp(kI * alpha * inversion_weight(x)) * there;
    EXPECT_LT(std::abs(back - evaluate(s, x)), 1e-15);

    const BetheState plain = make_state({2, 0, 0, 0}, {0.4, -1.1});
    EXPECT_EQ(gauge_map(plain, pos({0.5, -0.2})), evaluate(plain, pos({0.5, -0.2})));
    EXPECT_THROW(gauge_map(make_state({2, 0.5, 0, 0}, {0.4, -1.1}), pos({0.5, -0.2})), NotGaugeFamily);
    EXPECT_DOUBLE_EQ(inversion_weight(pos({1.0, 1.0, 0.0})), 2.5);
}

TEST(GridCsv, Format) {
    const BetheState s = make_state({0, 0, 0, 0}, {0.5, -0.5});
    std::ostringstream os;
    const std::vector<PositionVector> pts{pos({0.0, 0.0}), pos({1.0, 0.0})};
    write_grid_csv(os, [&s](const PositionVector& x) { return evaluate(s, x); }, pts);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x1,x2,re_psi,im_psi");
    std::getline(in, line);
    EXPECT_EQ(line, "0,0,1,0");
}
