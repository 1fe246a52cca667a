// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/errors.hpp"
#include "pointbethe/panel.hpp"
#include "pointbethe/scattering.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pointbethe;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double worst(const AmplitudeSet& a, const oracle::Amplitudes& b) {
    return std::max({rel(a.s_t_plus, b.t_plus), rel(a.s_r_plus, b.r_plus), rel(a.s_t_minus, b.t_minus),
                     rel(a.s_r_minus, b.r_minus)});
}

} // namespace

TEST(Scattering, FreeParticles) {
    const AmplitudeSet a = amplitudes({0, 0, 0, 0}, 1.7);
    EXPECT_NEAR(std::abs(a.s_t_plus - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a.s_r_plus), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a.s_t_minus - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a.s_r_minus), 0.0, 1e-15);
}

TEST(Scattering, DeltaGas) {
    const double c = 1.3;
    for (double u : {-4.0, -0.5, 0.2, 3.0}) {
        const AmplitudeSet a = amplitudes({c, 0, 0, 0}, u);
        const Complex den = kI * u - c;
        EXPECT_LT(std::abs(a.s_r_plus - c / den), 1e-14);
        EXPECT_LT(std::abs(a.s_t_plus - kI * u / den), 1e-14);
        EXPECT_LT(std::abs(a.s_r_minus - a.s_r_plus), 1e-15);
        EXPECT_LT(std::abs(a.s_t_minus - a.s_t_plus), 1e-15);
    }
}

TEST(Scattering, SecondFamilyHasNoTransmission) {
    const double c = 2.0;
    for (double u : {-3.0, 0.4, 1.1}) {
        const AmplitudeSet a = amplitudes({c, 1.0 / c, 0, 0}, u);
        EXPECT_LT(std::abs(a.s_t_plus), 1e-15);
        EXPECT_LT(std::abs(a.s_t_minus), 1e-15);
        EXPECT_LT(std::abs(a.s_r_plus - (kI * u + c) / (kI * u - c)), 1e-14);
    }
}

TEST(Scattering, MinusAmplitudesFlipGammaEta) {
    const CouplingParameters p{0.7, -0.4, 0.9, 1.3};
    const AmplitudeSet a = amplitudes(p, 0.8);
    const AmplitudeSet b = amplitudes(p.reflected(), 0.8);
    EXPECT_LT(std::abs(a.s_t_minus - b.s_t_plus), 1e-15);
    EXPECT_LT(std::abs(a.s_r_minus - b.s_r_plus), 1e-15);
}

TEST(Scattering, ClosedFormMatchesMatchingConditions) {
    SeededUniform draw(21);
    int checked = 0;
    for (int n = 0; n < 500; ++n) {
        const CouplingParameters p{draw(-3, 3), draw(-3, 3), draw(-3, 3), draw(-3, 3)};
        const double u = draw(-5, 5);
        if (pole_distance(p, u) < 1e-3) continue;
        EXPECT_LT(worst(amplitudes(p, u), oracle::amplitudes(p.c, p.lambda, p.gamma, p.eta, u)), 1e-10);
        ++checked;
    }
    EXPECT_GT(checked, 450);
}

TEST(Scattering, BoundaryValueOracleAgrees) {
    SeededUniform draw(22);
    for (int n = 0; n < 300; ++n) {
        const CouplingParameters p{draw(-3, 3), draw(-3, 3), draw(-3, 3), draw(-3, 3)};
        const double k1 = draw(-3, 3);
        const double k2 = draw(-3, 3);
        if (pole_distance(p, k1 - k2) < 1e-3 || std::abs(k1 - k2) < 1e-3) continue;
        const AmplitudeSet a = amplitudes(p, k1 - k2);
        const AmplitudeSet b = amplitudes_bvp_oracle(p, k1, k2);
        EXPECT_LT(rel(a.s_t_plus, b.s_t_plus), 1e-10);
        EXPECT_LT(rel(a.s_r_plus, b.s_r_plus), 1e-10);
        EXPECT_LT(rel(a.s_t_minus, b.s_t_minus), 1e-10);
        EXPECT_LT(rel(a.s_r_minus, b.s_r_minus), 1e-10);
    }
    EXPECT_THROW(amplitudes_bvp_oracle({1, 0, 0, 0}, 0.5, 0.5), std::invalid_argument);
}

TEST(Scattering, DenominatorEvenInGammaEta) {
    const CouplingParameters p{1.1, 0.3, -0.6, 0.8};
    for (double u : {-2.0, 0.3, 4.0}) {
        EXPECT_EQ(amplitude_denominator(p, u), amplitude_denominator(p.reflected(), u));
        EXPECT_NEAR(std::abs(amplitude_denominator(p, u)), std::abs(amplitude_denominator(p, -u)), 1e-14);
    }
}

TEST(Scattering, PoleRaises) {
    EXPECT_THROW(amplitudes({0.0, 0.0, 0.0, 0.0}, 0.0), PoleAtU);
    EXPECT_THROW(amplitudes({0.0, 1.0, 0.5, 0.0}, 0.0), PoleAtU);
    EXPECT_NO_THROW(amplitudes({1.0, 0.0, 0.0, 0.0}, 0.0));
}
