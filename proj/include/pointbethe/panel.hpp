// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file panel.hpp
 * @brief Seeded sample panels shared by the identity checks.
 *
 * Uniform deviates are taken from std::mt19937_64 and mapped to [0, 1) by hand
 * (top 53 bits), so a seed reproduces the same panel on every platform.
 */

#pragma once

#include "pointbethe/couplings.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pointbethe {

class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi).
    double operator()(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

private:
    std::mt19937_64 engine_;
};

struct UvSample {
    double u = 0.0;
    double v = 0.0;
};

inline constexpr std::size_t kDefaultPanelSize = 100;
inline constexpr double kDefaultPanelHalfWidth = 5.0;
/// Minimum pole_distance at u, v and u + v for an accepted sample.
inline constexpr double kDefaultPoleMargin = 1e-2;

/// `count` pairs from [-half_width, half_width]^2 kept away from the amplitude
/// poles of `params`. Throws std::runtime_error if rejection sampling stalls.
std::vector<UvSample> uv_panel(const CouplingParameters& params, std::uint64_t seed,
                               std::size_t count = kDefaultPanelSize,
                               double half_width = kDefaultPanelHalfWidth,
                               double pole_margin = kDefaultPoleMargin);

/// Mixes a base seed with an index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

} // namespace pointbethe
