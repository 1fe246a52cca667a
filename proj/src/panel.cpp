// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/panel.hpp"

#include "pointbethe/scattering.hpp"

#include <stdexcept>

namespace pointbethe {

std::vector<UvSample> uv_panel(const CouplingParameters& params, std::uint64_t seed, std::size_t count,
                               double half_width, double pole_margin) {
    SeededUniform draw(seed);
    std::vector<UvSample> out;
    out.reserve(count);
    const std::size_t max_attempts = 1000 * count + 1000;
    for (std::size_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt >= max_attempts) throw std::runtime_error("uv_panel: could not avoid amplitude poles");
        const double u = draw(-half_width, half_width);
        const double v = draw(-half_width, half_width);
        if (pole_distance(params, u) < pole_margin || pole_distance(params, v) < pole_margin ||
            pole_distance(params, u + v) < pole_margin) {
            continue;
        }
        out.push_back({u, v});
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace pointbethe
