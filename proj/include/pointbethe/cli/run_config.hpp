// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pointbethe/couplings.hpp"
#include "pointbethe/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pointbethe::cli {

enum class Command { Scatter, YbCheck, Scan, Coeffs, Eigen, Gauge };

/// Throws ConfigError for an unknown command name.
Command parse_command(std::string_view name);
std::string to_string(Command command);

/// Malformed configuration; `line` is 0 for values given as flags.
class ConfigError : public Error {
public:
    ConfigError(int line, std::string field, const std::string& what);

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

inline constexpr int kMaxCliParticles = 6;

struct RunConfig {
    Command command = Command::Scatter;
    CouplingParameters params;
    int n_particles = 3;
    std::optional<std::vector<double>> momenta;
    std::uint64_t seed = 0;
    double tolerance = 1e-8;
    std::string output_path; ///< empty: standard output

    std::size_t samples = 100; ///< (u, v) pairs or sample points per check

    // scatter u-grid
    double u_min = -5.0;
    double u_max = 5.0;
    int u_points = 20;

    // scan grid
    std::vector<double> grid_c{1.0};
    std::vector<double> grid_lambda{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> grid_gamma{0.0};
    std::vector<double> grid_eta{0.0};

    /// Momenta for N particles: the configured list, or k_j = j - (N + 1)/2 scaled by 0.7.
    std::vector<double> resolved_momenta() const;
    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// Sets one field from its textual value. Throws ConfigError (with `line`).
void apply_setting(RunConfig& config, std::string_view key, std::string_view value, int line = 0);

/// Reads `key = value` lines, `#` starts a comment. Later keys override earlier ones.
void apply_config_stream(RunConfig& config, std::istream& in);
void apply_config_file(RunConfig& config, const std::string& path);

/// Comma-separated reals. Throws ConfigError.
std::vector<double> parse_real_list(std::string_view text, std::string_view field, int line = 0);

} // namespace pointbethe::cli
