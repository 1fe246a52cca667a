// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/cli/run_config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pointbethe::cli {

namespace {

std::string describe(int line, const std::string& field, const std::string& what) {
    std::ostringstream msg;
    if (line > 0) msg << "line " << line << ": ";
    if (!field.empty()) msg << field << ": ";
    msg << what;
    return msg.str();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view text, std::string_view field, int line) {
    const std::string s(trim(text));
    if (s.empty()) throw ConfigError(line, std::string(field), "expected a number");
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError(line, std::string(field), "not a number: '" + s + "'");
    }
    if (used != s.size()) throw ConfigError(line, std::string(field), "not a number: '" + s + "'");
    if (!std::isfinite(v)) throw ConfigError(line, std::string(field), "must be finite");
    return v;
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view field, int line) {
    const std::string_view s = trim(text);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError(line, std::string(field), "not an integer: '" + std::string(s) + "'");
    }
    return v;
}

} // namespace

ConfigError::ConfigError(int line, std::string field, const std::string& what)
    : Error(describe(line, field, what)), line_(line), field_(std::move(field)) {}

Command parse_command(std::string_view name) {
    if (name == "scatter") return Command::Scatter;
    if (name == "yb-check") return Command::YbCheck;
    if (name == "scan") return Command::Scan;
    if (name == "coeffs") return Command::Coeffs;
    if (name == "eigen") return Command::Eigen;
    if (name == "gauge") return Command::Gauge;
    throw ConfigError(0, "command", "unknown command '" + std::string(name) + "'");
}

std::string to_string(Command command) {
    switch (command) {
    case Command::Scatter:
        return "scatter";
    case Command::YbCheck:
        return "yb-check";
    case Command::Scan:
        return "scan";
    case Command::Coeffs:
        return "coeffs";
    case Command::Eigen:
        return "eigen";
    case Command::Gauge:
        return "gauge";
    }
    return "?";
}

std::vector<double> parse_real_list(std::string_view text, std::string_view field, int line) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_real(text.substr(start, end - start), field, line));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> RunConfig::resolved_momenta() const {
    if (momenta) return *momenta;
    std::vector<double> k(static_cast<std::size_t>(n_particles));
    for (int j = 1; j <= n_particles; ++j) k[static_cast<std::size_t>(j - 1)] = 0.7 * (j - 0.5 * (n_particles + 1));
    return k;
}

void RunConfig::validate() const {
    const int min_n = command == Command::YbCheck ? 3 : 1;
    if (n_particles < min_n || n_particles > kMaxCliParticles) {
        throw ConfigError(0, "N", "must lie in [" + std::to_string(min_n) + ", " + std::to_string(kMaxCliParticles) + "]");
    }
    if (momenta && static_cast<int>(momenta->size()) != n_particles) {
        throw ConfigError(0, "k", "needs exactly N entries");
    }
    if (!(tolerance > 0.0)) throw ConfigError(0, "tol", "must be positive");
    if (samples == 0) throw ConfigError(0, "samples", "must be positive");
    if (u_points < 1) throw ConfigError(0, "u_points", "must be positive");
    if (u_points > 1 && !(u_min < u_max)) throw ConfigError(0, "u_min", "must be below u_max");
    if (grid_c.empty() || grid_lambda.empty() || grid_gamma.empty() || grid_eta.empty()) {
        throw ConfigError(0, "grid", "every grid axis needs at least one value");
    }
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value, int line) {
    const std::string k(trim(key));
    if (k == "command") {
        try {
            config.command = parse_command(trim(value));
        } catch (const ConfigError&) {
            throw ConfigError(line, "command", "unknown command '" + std::string(trim(value)) + "'");
        }
    } else if (k == "c") {
        config.params.c = parse_real(value, k, line);
    } else if (k == "lambda") {
        config.params.lambda = parse_real(value, k, line);
    } else if (k == "gamma") {
        config.params.gamma = parse_real(value, k, line);
    } else if (k == "eta") {
        config.params.eta = parse_real(value, k, line);
    } else if (k == "N") {
        config.n_particles = parse_integer<int>(value, k, line);
    } else if (k == "k") {
        config.momenta = parse_real_list(value, k, line);
    } else if (k == "seed") {
        config.seed = parse_integer<std::uint64_t>(value, k, line);
    } else if (k == "tol") {
        config.tolerance = parse_real(value, k, line);
    } else if (k == "out") {
        config.output_path = std::string(trim(value));
    } else if (k == "samples") {
        config.samples = parse_integer<std::size_t>(value, k, line);
    } else if (k == "u_min") {
        config.u_min = parse_real(value, k, line);
    } else if (k == "u_max") {
        config.u_max = parse_real(value, k, line);
    } else if (k == "u_points") {
        config.u_points = parse_integer<int>(value, k, line);
    } else if (k == "grid_c") {
        config.grid_c = parse_real_list(value, k, line);
    } else if (k == "grid_lambda") {
        config.grid_lambda = parse_real_list(value, k, line);
    } else if (k == "grid_gamma") {
        config.grid_gamma = parse_real_list(value, k, line);
    } else if (k == "grid_eta") {
        config.grid_eta = parse_real_list(value, k, line);
    } else {
        throw ConfigError(line, k, "unknown key");
    }
}

void apply_config_stream(RunConfig& config, std::istream& in) {
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text(raw);
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ConfigError(line, "", "expected 'key = value'");
        const std::string_view key = trim(text.substr(0, eq));
        if (key.empty()) throw ConfigError(line, "", "missing key before '='");
        apply_setting(config, key, text.substr(eq + 1), line);
    }
}

void apply_config_file(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(0, "config", "cannot open '" + path + "'");
    apply_config_stream(config, in);
}

} // namespace pointbethe::cli
