// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/cli/run.hpp"

#include "pointbethe/bethe_engine.hpp"
#include "pointbethe/errors.hpp"
#include "pointbethe/factorization.hpp"
#include "pointbethe/panel.hpp"
#include "pointbethe/scattering.hpp"
#include "pointbethe/wavefunction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <string>

namespace pointbethe::cli {

namespace {

constexpr std::size_t kBoundarySamples = 50;
constexpr std::size_t kGridPoints = 20;
constexpr std::size_t kBlockSamples = 10;
constexpr double kFdStep = 1e-4;

std::string one_line(const Permutation& p) {
    std::string s;
    for (int v : p.images()) s += std::to_string(v);
    return s;
}

void write_list(std::ostream& os, const std::vector<double>& values) {
    for (std::size_t a = 0; a < values.size(); ++a) os << (a ? "," : "") << values[a];
}

void write_header(std::ostream& os, const RunConfig& config) {
    os << "# pointbethe " << to_string(config.command) << '\n';
    os << "# c = " << config.params.c << "\n# lambda = " << config.params.lambda << "\n# gamma = "
       << config.params.gamma << "\n# eta = " << config.params.eta << '\n';
    os << "# N = " << config.n_particles << "\n# k = ";
    write_list(os, config.resolved_momenta());
    os << "\n# seed = " << config.seed << "\n# tol = " << config.tolerance << "\n# samples = " << config.samples
       << '\n';
    if (config.command == Command::Scatter) {
        os << "# u_min = " << config.u_min << "\n# u_max = " << config.u_max << "\n# u_points = " << config.u_points
           << '\n';
    }
    if (config.command == Command::Scan) {
        os << "# grid_c = ";
        write_list(os, config.grid_c);
        os << "\n# grid_lambda = ";
        write_list(os, config.grid_lambda);
        os << "\n# grid_gamma = ";
        write_list(os, config.grid_gamma);
        os << "\n# grid_eta = ";
        write_list(os, config.grid_eta);
        os << '\n';
    }
}

int verdict(std::ostream& os, bool pass) {
    os << "# status = " << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitOk : kExitResidual;
}

double relative_error(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

int run_scatter(const RunConfig& config, std::ostream& os) {
    const CouplingParameters& p = config.params;
    try {
        os << "# symplectic_residual = " << check_symplectic(boundary_matrix(p)) << '\n';
    } catch (const DegenerateBoundary&) {
        os << "# symplectic_residual = n/a (det U+ = 0)\n";
    }
    os << "u,re_st_plus,im_st_plus,re_sr_plus,im_sr_plus,re_st_minus,im_st_minus,re_sr_minus,im_sr_minus,"
          "oracle_error,unitarity\n";
    double worst_oracle = 0.0;
    double worst_unitarity = 0.0;
    for (int n = 0; n < config.u_points; ++n) {
        const double u = config.u_points == 1
                             ? config.u_min
                             : config.u_min + (config.u_max - config.u_min) * n / (config.u_points - 1);
        const AmplitudeSet a = amplitudes(p, u);
        const auto f = factorization_terms(p, u, 1.0);
        double unitarity = 0.0;
        for (std::size_t e = 0; e < kUniversalCount; ++e) unitarity = std::max(unitarity, std::abs(f[e]));
        worst_unitarity = std::max(worst_unitarity, unitarity);

        os << u;
        for (Complex z : {a.s_t_plus, a.s_r_plus, a.s_t_minus, a.s_r_minus}) os << ',' << z.real() << ',' << z.imag();
        if (std::abs(u) > 1e-9) {
            const AmplitudeSet b = amplitudes_bvp_oracle(p, 0.37 + 0.5 * u, 0.37 - 0.5 * u);
            const double err = std::max({relative_error(a.s_t_plus, b.s_t_plus), relative_error(a.s_r_plus, b.s_r_plus),
                                         relative_error(a.s_t_minus, b.s_t_minus),
                                         relative_error(a.s_r_minus, b.s_r_minus)});
            worst_oracle = std::max(worst_oracle, err);
            os << ',' << err;
        } else {
            os << ",nan";
        }
        os << ',' << unitarity << '\n';
    }
    os << "# max_oracle_error = " << worst_oracle << "\n# max_unitarity_residual = " << worst_unitarity << '\n';
    return verdict(os, worst_oracle <= config.tolerance && worst_unitarity <= config.tolerance);
}

int run_yb_check(const RunConfig& config, std::ostream& os) {
    const CouplingParameters& p = config.params;
    const int n = config.n_particles;
    const auto panel = uv_panel(p, config.seed, config.samples);
    os << "# class = " << classify(p).tag << '\n';

    const FactorizationReport fr = check_factorization(p, panel);
    os << "identity,max_residual\n";
    for (std::size_t e = 0; e < kFactorizationCount; ++e) os << e + 1 << ',' << fr.residuals[e] << '\n';

    const YangBaxterReport yb = yang_baxter_matrix_check(p, n, panel);
    double worst = yb.max_residual();
    os << "relation,max_residual\n";
    os << "unitarity," << yb.unitarity << "\nbraid," << yb.braid << '\n';
    if (n >= 4) os << "commutation," << yb.commutation << '\n';
    if (n >= 4) {
        double block = 0.0;
        const std::size_t count = std::min(kBlockSamples, panel.size());
        for (int i = 1; i <= n - 2; ++i)
            for (std::size_t s = 0; s < count; ++s)
                block = std::max(block, block_reduction_check(p, n, i, panel[s].u, panel[s].v));
        os << "block_reduction," << block << '\n';
        worst = std::max(worst, block);
    }
    os << "# max_residual = " << worst << '\n';
    return verdict(os, worst <= config.tolerance);
}

int run_scan(const RunConfig& config, std::ostream& os) {
    GridSpec grid{config.grid_c, config.grid_lambda, config.grid_gamma, config.grid_eta, config.seed, config.samples};
    const auto rows = scan_couplings(grid, config.tolerance);
    write_scan_csv(os, rows);
    std::size_t passes = 0;
    std::size_t inconsistent = 0;
    for (const ScanRow& r : rows) {
        passes += r.passes ? 1 : 0;
        inconsistent += r.consistent() ? 0 : 1;
    }
    os << "# points = " << rows.size() << "\n# residual_pass = " << passes << "\n# misclassified = " << inconsistent
       << '\n';
    return verdict(os, inconsistent == 0);
}

void write_table(std::ostream& os, const BetheState& state) {
    const PermutationTable& perms = state.permutations();
    os << "P,Q,re_a,im_a\n";
    for (std::size_t p = 0; p < perms.order(); ++p)
        for (std::size_t q = 0; q < perms.order(); ++q) {
            const Complex a = state.coefficient(p, q);
            os << one_line(perms.at(p)) << ',' << one_line(perms.at(q)) << ',' << a.real() << ',' << a.imag() << '\n';
        }
}

int run_coeffs(const RunConfig& config, std::ostream& os) {
    const MomentumVector k(config.resolved_momenta());
    const int n = k.size();
    const auto a_identity = CoefficientVector::unit(n);
    bool pass = true;
    std::optional<BcOracleResult> oracle;
    if (n <= 4) {
        oracle = coefficients_bc_oracle(config.params, k, a_identity);
        os << "# oracle_equations = " << oracle->n_equations << "\n# oracle_residual = " << oracle->residual
           << "\n# oracle_nullity = " << oracle->nullity << " (expected " << oracle->expected_nullity << ")\n";
        pass = pass && oracle->residual <= config.tolerance;
    }
    if (!classify(config.params).integrable()) {
        os << "# class = NotIntegrable: no consistent coefficient table\n";
        return verdict(os, false);
    }
    const BetheState state = BetheState::build(config.params, k, a_identity);
    const double relation = coefficient_relation_residual(state);
    os << "# relation_residual = " << relation << '\n';
    pass = pass && relation <= config.tolerance;
    if (oracle) {
        double diff = 0.0;
        for (std::size_t p = 0; p < state.table().size(); ++p)
            diff = std::max(diff, (state.table()[p] - oracle->table[p]).cwiseAbs().maxCoeff());
        os << "# oracle_table_difference = " << diff << '\n';
        pass = pass && diff <= config.tolerance;
    }
    write_table(os, state);
    return verdict(os, pass);
}

int run_eigen(const RunConfig& config, std::ostream& os) {
    const MomentumVector k(config.resolved_momenta());
    const int n = k.size();
    const BetheState state = BetheState::build(config.params, k, CoefficientVector::unit(n));
    os << "# energy = " << state.energy() << '\n';

    double worst = 0.0;
    os << "j,k,r1,r2\n";
    std::uint64_t pair = 0;
    for (int j = 1; j <= n; ++j)
        for (int m = j + 1; m <= n; ++m) {
            const auto samples = boundary_samples(n, j, m, kBoundarySamples, derive_seed(config.seed, pair++));
            const BoundaryResidual r = boundary_residual(state, j, m, samples);
            os << j << ',' << m << ',' << r.r1 << ',' << r.r2 << '\n';
            worst = std::max(worst, r.max());
        }

    const auto points = interior_samples(n, kGridPoints, derive_seed(config.seed, 1000));
    double fd = 0.0;
    for (const PositionVector& x : points)
        fd = std::max(fd, std::abs(schrodinger_residual_fd(state, x, kFdStep)) / std::max(1.0, std::abs(evaluate(state, x))));
    os << "# max_boundary_residual = " << worst << "\n# schrodinger_fd_residual = " << fd << " (h = " << kFdStep
       << ", informational)\n";
    write_grid_csv(os, [&state](const PositionVector& x) { return evaluate(state, x); }, points);
    return verdict(os, worst <= config.tolerance);
}

int run_gauge(const RunConfig& config, std::ostream& os) {
    const GaugeData gd = gauge_data(config.params);
    const MomentumVector k(config.resolved_momenta());
    const int n = k.size();
    const BetheState state = BetheState::build(config.params, k, CoefficientVector::unit(n));
    const CouplingParameters delta_gas{gd.c_tilde, 0.0, 0.0, 0.0};
    os << "# alpha = " << gd.alpha << "\n# c_tilde = " << gd.c_tilde << '\n';

    const WedgeFunction gauged = gauged_wedge_function(state, gd.alpha);
    double worst = 0.0;
    os << "j,k,r1_gauged,r2_gauged,r1_ungauged,r2_ungauged\n";
    std::uint64_t pair = 0;
    for (int j = 1; j <= n; ++j)
        for (int m = j + 1; m <= n; ++m) {
            const auto samples = boundary_samples(n, j, m, kBoundarySamples, derive_seed(config.seed, pair++));
            const BoundaryResidual g = boundary_residual(gauged, delta_gas, j, m, samples);
            const BoundaryResidual raw = boundary_residual(as_wedge_function(state), delta_gas, j, m, samples);
            os << j << ',' << m << ',' << g.r1 << ',' << g.r2 << ',' << raw.r1 << ',' << raw.r2 << '\n';
            worst = std::max(worst, g.max());
        }

    const BetheState mapped = gauge_transform(state);
    const BetheState reference =
        BetheState::build(delta_gas, k, CoefficientVector::checked(n, mapped.table().front()));
    double diff = 0.0;
    for (std::size_t p = 0; p < mapped.table().size(); ++p)
        diff = std::max(diff, (mapped.table()[p] - reference.table()[p]).cwiseAbs().maxCoeff());
    os << "# max_gauged_boundary_residual = " << worst << "\n# delta_gas_table_difference = " << diff << '\n';
    return verdict(os, worst <= config.tolerance && diff <= config.tolerance);
}

} // namespace

int run(const RunConfig& config, std::ostream& report) {
    config.validate();
    std::ostringstream os;
    os << std::setprecision(17);
    write_header(os, config);
    int code = kExitOk;
    try {
        switch (config.command) {
        case Command::Scatter:
            code = run_scatter(config, os);
            break;
        case Command::YbCheck:
            code = run_yb_check(config, os);
            break;
        case Command::Scan:
            code = run_scan(config, os);
            break;
        case Command::Coeffs:
            code = run_coeffs(config, os);
            break;
        case Command::Eigen:
            code = run_eigen(config, os);
            break;
        case Command::Gauge:
            code = run_gauge(config, os);
            break;
        }
    } catch (...) {
        report << os.str();
        throw;
    }
    report << os.str();
    return code;
}

int run_guarded(const RunConfig& config, std::ostream& report, std::ostream& err) {
    try {
        return run(config, report);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NotGaugeFamily& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NotIntegrable& e) {
        err << "residual failure: " << e.what() << '\n';
        return kExitResidual;
    } catch (const PoleAtU& e) {
        err << "pole: " << e.what() << '\n';
        return kExitPole;
    } catch (const DegenerateBoundary& e) {
        err << "degenerate input: " << e.what() << '\n';
        return kExitPole;
    } catch (const SingularSystem& e) {
        err << "degenerate input: " << e.what() << '\n';
        return kExitPole;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bethe Ansatz checks for 1D gases with four-parameter point interactions"};
    app.set_config(); // the --config flag is handled below, not by CLI11
    std::string command;
    std::string config_path;
    app.add_option("command", command, "scatter | yb-check | scan | coeffs | eigen | gauge");
    app.add_option("--config", config_path, "key = value file; flags override its values");

    // Flags are kept as text and parsed by the same code as the config file.
    const std::array<std::pair<const char*, const char*>, 17> keys{{
        {"c", "delta strength"},
        {"lambda", "delta-prime-type strength"},
        {"gamma", "first-derivative coupling"},
        {"eta", "first-derivative coupling (imaginary part)"},
        {"N", "particle number, at most 6"},
        {"k", "momenta, comma separated"},
        {"seed", "panel seed"},
        {"tol", "residual tolerance"},
        {"out", "report path (default: standard output)"},
        {"samples", "(u, v) pairs per check"},
        {"u_min", "scatter: first u"},
        {"u_max", "scatter: last u"},
        {"u_points", "scatter: number of u values"},
        {"grid_c", "scan: c values"},
        {"grid_lambda", "scan: lambda values"},
        {"grid_gamma", "scan: gamma values"},
        {"grid_eta", "scan: eta values"},
    }};
    std::map<std::string, std::string> flag_values;
    std::map<std::string, CLI::Option*> flag_options;
    for (const auto& [key, help] : keys) {
        flag_options[key] = app.add_option(std::string("--") + key, flag_values[key], help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) apply_config_file(config, config_path);
        if (!command.empty()) config.command = parse_command(command);
        else if (config_path.empty()) throw ConfigError(0, "command", "missing command");
        for (const auto& [key, option] : flag_options) {
            if (option->count() > 0) apply_setting(config, key, flag_values[key]);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    if (config.output_path.empty()) return run_guarded(config, out, err);
    std::ostringstream report;
    const int code = run_guarded(config, report, err);
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        err << "config error: cannot write '" << config.output_path << "'\n";
        return kExitConfig;
    }
    file << report.str();
    out << "wrote " << config.output_path << " (exit " << code << ")\n";
    return code;
}

} // namespace pointbethe::cli
