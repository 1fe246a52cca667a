// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/wavefunction.hpp"

#include "pointbethe/errors.hpp"
#include "pointbethe/panel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pointbethe {

namespace {

int inversions(const Permutation& q) {
    int count = 0;
    for (int a = 1; a <= q.size(); ++a)
        for (int b = a + 1; b <= q.size(); ++b)
            if (q(a) > q(b)) ++count;
    return count;
}

// Ordering of x with ties broken by index.
Permutation sorting_permutation(const std::vector<double>& x) {
    std::vector<int> idx(x.size());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&x](int a, int b) {
        return x[static_cast<std::size_t>(a - 1)] < x[static_cast<std::size_t>(b - 1)];
    });
    return Permutation(std::move(idx));
}

bool has_coincidence(const PositionVector& x, const Permutation& q, double tol) {
    for (int i = 1; i < x.size(); ++i)
        if (x(q(i + 1)) - x(q(i)) <= tol) return true;
    return false;
}

// Ordering with x_j placed just above (sign > 0) or just below x_k.
Permutation side_ordering(const PositionVector& x, int j, int k, double sign) {
    std::vector<double> y = x.values();
    const double shift = 1e-6 * std::max(1.0, std::abs(x(j)));
    y[static_cast<std::size_t>(j - 1)] = x(k) + sign * shift;
    const Permutation q = sorting_permutation(y);
    const Permutation qinv = q.inverse();
    if (std::abs(qinv(j) - qinv(k)) != 1) {
        throw std::invalid_argument("boundary sample has a third coordinate on the face x_j = x_k");
    }
    return q;
}

std::vector<double> random_point(SeededUniform& draw, int n, double half_width) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = draw(-half_width, half_width);
    return x;
}

bool separated(const std::vector<double>& x, double gap, int skip_j, int skip_k) {
    for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            if (static_cast<int>(a) + 1 == skip_j && static_cast<int>(b) + 1 == skip_k) continue;
            if (std::abs(x[a] - x[b]) < gap) return false;
        }
    }
    return true;
}

} // namespace

PositionVector::PositionVector(std::vector<double> x) : x_(std::move(x)) {
    if (x_.empty()) throw std::invalid_argument("position vector is empty");
    for (double v : x_)
        if (!std::isfinite(v)) throw std::invalid_argument("coordinates must be finite");
}

Wedge locate_wedge(const PositionVector& x, double tol) {
    Permutation q = sorting_permutation(x.values());
    if (has_coincidence(x, q, tol)) throw OnBoundary("coordinates coincide; x lies on a wedge boundary");
    return Wedge{std::move(q)};
}

WedgeJet wedge_jet(const BetheState& state, const Permutation& q, const PositionVector& x) {
    const int n = state.n_particles();
    if (x.size() != n || q.size() != n) throw SizeMismatch("position, wedge and state differ in N");
    const PermutationTable& perms = state.permutations();
    const std::size_t qpos = perms.position(q);
    const Permutation qinv = q.inverse();
    const MomentumVector& k = state.momenta();

    WedgeJet jet{Complex{0.0, 0.0}, std::vector<Complex>(static_cast<std::size_t>(n))};
    for (std::size_t p = 0; p < perms.order(); ++p) {
        const Permutation& pp = perms.at(p);
        double phase = 0.0;
        for (int j = 1; j <= n; ++j) phase += k(pp(j)) * x(q(j));
        const Complex term = state.coefficient(p, qpos) * std::exp(kI * phase);
        jet.value += term;
        for (int m = 1; m <= n; ++m) jet.gradient[static_cast<std::size_t>(m - 1)] += kI * k(pp(qinv(m))) * term;
    }
    return jet;
}

WedgeFunction as_wedge_function(const BetheState& state) {
    return [state](const Permutation& q, const PositionVector& x) { return wedge_jet(state, q, x); };
}

Complex evaluate(const BetheState& state, const PositionVector& x, double tol) {
    const Permutation sorted = sorting_permutation(x.values());
    if (!has_coincidence(x, sorted, tol)) return wedge_jet(state, sorted, x).value;
    // Average over every wedge whose closure contains x.
    const PermutationTable& perms = state.permutations();
    Complex sum{0.0, 0.0};
    int count = 0;
    for (std::size_t q = 0; q < perms.order(); ++q) {
        const Permutation& qq = perms.at(q);
        bool in_closure = true;
        for (int i = 1; i < x.size() && in_closure; ++i) in_closure = x(qq(i)) <= x(qq(i + 1)) + tol;
        if (!in_closure) continue;
        sum += wedge_jet(state, qq, x).value;
        ++count;
    }
    return sum / static_cast<double>(count);
}

BoundaryResidual boundary_residual(const WedgeFunction& f, const CouplingParameters& params, int j, int k,
                                   std::span<const PositionVector> samples) {
    if (!(j < k)) throw std::invalid_argument("boundary_residual requires j < k");
    const Complex g_minus_ie{params.gamma, -params.eta};
    const Complex g_plus_ie{params.gamma, params.eta};
    BoundaryResidual out;
    for (const PositionVector& x : samples) {
        if (j < 1 || k > x.size()) throw std::out_of_range("particle index out of range");
        if (std::abs(x(j) - x(k)) > kCoincidenceTolerance) throw std::invalid_argument("sample is not on x_j = x_k");
        const WedgeJet plus = f(side_ordering(x, j, k, 1.0), x);
        const WedgeJet minus = f(side_ordering(x, j, k, -1.0), x);
        const auto jk = [j, k](const WedgeJet& w) {
            return w.gradient[static_cast<std::size_t>(j - 1)] - w.gradient[static_cast<std::size_t>(k - 1)];
        };
        const Complex avg = 0.5 * (plus.value + minus.value);
        const Complex davg = 0.5 * (jk(plus) + jk(minus));
        const Complex r1 = jk(plus) - jk(minus) - 2.0 * params.c * avg + 2.0 * g_minus_ie * davg;
        const Complex r2 = plus.value - minus.value - 2.0 * params.lambda * davg - 2.0 * g_plus_ie * avg;
        out.r1 = std::max(out.r1, std::abs(r1));
        out.r2 = std::max(out.r2, std::abs(r2));
    }
    return out;
}

BoundaryResidual boundary_residual(const BetheState& state, int j, int k, std::span<const PositionVector> samples) {
    return boundary_residual(as_wedge_function(state), state.params(), j, k, samples);
}

std::vector<PositionVector> boundary_samples(int n, int j, int k, std::size_t count, std::uint64_t seed,
                                             double half_width, double gap) {
    if (!(1 <= j && j < k && k <= n)) throw std::invalid_argument("boundary_samples requires 1 <= j < k <= N");
    SeededUniform draw(seed);
    std::vector<PositionVector> out;
    for (std::size_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt > 1000 * count + 1000) throw std::runtime_error("boundary_samples: gap too large");
        std::vector<double> x = random_point(draw, n, half_width);
        x[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(k - 1)];
        if (separated(x, gap, j, k)) out.emplace_back(std::move(x));
    }
    return out;
}

std::vector<PositionVector> interior_samples(int n, std::size_t count, std::uint64_t seed, double half_width,
                                             double gap) {
    SeededUniform draw(seed);
    std::vector<PositionVector> out;
    for (std::size_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt > 1000 * count + 1000) throw std::runtime_error("interior_samples: gap too large");
        std::vector<double> x = random_point(draw, n, half_width);
        if (separated(x, gap, 0, 0)) out.emplace_back(std::move(x));
    }
    return out;
}

std::vector<Complex> determinant_coefficients(const MomentumVector& k, double c) {
    const auto perms = permutation_table(k.size());
    std::vector<Complex> out(perms->order());
    for (std::size_t p = 0; p < perms->order(); ++p) {
        const Permutation& pp = perms->at(p);
        Complex prod{static_cast<double>(pp.sign()), 0.0};
        for (int a = 1; a <= k.size(); ++a)
            for (int b = 1; b < a; ++b) prod *= kI * (k(pp(a)) - k(pp(b))) + c;
        out[p] = prod;
    }
    return out;
}

WedgeJet determinant_jet(const MomentumVector& k, double c, const PositionVector& x) {
    const int n = k.size();
    if (x.size() != n) throw SizeMismatch("momenta and positions differ in N");
    const auto perms = permutation_table(n);
    const std::vector<Complex> coef = determinant_coefficients(k, c);
    WedgeJet jet{Complex{0.0, 0.0}, std::vector<Complex>(static_cast<std::size_t>(n))};
    for (std::size_t p = 0; p < perms->order(); ++p) {
        const Permutation& pp = perms->at(p);
        double phase = 0.0;
        for (int j = 1; j <= n; ++j) phase += k(pp(j)) * x(j);
        const Complex term = coef[p] * std::exp(kI * phase);
        jet.value += term;
        for (int m = 1; m <= n; ++m) jet.gradient[static_cast<std::size_t>(m - 1)] += kI * k(pp(m)) * term;
    }
    return jet;
}

Complex determinant_eigenfunction(const MomentumVector& k, double c, const PositionVector& x, double tol) {
    for (int j = 1; j < x.size(); ++j) {
        if (x(j) > x(j + 1) + tol) throw WrongWedge("determinant eigenfunction needs x_1 <= ... <= x_N");
    }
    return determinant_jet(k, c, x).value;
}

Complex extend_by_statistics(const std::function<Complex(const PositionVector&)>& value_in_identity_wedge,
                             Statistics statistics, const PositionVector& x, double tol) {
    const Permutation q = sorting_permutation(x.values());
    std::vector<double> y(x.values().size());
    for (int i = 1; i <= x.size(); ++i) y[static_cast<std::size_t>(i - 1)] = x(q(i));
    if (has_coincidence(x, q, tol)) {
        if (statistics == Statistics::Fermion) return Complex{0.0, 0.0};
        return value_in_identity_wedge(PositionVector(std::move(y)));
    }
    const double sigma = statistics == Statistics::Fermion ? q.sign() : 1.0;
    return sigma * value_in_identity_wedge(PositionVector(std::move(y)));
}

WedgeFunction extend_jet_by_statistics(std::function<WedgeJet(const PositionVector&)> jet_in_identity_wedge,
                                       Statistics statistics) {
    return [jet = std::move(jet_in_identity_wedge), statistics](const Permutation& q, const PositionVector& x) {
        const int n = x.size();
        std::vector<double> y(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) y[static_cast<std::size_t>(i - 1)] = x(q(i));
        const WedgeJet inner = jet(PositionVector(std::move(y)));
        const double sigma = statistics == Statistics::Fermion ? q.sign() : 1.0;
        const Permutation qinv = q.inverse();
        WedgeJet out{sigma * inner.value, std::vector<Complex>(static_cast<std::size_t>(n))};
        for (int m = 1; m <= n; ++m) {
            out.gradient[static_cast<std::size_t>(m - 1)] = sigma * inner.gradient[static_cast<std::size_t>(qinv(m) - 1)];
        }
        return out;
    };
}

double inversion_weight(const PositionVector& x, double tol) {
    double w = 0.0;
    for (int j = 1; j <= x.size(); ++j) {
        for (int k = j + 1; k <= x.size(); ++k) {
            if (std::abs(x(j) - x(k)) <= tol) w += 0.5;
            else if (x(j) > x(k)) w += 1.0;
        }
    }
    return w;
}

Complex gauge_map(const BetheState& state, const PositionVector& x, double alpha) {
    return std::exp(-kI * alpha * inversion_weight(x)) * evaluate(state, x);
}

Complex gauge_map(const BetheState& state, const PositionVector& x) {
    return gauge_map(state, x, gauge_data(state.params()).alpha);
}

WedgeFunction gauged_wedge_function(const BetheState& state, double alpha) {
    return [state, alpha](const Permutation& q, const PositionVector& x) {
        WedgeJet jet = wedge_jet(state, q, x);
        const Complex phase = std::exp(-kI * alpha * static_cast<double>(inversions(q)));
        jet.value *= phase;
        for (Complex& g : jet.gradient) g *= phase;
        return jet;
    };
}

BetheState gauge_transform(const BetheState& state) {
    const GaugeData gd = gauge_data(state.params());
    const PermutationTable& perms = state.permutations();
    std::vector<ComplexVector> table = state.table();
    for (std::size_t q = 0; q < perms.order(); ++q) {
        const Complex phase = std::exp(-kI * gd.alpha * static_cast<double>(inversions(perms.at(q))));
        for (ComplexVector& a : table) a(static_cast<Eigen::Index>(q)) *= phase;
    }
    return BetheState::from_table(CouplingParameters{gd.c_tilde, 0.0, 0.0, 0.0}, state.momenta(), std::move(table));
}

Complex schrodinger_residual_fd(const std::function<Complex(const PositionVector&)>& psi, double energy,
                                const PositionVector& x, double h) {
    const Complex centre = psi(x);
    Complex laplacian{0.0, 0.0};
    for (std::size_t m = 0; m < x.values().size(); ++m) {
        std::vector<double> up = x.values();
        std::vector<double> down = x.values();
        up[m] += h;
        down[m] -= h;
        laplacian += (psi(PositionVector(std::move(up))) - 2.0 * centre + psi(PositionVector(std::move(down)))) / (h * h);
    }
    return laplacian + energy * centre;
}

Complex schrodinger_residual_fd(const BetheState& state, const PositionVector& x, double h) {
    return schrodinger_residual_fd([&state](const PositionVector& y) { return evaluate(state, y); }, state.energy(),
                                   x, h);
}

void write_grid_csv(std::ostream& os, const std::function<Complex(const PositionVector&)>& psi,
                    std::span<const PositionVector> points) {
    std::ostringstream buf;
    buf << std::setprecision(17);
    if (!points.empty()) {
        for (int j = 1; j <= points.front().size(); ++j) buf << 'x' << j << ',';
        buf << "re_psi,im_psi\n";
    }
    for (const PositionVector& x : points) {
        for (double v : x.values()) buf << v << ',';
        const Complex value = psi(x);
        buf << value.real() << ',' << value.imag() << '\n';
    }
    os << buf.str();
}

} // namespace pointbethe
