// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/bethe_engine.hpp"

#include "pointbethe/errors.hpp"
#include "pointbethe/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <Eigen/SVD>

namespace pointbethe {

namespace {

constexpr double kMomentumCoincidence = 1e-12;
constexpr double kNullityThreshold = 1e-8;

void require_site(int n, int site) {
    if (n < 2 || n > kMaxParticles) {
        std::ostringstream msg;
        msg << "N = " << n << " outside [2, " << kMaxParticles << "]";
        throw std::out_of_range(msg.str());
    }
    if (site < 1 || site >= n) throw std::out_of_range("site i must satisfy 1 <= i < N");
}

void require_integrable(const CouplingParameters& params) {
    if (classify(params, kIntegrabilityTolerance).tag == IntegrabilityTag::NotIntegrable) {
        std::ostringstream msg;
        msg << "couplings (" << params.c << ", " << params.lambda << ", " << params.gamma << ", "
            << params.eta << ") are not integrable; propagation would depend on the word";
        throw NotIntegrable(msg.str());
    }
}

Eigen::Index ix(std::size_t v) { return static_cast<Eigen::Index>(v); }

} // namespace

std::shared_ptr<const PermutationTable> permutation_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const PermutationTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const PermutationTable>(n);
    return slot;
}

MomentumVector::MomentumVector(std::vector<double> k) : k_(std::move(k)) {
    if (k_.empty()) throw std::invalid_argument("momentum vector is empty");
    for (std::size_t a = 0; a < k_.size(); ++a) {
        if (!std::isfinite(k_[a])) throw std::invalid_argument("momenta must be finite");
        for (std::size_t b = 0; b < a; ++b) {
            if (std::abs(k_[a] - k_[b]) <= kMomentumCoincidence) {
                throw std::invalid_argument("momenta must be pairwise distinct");
            }
        }
    }
}

double MomentumVector::energy() const noexcept {
    double e = 0.0;
    for (double v : k_) e += v * v;
    return e;
}

YangMatrix::YangMatrix(std::shared_ptr<const PermutationTable> table, int site, double u,
                       std::vector<Complex> diag_r, std::vector<Complex> diag_t)
    : table_(std::move(table)), site_(site), u_(u), diag_r_(std::move(diag_r)), diag_t_(std::move(diag_t)) {
    if (diag_r_.size() != table_->order() || diag_t_.size() != table_->order()) {
        throw std::invalid_argument("diagonal length must be N!");
    }
}

ComplexVector YangMatrix::apply(const ComplexVector& a) const {
    if (static_cast<std::size_t>(a.size()) != order()) throw SizeMismatch("vector length must be N!");
    ComplexVector out(a.size());
    for (std::size_t q = 0; q < order(); ++q) {
        out(ix(q)) = diag_r_[q] * a(ix(q)) + diag_t_[q] * a(ix(partner(q)));
    }
    return out;
}

ComplexMatrix YangMatrix::apply(const ComplexMatrix& m) const {
    if (static_cast<std::size_t>(m.rows()) != order()) throw SizeMismatch("matrix rows must be N!");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t q = 0; q < order(); ++q) {
        out.row(ix(q)) = diag_r_[q] * m.row(ix(q)) + diag_t_[q] * m.row(ix(partner(q)));
    }
    return out;
}

ComplexMatrix YangMatrix::dense() const {
    ComplexMatrix m = ComplexMatrix::Zero(ix(order()), ix(order()));
    for (std::size_t q = 0; q < order(); ++q) {
        m(ix(q), ix(q)) += diag_r_[q];
        m(ix(q), ix(partner(q))) += diag_t_[q];
    }
    return m;
}

YangMatrix build_yang_matrix(const AmplitudeSet& amps, int n, int site) {
    require_site(n, site);
    auto table = permutation_table(n);
    std::vector<Complex> r(table->order());
    std::vector<Complex> t(table->order());
    for (std::size_t q = 0; q < table->order(); ++q) {
        const Permutation& perm = table->at(q);
        if (perm(site) < perm(site + 1)) {
            r[q] = amps.s_r_plus;
            t[q] = amps.s_t_minus;
        } else {
            r[q] = amps.s_r_minus;
            t[q] = amps.s_t_plus;
        }
    }
    return YangMatrix(std::move(table), site, amps.u, std::move(r), std::move(t));
}

YangMatrix build_yang_matrix(const CouplingParameters& params, int n, int site, double u) {
    return build_yang_matrix(amplitudes(params, u), n, site);
}

std::vector<Branch> periodic_branch_pattern(int n, int site) {
    require_site(n, site);
    const std::uint64_t period = factorial(site + 1);
    const std::uint64_t block = factorial(site);
    const std::uint64_t sub = factorial(site - 1);
    std::vector<Branch> out;
    out.reserve(factorial(n));
    for (std::uint64_t j = 1; j <= factorial(n); ++j) {
        const std::uint64_t jj = (j - 1) % period + 1; // position within the first period
        const std::uint64_t nn = (jj - 1) / block;     // jj = nn * i! + k, 1 <= k <= i!
        const std::uint64_t offset = jj - nn * block;
        out.push_back(offset >= 1 && offset <= nn * sub ? Branch::Minus : Branch::Plus);
    }
    return out;
}

SDiagonals build_s_diagonals_periodic(const CouplingParameters& params, int n, int site, double u) {
    const AmplitudeSet a = amplitudes(params, u);
    SDiagonals out;
    for (Branch b : periodic_branch_pattern(n, site)) {
        out.s_r.push_back(b == Branch::Minus ? a.s_r_minus : a.s_r_plus);
        out.s_t.push_back(b == Branch::Minus ? a.s_t_plus : a.s_t_minus);
    }
    return out;
}

CoefficientVector CoefficientVector::checked(int n, ComplexVector entries) {
    if (static_cast<std::uint64_t>(entries.size()) != factorial(n)) {
        throw std::invalid_argument("coefficient vector length must be N!");
    }
    return CoefficientVector{n, std::move(entries)};
}

CoefficientVector CoefficientVector::unit(int n, std::size_t position) {
    ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(factorial(n)));
    e(ix(position)) = 1.0;
    return CoefficientVector{n, std::move(e)};
}

namespace {

ComplexVector propagate_unchecked(const CouplingParameters& params, const MomentumVector& momenta,
                                  const ComplexVector& a_identity, std::span<const int> word) {
    const int n = momenta.size();
    ComplexVector a = a_identity;
    Permutation running = Permutation::identity(n);
    for (int site : word) {
        const double u = momenta(running(site)) - momenta(running(site + 1));
        a = build_yang_matrix(params, n, site, u).apply(a);
        running = running.times_transposition(site);
    }
    return a;
}

void require_shapes(const MomentumVector& momenta, const CoefficientVector& a_identity) {
    if (momenta.size() != a_identity.n_particles) throw SizeMismatch("momenta and coefficients differ in N");
    if (momenta.size() > kMaxParticles) throw std::out_of_range("N exceeds the supported maximum");
    if (static_cast<std::uint64_t>(a_identity.entries.size()) != factorial(momenta.size())) {
        throw SizeMismatch("coefficient vector length must be N!");
    }
}

} // namespace

CoefficientVector propagate_word(const CouplingParameters& params, const MomentumVector& momenta,
                                 const CoefficientVector& a_identity, std::span<const int> word) {
    require_shapes(momenta, a_identity);
    require_integrable(params);
    return CoefficientVector{momenta.size(), propagate_unchecked(params, momenta, a_identity.entries, word)};
}

CoefficientVector propagate(const CouplingParameters& params, const MomentumVector& momenta,
                            const CoefficientVector& a_identity, const Permutation& p) {
    if (p.size() != momenta.size()) throw SizeMismatch("permutation and momenta differ in N");
    const std::vector<int> word = decompose(p);
    return propagate_word(params, momenta, a_identity, word);
}

BetheState::BetheState(const CouplingParameters& params, const MomentumVector& momenta,
                       std::vector<ComplexVector> table)
    : params_(params), momenta_(momenta), perms_(permutation_table(momenta.size())), table_(std::move(table)) {
    if (table_.size() != perms_->order()) throw std::invalid_argument("table must hold N! vectors");
    for (const auto& v : table_) {
        if (static_cast<std::size_t>(v.size()) != perms_->order()) {
            throw std::invalid_argument("each coefficient vector must have N! entries");
        }
    }
}

BetheState BetheState::build(const CouplingParameters& params, const MomentumVector& momenta,
                             const CoefficientVector& a_identity) {
    require_shapes(momenta, a_identity);
    require_integrable(params);
    auto perms = permutation_table(momenta.size());
    std::vector<ComplexVector> table;
    table.reserve(perms->order());
    for (std::size_t p = 0; p < perms->order(); ++p) {
        const std::vector<int> word = decompose(perms->at(p));
        table.push_back(propagate_unchecked(params, momenta, a_identity.entries, word));
    }
    return BetheState(params, momenta, std::move(table));
}

BetheState BetheState::from_table(const CouplingParameters& params, const MomentumVector& momenta,
                                  std::vector<ComplexVector> table) {
    return BetheState(params, momenta, std::move(table));
}

double coefficient_relation_residual(const BetheState& state) {
    const PermutationTable& perms = state.permutations();
    const int n = state.n_particles();
    double worst = 0.0;
    for (std::size_t p = 0; p < perms.order(); ++p) {
        const Permutation& pp = perms.at(p);
        for (int i = 1; i < n; ++i) {
            const std::size_t pt = perms.right_transposition(p, i);
            const AmplitudeSet a = amplitudes(state.params(), state.momenta()(pp(i)) - state.momenta()(pp(i + 1)));
            for (std::size_t q = 0; q < perms.order(); ++q) {
                const Permutation& qq = perms.at(q);
                if (qq(i) > qq(i + 1)) continue;
                const std::size_t qt = perms.right_transposition(q, i);
                const Complex lhs1 = state.coefficient(pt, q);
                const Complex rhs1 = a.s_r_plus * state.coefficient(p, q) + a.s_t_minus * state.coefficient(p, qt);
                const Complex lhs2 = state.coefficient(pt, qt);
                const Complex rhs2 = a.s_r_minus * state.coefficient(p, qt) + a.s_t_plus * state.coefficient(p, q);
                worst = std::max({worst, std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)});
            }
        }
    }
    return worst;
}

BcOracleResult coefficients_bc_oracle(const CouplingParameters& params, const MomentumVector& momenta,
                                      const CoefficientVector& a_identity) {
    require_shapes(momenta, a_identity);
    const int n = momenta.size();
    if (n > 4) throw std::invalid_argument("boundary-system oracle is limited to N <= 4");
    const auto perms = permutation_table(n);
    const std::size_t order = perms->order();
    const std::size_t unknowns = order * order;
    const auto unknown = [order](std::size_t p, std::size_t q) { return ix(p * order + q); };

    const std::size_t rows_per_p = static_cast<std::size_t>(n - 1) * order; // two per (i, Q) with Q(i) < Q(i+1)
    ComplexMatrix system = ComplexMatrix::Zero(ix(rows_per_p * order), ix(unknowns));
    const Complex g_minus_ie{params.gamma, -params.eta};
    const Complex g_plus_ie{params.gamma, params.eta};

    Eigen::Index row = 0;
    for (std::size_t p = 0; p < order; ++p) {
        const Permutation& pp = perms->at(p);
        for (int i = 1; i < n; ++i) {
            const std::size_t pt = perms->right_transposition(p, i);
            const double w = momenta(pp(i)) - momenta(pp(i + 1));
            const Complex iw = kI * w;
            const Complex gm = g_minus_ie * iw;
            const Complex li = params.lambda * iw;
            for (std::size_t q = 0; q < order; ++q) {
                const Permutation& qq = perms->at(q);
                if (qq(i) > qq(i + 1)) continue;
                const std::size_t qt = perms->right_transposition(q, i);
                // Wedge Q holds x_j = x_k - 0, wedge QT_i holds x_j = x_k + 0.
                // (d_j - d_k) jump = 2c avg - 2(g - ie)(d_j - d_k) avg
                system(row, unknown(pt, qt)) += iw - params.c + gm;
                system(row, unknown(p, qt)) += -iw - params.c - gm;
                system(row, unknown(p, q)) += -iw - params.c + gm;
                system(row, unknown(pt, q)) += iw - params.c - gm;
                ++row;
                // value jump = 2 lambda (d_j - d_k) avg + 2(g + ie) avg
                system(row, unknown(pt, qt)) += 1.0 - li - g_plus_ie;
                system(row, unknown(p, qt)) += 1.0 + li - g_plus_ie;
                system(row, unknown(p, q)) += -1.0 - li - g_plus_ie;
                system(row, unknown(pt, q)) += -1.0 + li - g_plus_ie;
                ++row;
            }
        }
    }

    BcOracleResult out;
    out.n_equations = static_cast<std::size_t>(row);
    out.expected_nullity = order;

    Eigen::BDCSVD<ComplexMatrix> svd(system);
    const auto& sv = svd.singularValues();
    const double cutoff = kNullityThreshold * sv(0);
    std::size_t numerical_rank = 0;
    for (Eigen::Index s = 0; s < sv.size(); ++s)
        if (sv(s) > cutoff) ++numerical_rank;
    out.nullity = unknowns - numerical_rank;

    // Columns 0..order-1 are the fixed A_I(Q); solve for the rest.
    const ComplexMatrix fixed = system.leftCols(ix(order));
    const ComplexMatrix free = system.rightCols(ix(unknowns - order));
    const ComplexVector rhs = -(fixed * a_identity.entries);
    const ComplexVector solution = free.completeOrthogonalDecomposition().solve(rhs);

    ComplexVector full(ix(unknowns));
    full.head(ix(order)) = a_identity.entries;
    full.tail(ix(unknowns - order)) = solution;
    const double scale = std::max(a_identity.entries.cwiseAbs().maxCoeff(), 1e-300);
    out.residual = (system * full).cwiseAbs().maxCoeff() / scale;
    out.table.reserve(order);
    for (std::size_t p = 0; p < order; ++p) out.table.push_back(full.segment(ix(p * order), ix(order)));
    return out;
}

} // namespace pointbethe
