// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Reference computations used only by the tests. None of them calls the
// library code they are compared against.

#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace pointbethe::oracle {

using cplx = std::complex<double>;

// Q > Q' iff the first nonzero of Q(N)-Q'(N), Q(N-1)-Q'(N-1), ... is positive.
inline bool larger(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// All of S_N, largest first, by enumeration and sorting.
inline std::vector<std::vector<int>> rank_order(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(all.begin(), all.end(), larger);
    return all;
}

inline std::size_t index_of(const std::vector<std::vector<int>>& order, const std::vector<int>& p) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), p) - order.begin());
}

// Two-body amplitudes from the matching form U+ (psi', psi)(0+) = U- (psi', psi)(0-)
// in the relative coordinate r = x1 - x2, psi' = d/dr. The incoming wave
// exp(i(k1 x1 + k2 x2)) sits on x1 < x2, reflected exp(i(k2 x1 + k1 x2)) on the
// same side, transmitted exp(i(k1 x1 + k2 x2)) on x1 > x2.
struct Amplitudes {
    cplx t_plus, r_plus, t_minus, r_minus;
};

inline std::pair<cplx, cplx> matching_solution(double c, double lambda, double gamma, double eta, double u) {
    const cplx i{0.0, 1.0};
    Eigen::Matrix2cd up;
    Eigen::Matrix2cd um;
    up << 1.0 + (gamma - i * eta), -c / 2.0, -2.0 * lambda, 1.0 - (gamma + i * eta);
    um << 1.0 - (gamma - i * eta), c / 2.0, 2.0 * lambda, 1.0 + (gamma + i * eta);
    // psi_+ = (i u s_t / 2, s_t), psi_- = (i u (1 - s_r) / 2, 1 + s_r)
    const Eigen::Vector2cd col_t = up * Eigen::Vector2cd(i * u / 2.0, 1.0);
    const Eigen::Vector2cd col_r = -(um * Eigen::Vector2cd(-i * u / 2.0, 1.0));
    const Eigen::Vector2cd rhs = um * Eigen::Vector2cd(i * u / 2.0, 1.0);
    Eigen::Matrix2cd a;
    a << col_t, col_r;
    const Eigen::Vector2cd sol = a.partialPivLu().solve(rhs);
    return {sol(0), sol(1)};
}

inline Amplitudes amplitudes(double c, double lambda, double gamma, double eta, double u) {
    const auto [tp, rp] = matching_solution(c, lambda, gamma, eta, u);
    const auto [tm, rm] = matching_solution(c, lambda, -gamma, -eta, u);
    return {tp, rp, tm, rm};
}

// prod_{j>k} (d_j - d_k + c) det[exp(i k_m x_n)] by expanding the operator into
// monomials d^alpha and differentiating the determinant column by column.
inline cplx determinant_by_differentiation(const std::vector<double>& k, double c, const std::vector<double>& x) {
    const int n = static_cast<int>(k.size());
    using Monomial = std::vector<int>;
    std::map<Monomial, cplx> op{{Monomial(static_cast<std::size_t>(n), 0), 1.0}};
    for (int j = 0; j < n; ++j) {
        for (int kk = 0; kk < j; ++kk) {
            std::map<Monomial, cplx> next;
            for (const auto& [mono, coef] : op) {
                Monomial dj = mono;
                ++dj[static_cast<std::size_t>(j)];
                Monomial dk = mono;
                ++dk[static_cast<std::size_t>(kk)];
                next[dj] += coef;
                next[dk] -= coef;
                next[mono] += c * coef;
            }
            op = std::move(next);
        }
    }
    const cplx i{0.0, 1.0};
    cplx total = 0.0;
    for (const auto& [mono, coef] : op) {
        Eigen::MatrixXcd m(n, n);
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                m(r, col) = std::pow(i * k[static_cast<std::size_t>(r)], mono[static_cast<std::size_t>(col)]) *
                            std::exp(i * k[static_cast<std::size_t>(r)] * x[static_cast<std::size_t>(col)]);
        total += coef * m.determinant();
    }
    return total;
}

} // namespace pointbethe::oracle
