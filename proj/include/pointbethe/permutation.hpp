// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file permutation.hpp
 * @brief Permutations of S_N in one-line form, ranked in the "reverse
 *        lexicographic, largest first" order used for coefficient vectors.
 *
 * Conventions fixed here and relied on everywhere else:
 *  - Q is stored as its images (Q(1), ..., Q(N)), values 1-based.
 *  - compose(Q, R) = QR with (QR)(i) = Q(R(i)).
 *  - Right multiplication by T_i swaps positions i and i+1 of the one-line form.
 *  - Q > Q' when the first nonzero of Q(N) - Q'(N), Q(N-1) - Q'(N-1), ... is
 *    positive. Rank 1 is the largest permutation, i.e. the identity.
 *  - S_N sits inside S_{N+n} by padding with fixed points.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pointbethe {

class Permutation {
public:
    /// Throws std::invalid_argument unless `images` is a bijection of {1..N}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// T_i for 1 <= i < n.
    static Permutation transposition(int n, int i);
    /// T_{w_1} T_{w_2} ... T_{w_L} in S_n.
    static Permutation from_word(int n, std::span<const int> word);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    /// Q(i), 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    /// +1 or -1.
    int sign() const;
    bool is_identity() const noexcept;
    /// Same permutation viewed in S_n, n >= size(), padded with fixed points.
    Permutation embedded(int n) const;
    /// QT_i: positions i and i+1 swapped.
    Permutation times_transposition(int i) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// (QR)(i) = Q(R(i)). Throws SizeMismatch.
Permutation compose(const Permutation& q, const Permutation& r);
inline Permutation operator*(const Permutation& q, const Permutation& r) { return compose(q, r); }

/// Order comparison; greater means "larger" (earlier in rank order). Throws SizeMismatch.
std::strong_ordering compare(const Permutation& q, const Permutation& qp);

std::uint64_t factorial(int n);

struct PermutationRank {
    int n_particles = 1;
    std::uint64_t index = 1; ///< 1-based, in [1, N!]
};

/// Throws std::out_of_range for index outside [1, N!].
Permutation unrank(PermutationRank r);
PermutationRank rank(const Permutation& q);

/// Indices i_1..i_L with T_{i_1} ... T_{i_L} = Q, built by the cyclic-prefix recursion
/// Q^m_{n(m-1)!+k} = T_{m-n} ... T_{m-1} Q^{m-1}_k.
std::vector<int> decompose(const Permutation& q);

/// (R^)_{Q,Q'} = delta_{Q', QR}, rows and columns in rank order.
/// Stored as the column index of the single 1 in each row (0-based).
class RegularRepMatrix {
public:
    RegularRepMatrix(int n_particles, std::vector<std::size_t> column_of_row);

    int n_particles() const noexcept { return n_; }
    std::size_t order() const noexcept { return col_.size(); }
    std::size_t column_of_row(std::size_t row) const { return col_[row]; }
    int operator()(std::size_t row, std::size_t col) const { return col_[row] == col ? 1 : 0; }

    Eigen::MatrixXd dense() const;

    friend RegularRepMatrix operator*(const RegularRepMatrix& a, const RegularRepMatrix& b);
    friend bool operator==(const RegularRepMatrix&, const RegularRepMatrix&) = default;

private:
    int n_;
    std::vector<std::size_t> col_;
};

RegularRepMatrix regular_rep(const Permutation& r);

/// All of S_N in rank order with precomputed right-transposition tables.
/// Immutable after construction; share freely.
class PermutationTable {
public:
    explicit PermutationTable(int n);

    int n_particles() const noexcept { return n_; }
    std::size_t order() const noexcept { return perms_.size(); }
    /// 0-based position q holds unrank(q + 1).
    const Permutation& at(std::size_t q) const { return perms_[q]; }
    /// 0-based position of QT_i for Q at position q.
    std::size_t right_transposition(std::size_t q, int i) const {
        return swap_[static_cast<std::size_t>(i - 1)][q];
    }
    /// 0-based position of any permutation of size N.
    std::size_t position(const Permutation& q) const;

private:
    int n_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<std::size_t>> swap_;
};

} // namespace pointbethe
