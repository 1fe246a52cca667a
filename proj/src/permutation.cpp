// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/permutation.hpp"

#include "pointbethe/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pointbethe {

namespace {

void require_same_size(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        std::ostringstream msg;
        msg << "permutation size mismatch: " << a.size() << " vs " << b.size();
        throw SizeMismatch(msg.str());
    }
}

// Cycle C_n = T_{m-n} ... T_{m-1} acting on values 1..m: sends m to m-n and
// shifts m-n..m-1 up by one.
int cycle_forward(int v, int m, int n) {
    if (v == m) return m - n;
    if (v >= m - n && v < m) return v + 1;
    return v;
}

int cycle_backward(int v, int m, int n) {
    if (v == m - n) return m;
    if (v > m - n && v <= m) return v - 1;
    return v;
}

// Peels Q down through S_N, S_{N-1}, ..., S_2 and returns n_m for m = N..2.
std::vector<int> cycle_digits(const Permutation& q) {
    std::vector<int> work = q.images();
    std::vector<int> digits;
    for (int m = q.size(); m >= 2; --m) {
        const int n = m - work[static_cast<std::size_t>(m - 1)];
        digits.push_back(n);
        for (int pos = 0; pos < m - 1; ++pos) {
            work[static_cast<std::size_t>(pos)] = cycle_backward(work[static_cast<std::size_t>(pos)], m, n);
        }
    }
    return digits;
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("permutation of zero elements");
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("images do not form a bijection of {1..N}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("transposition index out of range");
    return identity(n).times_transposition(i);
}

Permutation Permutation::from_word(int n, std::span<const int> word) {
    Permutation q = identity(n);
    for (int i : word) q = q.times_transposition(i);
    return q;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t pos = 0; pos < images_.size(); ++pos) {
        inv[static_cast<std::size_t>(images_[pos] - 1)] = static_cast<int>(pos) + 1;
    }
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    int s = 1;
    for (std::size_t a = 0; a < images_.size(); ++a)
        for (std::size_t b = a + 1; b < images_.size(); ++b)
            if (images_[a] > images_[b]) s = -s;
    return s;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t pos = 0; pos < images_.size(); ++pos)
        if (images_[pos] != static_cast<int>(pos) + 1) return false;
    return true;
}

Permutation Permutation::embedded(int n) const {
    if (n < size()) throw std::invalid_argument("cannot embed into a smaller symmetric group");
    std::vector<int> im = images_;
    for (int v = size() + 1; v <= n; ++v) im.push_back(v);
    return Permutation(std::move(im));
}

Permutation Permutation::times_transposition(int i) const {
    if (i < 1 || i >= size()) throw std::out_of_range("transposition index out of range");
    std::vector<int> im = images_;
    std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
    return Permutation(std::move(im));
}

Permutation compose(const Permutation& q, const Permutation& r) {
    require_same_size(q, r);
    std::vector<int> im(static_cast<std::size_t>(q.size()));
    for (int i = 1; i <= q.size(); ++i) im[static_cast<std::size_t>(i - 1)] = q(r(i));
    return Permutation(std::move(im));
}

std::strong_ordering compare(const Permutation& q, const Permutation& qp) {
    require_same_size(q, qp);
    for (int pos = q.size(); pos >= 1; --pos) {
        if (q(pos) != qp(pos)) return q(pos) <=> qp(pos);
    }
    return std::strong_ordering::equal;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
    std::uint64_t f = 1;
    for (int m = 2; m <= n; ++m) f *= static_cast<std::uint64_t>(m);
    return f;
}

Permutation unrank(PermutationRank r) {
    if (r.n_particles < 1) throw std::out_of_range("n_particles must be >= 1");
    const std::uint64_t total = factorial(r.n_particles);
    if (r.index < 1 || r.index > total) {
        std::ostringstream msg;
        msg << "rank " << r.index << " outside [1, " << total << "]";
        throw std::out_of_range(msg.str());
    }
    // j = n (m-1)! + k, peeled from m = N down to 2.
    std::vector<int> digits;
    std::uint64_t j = r.index;
    for (int m = r.n_particles; m >= 2; --m) {
        const std::uint64_t block = factorial(m - 1);
        const std::uint64_t n = (j - 1) / block;
        digits.push_back(static_cast<int>(n));
        j -= n * block;
    }
    std::vector<int> im{1};
    for (int m = 2; m <= r.n_particles; ++m) {
        const int n = digits[static_cast<std::size_t>(r.n_particles - m)];
        im.push_back(m);
        for (int& v : im) v = cycle_forward(v, m, n);
    }
    return Permutation(std::move(im));
}

PermutationRank rank(const Permutation& q) {
    const std::vector<int> digits = cycle_digits(q);
    std::uint64_t index = 1;
    int m = q.size();
    for (int n : digits) {
        index += static_cast<std::uint64_t>(n) * factorial(m - 1);
        --m;
    }
    return PermutationRank{q.size(), index};
}

std::vector<int> decompose(const Permutation& q) {
    const std::vector<int> digits = cycle_digits(q);
    std::vector<int> word;
    int m = q.size();
    for (int n : digits) {
        for (int i = m - n; i <= m - 1; ++i) word.push_back(i);
        --m;
    }
    return word;
}

RegularRepMatrix::RegularRepMatrix(int n_particles, std::vector<std::size_t> column_of_row)
    : n_(n_particles), col_(std::move(column_of_row)) {
    if (col_.size() != factorial(n_)) throw std::invalid_argument("regular representation order must be N!");
}

Eigen::MatrixXd RegularRepMatrix::dense() const {
    const auto n = static_cast<Eigen::Index>(col_.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t row = 0; row < col_.size(); ++row)
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col_[row])) = 1.0;
    return m;
}

RegularRepMatrix operator*(const RegularRepMatrix& a, const RegularRepMatrix& b) {
    if (a.n_ != b.n_) throw SizeMismatch("regular representation size mismatch");
    // (A B)_{Q,Q''} = B_{QR, Q''}: follow a's column into b's row.
    std::vector<std::size_t> col(a.col_.size());
    for (std::size_t row = 0; row < col.size(); ++row) col[row] = b.col_[a.col_[row]];
    return RegularRepMatrix(a.n_, std::move(col));
}

RegularRepMatrix regular_rep(const Permutation& r) {
    const int n = r.size();
    const std::uint64_t total = factorial(n);
    std::vector<std::size_t> col(total);
    for (std::uint64_t idx = 1; idx <= total; ++idx) {
        const Permutation q = unrank({n, idx});
        col[idx - 1] = rank(compose(q, r)).index - 1;
    }
    return RegularRepMatrix(n, std::move(col));
}

PermutationTable::PermutationTable(int n) : n_(n) {
    if (n < 1 || n > 10) throw std::out_of_range("PermutationTable supports 1 <= N <= 10");
    const std::uint64_t total = factorial(n);
    perms_.reserve(total);
    for (std::uint64_t idx = 1; idx <= total; ++idx) perms_.push_back(unrank({n, idx}));
    swap_.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int i = 1; i < n; ++i) {
        auto& table = swap_[static_cast<std::size_t>(i - 1)];
        table.resize(total);
        for (std::size_t q = 0; q < total; ++q) table[q] = position(perms_[q].times_transposition(i));
    }
}

std::size_t PermutationTable::position(const Permutation& q) const {
    if (q.size() != n_) throw SizeMismatch("permutation size does not match table");
    return static_cast<std::size_t>(rank(q).index - 1);
}

} // namespace pointbethe
