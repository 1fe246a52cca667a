// Copyright 2026 The pointbethe Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "pointbethe/permutation.hpp"
#include "pointbethe/errors.hpp"
#include "pointbethe/panel.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace pointbethe;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

} // namespace

TEST(Permutation, RejectsNonBijection) {
    EXPECT_THROW(perm({1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(perm({0, 1}), std::invalid_argument);
    EXPECT_THROW(perm({1, 4, 2}), std::invalid_argument);
}

TEST(Permutation, CompositionConvention) {
    const Permutation q = perm({2, 3, 1});
    const Permutation r = perm({3, 1, 2});
    const Permutation qr = q * r;
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(qr(i), q(r(i)));
    EXPECT_THROW(compose(q, Permutation::identity(4)), SizeMismatch);
}

TEST(Permutation, RightTranspositionSwapsPositions) {
    const Permutation q = perm({3, 1, 4, 2});
    EXPECT_EQ(q * Permutation::transposition(4, 2), perm({3, 4, 1, 2}));
    EXPECT_EQ(q.times_transposition(2), perm({3, 4, 1, 2}));
}

TEST(Permutation, SignAndInverse) {
    EXPECT_EQ(perm({2, 1, 3}).sign(), -1);
    EXPECT_EQ(perm({2, 3, 1}).sign(), 1);
    const Permutation q = perm({4, 1, 3, 2});
    EXPECT_TRUE((q * q.inverse()).is_identity());
}

TEST(Permutation, ThreeParticleOrder) {
    const std::vector<std::vector<int>> expected{{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {3, 1, 2}, {2, 3, 1}, {3, 2, 1}};
    for (std::size_t r = 0; r < expected.size(); ++r) {
        EXPECT_EQ(unrank({3, r + 1}).images(), expected[r]);
    }
}

TEST(Permutation, CompareMatchesBruteForceOrder) {
    for (int n = 1; n <= 5; ++n) {
        const auto order = oracle::rank_order(n);
        for (std::size_t a = 0; a < order.size(); ++a) {
            for (std::size_t b = 0; b < order.size(); ++b) {
                const auto cmp = compare(perm(order[a]), perm(order[b]));
                if (a < b) EXPECT_EQ(cmp, std::strong_ordering::greater);
                if (a == b) EXPECT_EQ(cmp, std::strong_ordering::equal);
                if (a > b) EXPECT_EQ(cmp, std::strong_ordering::less);
            }
        }
    }
}

TEST(Permutation, RankUnrankAgainstBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        const auto order = oracle::rank_order(n);
        ASSERT_EQ(order.size(), factorial(n));
        for (std::size_t r = 0; r < order.size(); ++r) {
            EXPECT_EQ(unrank({n, r + 1}).images(), order[r]);
            EXPECT_EQ(rank(perm(order[r])).index, r + 1);
        }
    }
    EXPECT_THROW(unrank({3, 0}), std::out_of_range);
    EXPECT_THROW(unrank({3, 7}), std::out_of_range);
}

TEST(Permutation, EmbeddingKeepsRank) {
    // The first (N-1)! permutations of S_N are S_{N-1} padded with N.
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t r = 1; r <= factorial(n - 1); ++r) {
            EXPECT_EQ(unrank({n - 1, r}).embedded(n), unrank({n, r}));
        }
    }
}

TEST(Permutation, DecomposeExamples) {
    EXPECT_TRUE(decompose(Permutation::identity(4)).empty());
    EXPECT_EQ(decompose(perm({3, 1, 2})), (std::vector<int>{2, 1}));
    EXPECT_EQ(decompose(perm({2, 3, 1})), (std::vector<int>{1, 2}));
    EXPECT_EQ(decompose(perm({2, 1, 3})), (std::vector<int>{1}));
}

TEST(Permutation, DecomposeReassembles) {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t r = 1; r <= factorial(n); ++r) {
            const Permutation q = unrank({n, r});
            const auto word = decompose(q);
            for (int i : word) {
                EXPECT_GE(i, 1);
                EXPECT_LT(i, n);
            }
            EXPECT_EQ(Permutation::from_word(n, word), q);
        }
    }
}

TEST(Permutation, DecomposeFollowsCyclicPrefix) {
    // Q^m_{n(m-1)!+k} = T_{m-n} ... T_{m-1} Q^{m-1}_k
    for (int m = 2; m <= 5; ++m) {
        for (int nn = 0; nn < m; ++nn) {
            for (std::uint64_t k = 1; k <= factorial(m - 1); ++k) {
                const auto word = decompose(unrank({m, nn * factorial(m - 1) + k}));
                std::vector<int> expected;
                for (int s = m - nn; s <= m - 1; ++s) expected.push_back(s);
                for (int s : decompose(unrank({m - 1, k}))) expected.push_back(s);
                EXPECT_EQ(word, expected);
            }
        }
    }
}

TEST(Permutation, RegularRepresentationThreeParticleMatrices) {
    Eigen::MatrixXd t1(6, 6);
    t1 << 0, 1, 0, 0, 0, 0,
          1, 0, 0, 0, 0, 0,
          0, 0, 0, 1, 0, 0,
          0, 0, 1, 0, 0, 0,
          0, 0, 0, 0, 0, 1,
          0, 0, 0, 0, 1, 0;
    Eigen::MatrixXd t2(6, 6);
    t2 << 0, 0, 1, 0, 0, 0,
          0, 0, 0, 0, 1, 0,
          1, 0, 0, 0, 0, 0,
          0, 0, 0, 0, 0, 1,
          0, 1, 0, 0, 0, 0,
          0, 0, 0, 1, 0, 0;
    EXPECT_EQ(regular_rep(Permutation::transposition(3, 1)).dense(), t1);
    EXPECT_EQ(regular_rep(Permutation::transposition(3, 2)).dense(), t2);
}

TEST(Permutation, RegularRepresentationIsHomomorphism) {
    SeededUniform draw(5);
    for (int n = 2; n <= 5; ++n) {
        const auto order = static_cast<double>(factorial(n));
        for (int trial = 0; trial < 20; ++trial) {
            const Permutation r = unrank({n, static_cast<std::uint64_t>(draw(0, order)) + 1});
            const Permutation s = unrank({n, static_cast<std::uint64_t>(draw(0, order)) + 1});
            EXPECT_EQ(regular_rep(r) * regular_rep(s), regular_rep(r * s));
        }
    }
}

TEST(Permutation, RegularRepresentationDefinition) {
    // (R^)_{Q,Q'} = 1 exactly when Q' = QR; checked on brute-force positions.
    const int n = 4;
    const auto order = oracle::rank_order(n);
    const Permutation r = perm({2, 4, 1, 3});
    const Eigen::MatrixXd dense = regular_rep(r).dense();
    for (std::size_t a = 0; a < order.size(); ++a) {
        const Permutation qr = perm(order[a]) * r;
        for (std::size_t b = 0; b < order.size(); ++b) {
            EXPECT_EQ(dense(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)),
                      qr.images() == order[b] ? 1.0 : 0.0);
        }
    }
}

TEST(Permutation, TableTranspositionsAndPositions) {
    const PermutationTable table(4);
    ASSERT_EQ(table.order(), 24u);
    for (std::size_t q = 0; q < table.order(); ++q) {
        EXPECT_EQ(table.position(table.at(q)), q);
        for (int i = 1; i < 4; ++i) {
            EXPECT_EQ(table.at(table.right_transposition(q, i)), table.at(q).times_transposition(i));
        }
    }
    EXPECT_THROW(PermutationTable(0), std::out_of_range);
    EXPECT_THROW(PermutationTable(11), std::out_of_range);
}
