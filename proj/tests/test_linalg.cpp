#include "as2/linalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using as2::LinComb;
using as2::Rational;
using as2::SparseMatrix;
using Row = LinComb<int>;

namespace {

Row row(std::initializer_list<std::pair<int, Rational>> terms) {
    Row r;
    for (const auto& [k, c] : terms) r.add(k, c);
    return r;
}

std::vector<std::vector<Rational>> dense(const SparseMatrix<int>& m, int cols) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : m.rows) {
        std::vector<Rational> d(cols);
        for (const auto& [k, c] : r) d[k] = c;
        out.push_back(std::move(d));
    }
    return out;
}

SparseMatrix<int> random_matrix(std::mt19937& rng, int rows, int cols, int dependent) {
    std::uniform_int_distribution<int> coef(-3, 3), col(0, cols - 1);
    SparseMatrix<int> m;
    for (int i = 0; i < rows; ++i) {
        Row r;
        for (int j = 0; j < 3; ++j) r.add(col(rng), coef(rng));
        m.rows.push_back(r);
    }
    for (int i = 0; i < dependent && !m.rows.empty(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, m.rows.size() - 1);
        Row r = Rational(coef(rng)) * m.rows[pick(rng)];
        r.add(m.rows[pick(rng)], Rational(1, 2));
        m.rows.push_back(r);
    }
    return m;
}

}  // namespace

TEST(Rank, Examples) {
    SparseMatrix<int> id;
    for (int i = 0; i < 4; ++i) id.rows.push_back(Row(i));
    EXPECT_EQ(as2::rank(id), 4u);

    SparseMatrix<int> prop{{row({{0, 2}, {1, 4}}), row({{0, Rational(-1, 3)}, {1, Rational(-2, 3)}})}};
    EXPECT_EQ(as2::rank(prop), 1u);

    SparseMatrix<int> zero{{Row(), Row()}};
    EXPECT_EQ(as2::rank(zero), 0u);
}

TEST(Rank, AgreesWithDenseOracle) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 1 + trial % 7, 6, trial % 4);
        EXPECT_EQ(as2::rank(m), oracle::dense_rank(dense(m, 6)));
    }
}

TEST(Rank, InvariantUnderRowPermutationAndScaling) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> nz(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 5, 7, 3);
        const auto r = as2::rank(m);
        auto shuffled = m;
        std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
        for (auto& x : shuffled.rows) x *= Rational(nz(rng) * (nz(rng) % 2 ? 1 : -1), nz(rng));
        EXPECT_EQ(as2::rank(shuffled), r);
    }
}

TEST(Solve, IdentityReturnsRhs) {
    SparseMatrix<int> id;
    for (int i = 0; i < 3; ++i) id.rows.push_back(Row(i));
    auto rhs = row({{0, 5}, {2, Rational(-1, 2)}});
    auto x = as2::solve(id, rhs);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->coeff(0), 5);
    EXPECT_EQ(x->coeff(1), 0);
    EXPECT_EQ(x->coeff(2), Rational(-1, 2));
}

TEST(Solve, ZeroMatrixHasNoSolution) {
    SparseMatrix<int> zero{{Row(), Row()}};
    EXPECT_FALSE(as2::solve(zero, Row(0)));
    EXPECT_TRUE(as2::solve(zero, Row()));
}

TEST(Solve, SolutionRecombinesToRhs) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coef(-3, 3);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(rng, 4, 6, 2);
        Row rhs;
        for (std::size_t i = 0; i < m.rows.size(); ++i) rhs.add(m.rows[i], coef(rng));
        if (trial % 3 == 0) rhs.add(5, 1);  // sometimes outside the span
        auto x = as2::solve(m, rhs);
        if (!x) {
            SparseMatrix<int> ext = m;
            ext.rows.push_back(rhs);
            EXPECT_GT(as2::rank(ext), as2::rank(m));
            continue;
        }
        ++solved;
        Row back;
        for (const auto& [i, c] : *x) back.add(m.rows[i], c);
        EXPECT_EQ(back, rhs);
    }
    EXPECT_GT(solved, 100);
}
