#include "as2/characters.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace as2;

TEST(Catalan, Values) {
    EXPECT_EQ(catalan(1), 1);
    EXPECT_EQ(catalan(3), 5);
    EXPECT_EQ(catalan(4), 14);
    const auto c = oracle::catalan_table(20);
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(catalan(n), c[n]);
}

TEST(Narayana, Values) {
    EXPECT_EQ(narayana(3, 1), 3);
    EXPECT_EQ(narayana(4, 1), 6);
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(narayana(n, 0), 1);
    EXPECT_THROW(narayana(3, 3), std::out_of_range);
    EXPECT_THROW(narayana(0, 0), std::out_of_range);
}

TEST(Narayana, MatchesDyckPathPeakCounts) {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k < n; ++k)
            EXPECT_EQ(narayana(static_cast<std::size_t>(n), static_cast<std::size_t>(k)), oracle::narayana_paths(n, k));
}

TEST(Narayana, RowSumsAreCatalan) {
    for (std::size_t n = 1; n <= 16; ++n) {
        BigInt s = 0;
        for (std::size_t k = 0; k < n; ++k) s += narayana(n, k);
        EXPECT_EQ(s, catalan(n));
    }
}

TEST(NarayanaEquation, PassesAndDetectsMutation) {
    for (std::size_t order : {1, 5, 12}) EXPECT_TRUE(check_narayana_eq(order).pass) << order;
    auto s = narayana_series(8);
    s[4].add_term(2, 1);
    EXPECT_FALSE(check_narayana_series(s).pass);
}

TEST(CharacterSeries, Coefficients) {
    auto f = build_F_char(12);
    EXPECT_EQ(f[2], QPoly::monomial(1) + QPoly::monomial(-1));
    EXPECT_EQ(f[3], QPoly::monomial(2) + QPoly(3) + QPoly::monomial(-2));
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(f[n].at_one(), Rational(catalan(n)));
}

TEST(FuncAs, PassesAndDetectsMutation) {
    EXPECT_TRUE(check_funcas(2).pass);
    EXPECT_TRUE(check_funcas(8).pass);
    for (std::size_t n = 2; n <= 6; ++n) {
        auto f = build_F_char(6);
        f[n].add_term(static_cast<int>(n) - 3, 1);
        EXPECT_FALSE(check_funcas_series(f).pass) << n;
    }
}

TEST(Koszul, PassesAndDetectsMutation) {
    EXPECT_TRUE(check_koszul_gf(2).pass);
    EXPECT_TRUE(check_koszul_gf(10).pass);
    EXPECT_TRUE(check_koszul_series(f_as(10), f_as(10)).pass);
    auto comp = koszul_residual(f_as2(2), f_as2_dual(2)) + QSeries::variable(SeriesKind::exponential, 2);
    EXPECT_EQ(comp[1], QPoly(1));
    EXPECT_TRUE(comp[2].is_zero());
    auto bad = f_as2_dual(10);
    bad[5] += QPoly(1);
    EXPECT_FALSE(check_koszul_series(f_as2(10), bad).pass);
}

TEST(Beta, IdentitiesAndMutation) {
    for (const auto& r : check_beta_eqs(8)) EXPECT_TRUE(r.pass) << r.to_text();
    auto s = beta_series(6);
    EXPECT_EQ(s.beta[6], QPoly(Rational(95040, 720)));
    EXPECT_EQ(s.beta1[2], QPoly(1));
    s.beta[4] = s.beta[4] - QPoly(Rational(1, 24));
    bool detected = false;
    for (const auto& r : check_beta_series(s, f_as2(6))) detected = detected || !r.pass;
    EXPECT_TRUE(detected);
}

TEST(Duality, PassesAndSpecializes) {
    EXPECT_TRUE(check_character_duality(8).pass);
    auto r = duality_residual(build_F_char(1), build_dual_char(1));
    EXPECT_TRUE(r.is_zero());
    auto f = build_F_char(6);
    f[3].add_term(0, 1);
    EXPECT_FALSE(check_duality_series(f, build_dual_char(6)).pass);
    auto fd = build_dual_char(8).at_q_one();
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(fd[n], QPoly(static_cast<std::int64_t>(n)));
}

TEST(Sl2, DecomposeExamples) {
    EXPECT_EQ(sl2_decompose(QPoly::monomial(1) + QPoly::monomial(-1)), (SL2Decomposition{{1, 1}}));
    QPoly p;
    for (auto [e, c] : {std::pair{3, 1}, {1, 6}, {-1, 6}, {-3, 1}}) p.add_term(e, c);
    EXPECT_EQ(sl2_decompose(p), (SL2Decomposition{{3, 1}, {1, 5}}));
    EXPECT_EQ(render_decomposition(sl2_decompose(p)), "L(3) + L(1)^5");
    EXPECT_EQ(sl2_decompose(QPoly(1)), (SL2Decomposition{{0, 1}}));
}

TEST(Sl2, RejectsNonCharacters) {
    EXPECT_THROW(sl2_decompose(QPoly::monomial(1)), NotACharacter);
    EXPECT_THROW(sl2_decompose(QPoly::monomial(2) + QPoly::monomial(-2)), NotACharacter);
    EXPECT_THROW(sl2_decompose(QPoly(Rational(1, 2))), NotACharacter);
}

TEST(Sl2, ReconstructionRoundTripOnRandomMultiplicities) {
    std::mt19937 rng(31);
    for (int i = 0; i < 300; ++i) {
        SL2Decomposition dec;
        for (int d = 8; d >= 0; --d) {
            const int m = static_cast<int>(rng() % 4);
            if (m) dec.emplace_back(d, m);
        }
        EXPECT_EQ(sl2_decompose(reconstruct_character(dec)), dec);
    }
}

TEST(Sl2, CorollaryToEight) {
    const auto reports = check_sl2_corollary(8);
    ASSERT_EQ(reports.size(), 8u);
    for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.to_text();
    EXPECT_EQ(reports[1].fields[1].second.get<std::string>(), "L(1)");
    EXPECT_EQ(reports[3].fields[1].second.get<std::string>(), "L(3) + L(1)^5");
}

TEST(GlSeries, CatalanIdentity) {
    EXPECT_TRUE(check_gl_series(10).pass);
}
