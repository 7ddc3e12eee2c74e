#include "as2/lincomb.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

using as2::LinComb;
using as2::Rational;
using LC = LinComb<std::string>;

namespace {

std::string render(const LC& x) {
    return as2::to_text(x, [](const std::string& k) { return k; });
}

LC parse(std::string_view text) {
    return as2::parse_lincomb<std::string>(text, [](std::string_view s, std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw as2::ParseError("expected key", pos);
        return std::string(s.substr(start, pos - start));
    });
}

}  // namespace

TEST(LinComb, CombineExamples) {
    LC x("x");
    EXPECT_TRUE(as2::lincomb_combine(x, x, 1, -1).empty());
    EXPECT_EQ(as2::lincomb_combine(x, LC(), Rational(3, 2), 1), LC("x", Rational(3, 2)));
    LC a("t", 2);
    a.add("u", 1);
    EXPECT_EQ(as2::lincomb_combine(a, LC("u"), 1, -1), LC("t", 2));
}

TEST(LinComb, NoStoredZeros) {
    LC x;
    x.add("a", 2);
    x.add("a", -2);
    EXPECT_TRUE(x.empty());
    x.add("b", 0);
    EXPECT_TRUE(x.empty());
    LC y("c", 5);
    y *= 0;
    EXPECT_TRUE(y.empty());
    EXPECT_EQ(y.coeff("c"), 0);
}

TEST(LinComb, IterationIsKeyOrder) {
    LC x;
    x.add("c", 1);
    x.add("a", 1);
    x.add("b", 1);
    std::string keys;
    for (const auto& [k, c] : x) keys += k;
    EXPECT_EQ(keys, "abc");
    EXPECT_EQ(x.leading().first, "a");
}

TEST(LinComb, TextForm) {
    LC x;
    EXPECT_EQ(render(x), "0");
    x.add("a", -1);
    x.add("b", Rational(3, 2));
    x.add("c", -2);
    EXPECT_EQ(render(x), "-1 a + 3/2 b - 2 c");
    EXPECT_EQ(parse(render(x)), x);
    EXPECT_TRUE(parse("0").empty());
    EXPECT_EQ(parse("a + b"), LC("a") + LC("b"));
    EXPECT_THROW(parse(""), as2::ParseError);
    EXPECT_THROW(parse("1 a 2 b"), as2::ParseError);
}

TEST(LinComb, AdditionCommutesOnRandomInputs) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4), key(0, 5), len(0, 6);
    auto pick = [&] {
        LC x;
        for (int i = len(rng); i > 0; --i) x.add(std::string(1, static_cast<char>('a' + key(rng))), coef(rng));
        return x;
    };
    for (int i = 0; i < 300; ++i) {
        LC a = pick(), b = pick(), c = pick();
        EXPECT_EQ(as2::lincomb_combine(a, b, 1, 1), as2::lincomb_combine(b, a, 1, 1));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_TRUE((a - a).empty());
        EXPECT_EQ(Rational(2) * a, a + a);
        for (const auto& [k, v] : a + b) EXPECT_FALSE(v.is_zero());
        EXPECT_EQ(parse(render(a)), a);
    }
}

TEST(LinComb, MapKeysMergesCollisions) {
    LC x;
    x.add("ab", 1);
    x.add("ac", 2);
    x.add("b", 5);
    auto y = x.map_keys([](const std::string& k) { return k.size(); });
    EXPECT_EQ(y.coeff(2), 3);
    EXPECT_EQ(y.coeff(1), 5);
}
