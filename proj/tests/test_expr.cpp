#include "as2/expr.hpp"

#include <gtest/gtest.h>

using namespace as2;

namespace {
const Alphabet abc({"a", "b", "c"});
Expr E(const char* s) { return parse_expr(s, abc); }
Expr g(std::uint32_t i) { return Expr::generator(Label{i}); }
}  // namespace

TEST(ParseExpr, Examples) {
    EXPECT_EQ(E("a"), g(0));
    EXPECT_EQ(E("(a *1 b)"), mul1(g(0), g(1)));
    auto e = E("((a *2 b) *1 c)");
    EXPECT_EQ(e, mul1(mul2(g(0), g(1)), g(2)));
    EXPECT_EQ(e.op(), Product::first);
    EXPECT_EQ(e.left().op(), Product::second);
    EXPECT_EQ(e.degree(), 3u);
}

TEST(ParseExpr, Errors) {
    EXPECT_THROW(E(""), ParseError);
    EXPECT_THROW(E("(a * b)"), ParseError);
    EXPECT_THROW(E("(a *3 b)"), ParseError);
    EXPECT_THROW(E("(a *1 b"), ParseError);
    EXPECT_THROW(E("a b"), ParseError);
    EXPECT_THROW(E("(a *1 z)"), UnknownLabel);
    try {
        E("(a *1 b))");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 8u);
    }
}

TEST(RenderExpr, CanonicalAndRoundTrip) {
    EXPECT_EQ(render_expr(E(" ( ( a*2b ) *1 c ) "), abc), "((a *2 b) *1 c)");
    for (const char* s : {"a", "(a *1 b)", "((a *2 b) *1 (c *1 a))", "(a *2 (b *2 (c *1 a)))"})
        EXPECT_EQ(render_expr(E(s), abc), s);
}

TEST(ExprOrder, GeneratorsAfterNodesAndByLabel) {
    EXPECT_LT(mul1(g(0), g(0)), g(0));
    EXPECT_LT(g(0), g(1));
    EXPECT_LT(mul1(g(0), g(1)), mul2(g(0), g(1)));
    EXPECT_LT(mul2(g(0), g(1)), mul1(g(1), g(0)));
    EXPECT_EQ(E("(a *1 b)"), E("(a *1 b)"));
}

TEST(ExprLinComb, TextRoundTrip) {
    auto x = parse_expr_lincomb("(a *2 (b *1 c)) + (a *1 (b *2 c)) - ((a *1 b) *2 c)", abc);
    EXPECT_EQ(x.size(), 3u);
    EXPECT_EQ(x.coeff(E("((a *1 b) *2 c)")), -1);
    EXPECT_EQ(parse_expr_lincomb(render(x, abc), abc), x);
}

TEST(LeafLabels, LeftToRight) {
    std::vector<Label> out;
    leaf_labels(E("((c *2 a) *1 (b *1 a))"), out);
    ASSERT_EQ(out.size(), 4u);
    EXPECT_EQ(out[0].index, 2u);
    EXPECT_EQ(out[3].index, 0u);
}
