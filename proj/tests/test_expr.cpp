#include <gtest/gtest.h>

#include <cmath>

#include "expr.hpp"
#include "sta/errors.hpp"
#include "test_util.hpp"

using namespace sta;
using namespace sta::basis;
using namespace sta::cli;

namespace {

Multivector eval(const std::string& s) { return evaluate(*parse(s)).value; }

std::size_t error_offset(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST(Expr, SquareOfGammaZero) {
  const ExprPtr e = parse("g0*g0");
  ASSERT_EQ(e->kind, ExprKind::Binary);
  EXPECT_EQ(e->binary, BinaryOp::Geometric);
  ASSERT_EQ(e->children.size(), 2u);
  EXPECT_EQ(e->children[0]->kind, ExprKind::Symbol);
  EXPECT_EQ(e->children[0]->name, "g0");
  EXPECT_MV_NEAR(evaluate(*e).value, one(), 0.0);
}

TEST(Expr, Symbols) {
  EXPECT_MV_NEAR(eval("e1*e2*e3 - I"), Multivector{}, 0.0);
  EXPECT_MV_NEAR(eval("J"), J(), 0.0);
  EXPECT_MV_NEAR(eval("J*J"), one(), 1e-15);
  EXPECT_MV_NEAR(eval("i*i"), -one(), 0.0);
  EXPECT_MV_NEAR(eval("e2"), e(2), 0.0);
  EXPECT_MV_NEAR(eval("g3"), gamma(3), 0.0);
  EXPECT_MV_NEAR(eval("I*I"), -one(), 0.0);
}

TEST(Expr, NumbersAndImaginaryLiterals) {
  EXPECT_MV_NEAR(eval("2.5"), 2.5 * one(), 0.0);
  EXPECT_MV_NEAR(eval("1e-3*g1"), 1e-3 * gamma(1), 0.0);
  EXPECT_MV_NEAR(eval("2i"), Complex(0, 2) * one(), 0.0);
  EXPECT_MV_NEAR(eval("3*i"), Complex(0, 3) * one(), 0.0);
}

TEST(Expr, ProductsAndConjugations) {
  EXPECT_MV_NEAR(eval("g1 o g2"), Multivector{}, 0.0);
  EXPECT_MV_NEAR(eval("g1 x g2"), gamma(1, 2), 0.0);
  EXPECT_MV_NEAR(eval("g1 ∘ g1"), -one(), 0.0);
  EXPECT_MV_NEAR(eval("g1 ⊗ g2"), gamma(1, 2), 0.0);
  EXPECT_MV_NEAR(eval("g1 /\\ g2"), gamma(1, 2), 0.0);
  EXPECT_MV_NEAR(eval("g1 ∧ g1"), Multivector{}, 0.0);
  EXPECT_MV_NEAR(eval("g1 . (g1*g2)"), -gamma(2), 0.0);
  EXPECT_MV_NEAR(eval("g1 · g1"), -one(), 0.0);
  EXPECT_MV_NEAR(eval("~(g0*g1)"), -gamma(0, 1), 0.0);
  EXPECT_MV_NEAR(eval("#g2"), -gamma(2), 0.0);
  EXPECT_MV_NEAR(eval("!(i*g2)"), Complex(0, -1) * gamma(2), 0.0);
  EXPECT_MV_NEAR(eval("~#!(i*g0*g1*g2)"), reverse(grade_involute(complex_conjugate(eval("i*g0*g1*g2")))),
                 0.0);
}

TEST(Expr, PowersGradesAndCalls) {
  EXPECT_MV_NEAR(eval("(1+e1)^2"), 2.0 * one() + 2.0 * e(1), 1e-15);
  EXPECT_MV_NEAR(eval("e1^-1"), e(1), 1e-15);
  EXPECT_MV_NEAR(eval("(2*g0)^-2"), 0.25 * one(), 1e-15);
  EXPECT_MV_NEAR(eval("<3 + g0*g1 + g2>0"), 3.0 * one(), 0.0);
  EXPECT_MV_NEAR(eval("⟨3 + g0*g1 + g2⟩2"), gamma(0, 1), 0.0);
  EXPECT_MV_NEAR(eval("exp(1.5707963267948966*e1*e2)"), e(1, 2), 1e-15);
  EXPECT_MV_NEAR(eval("exp(1.5708*e1*e2)"), e(1, 2), 1e-5);
  EXPECT_MV_NEAR(eval("inv(2*g0)"), 0.5 * gamma(0), 1e-15);
  EXPECT_MV_NEAR(eval("det(g0)"), one(), 1e-15);
  EXPECT_TRUE(evaluate(*parse("matrix(g0)")).show_matrix);
  EXPECT_FALSE(evaluate(*parse("g0")).show_matrix);
}

TEST(Expr, Precedence) {
  EXPECT_MV_NEAR(eval("1 + g1*g1"), Multivector{}, 0.0);
  EXPECT_MV_NEAR(eval("-g0 + g0"), Multivector{}, 0.0);
  EXPECT_MV_NEAR(eval("2*g1^2"), -2.0 * one(), 0.0);
  EXPECT_MV_NEAR(eval("~g0*g1"), gamma(0, 1), 0.0);
  EXPECT_MV_NEAR(eval("(g0 o g1) * g2"), Multivector{}, 0.0);
  EXPECT_MV_NEAR(eval("1 - 2 - 3"), -4.0 * one(), 0.0);
}

TEST(Expr, SyntaxErrors) {
  EXPECT_EQ(error_offset("g0*("), 4u);
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("g0 +"), 4u);
  EXPECT_EQ(error_offset("(g0"), 3u);
  EXPECT_EQ(error_offset("g0 o g1 * g2"), 8u);
  EXPECT_EQ(error_offset("g0^1.5"), 3u);
  EXPECT_EQ(error_offset("<g0>7"), 4u);
  EXPECT_EQ(error_offset("g0 g1"), 3u);
  try {
    parse("g0*(");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Expr, UnknownSymbol) {
  EXPECT_THROW(parse("g4"), UnknownSymbolError);
  EXPECT_THROW(parse("foo(g0)"), UnknownSymbolError);
  EXPECT_THROW(parse("G0"), UnknownSymbolError);
  EXPECT_EQ(error_offset("g0 + q"), 5u);
}

TEST(Expr, EvaluationErrors) {
  EXPECT_THROW(eval("inv(0.25*(1+g0)*(1+i*g1*g2))"), ZeroDivisorError);
  EXPECT_THROW(eval("(0.5*(1+g0))^-1"), ZeroDivisorError);
  EXPECT_THROW(eval("exp(1000*g0)"), OverflowError);
}

TEST(Expr, RoundTrip) {
  const char* suite[] = {
      "g0*g0",
      "e1*e2*e3 - I",
      "-g0 + 2.5*g1 - i*g2",
      "exp(1.5708*e1*e2)",
      "inv(0.25*(1+g0)*(1+i*g1*g2))",
      "matrix(J*e3)",
      "det(1 + g0)",
      "~#!(g0*g1) + (g1 o g2) - (g1 x g2)",
      "(g0 /\\ g1 /\\ g2) . g3",
      "<3 + g0*g1>2 + (e1 + e2)^-2",
      "2i*g1^3",
      "1e-3 + 4.25e2*g0",
      "((((g0))))",
  };
  for (const char* s : suite) {
    const ExprPtr a = parse(s);
    const std::string printed = to_string(*a);
    const ExprPtr b = parse(printed);
    EXPECT_TRUE(*a == *b) << s << " -> " << printed;
    EXPECT_EQ(to_string(*b), printed);
  }
}

TEST(Expr, Formatting) {
  EXPECT_EQ(format_multivector(gamma(0)), "1·g0");
  EXPECT_EQ(format_multivector(Multivector{}), "0");
  EXPECT_EQ(format_multivector(eval("i*g1*g2 - 2*e3 + 0.5")), "0.5 + 2·g03 + (0+1i)·g12");
  EXPECT_EQ(format_multivector(eval("1 - g1")), "1 - 1·g1");
  const std::string m = format_matrix(to_matrix(gamma(0)));
  EXPECT_EQ(m,
            "1+0i  0+0i  0+0i  0+0i\n"
            "0+0i  1+0i  0+0i  0+0i\n"
            "0+0i  0+0i  -1+0i  0+0i\n"
            "0+0i  0+0i  0+0i  -1+0i\n");
}
