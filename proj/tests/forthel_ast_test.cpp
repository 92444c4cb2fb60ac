#include <gtest/gtest.h>

#include "fl/forthel_ast.hpp"

using namespace fl;
using namespace fl::build;

TEST(Linearize, Literals) {
  EXPECT_EQ(linearize(lit(4)), "4");
  EXPECT_EQ(linearize(lit(-2)), "-2");
  EXPECT_EQ(linearize(var("x")), "x");
  EXPECT_EQ(linearize(meta_var(35)), "(x 35)");
}

TEST(Linearize, MetaNameInNotion) {
  EXPECT_EQ(linearize(notion("RATIONAL_NUMBER", Meta{6})), "rational number (x 6)");
  auto s = does(var("x"), is_notion(notion("RATIONAL_NUMBER", Meta{6})));
  EXPECT_EQ(linearize(s), "x is a rational number (x 6)");
  EXPECT_EQ(linearize(does(var("x"), is_notion(notion("INTEGER")))), "x is an integer");
}

TEST(Linearize, ArithmeticParenthesesFollowPrecedence) {
  // (2 + 2) * 2 needs parentheses, 2 + 2 * 2 does not.
  EXPECT_EQ(linearize(bin("TIMES", bin("SUM", lit(2), lit(2)), lit(2))), "(2 + 2) * 2");
  EXPECT_EQ(linearize(bin("SUM", lit(2), bin("TIMES", lit(2), lit(2)))), "2 + 2 * 2");
  EXPECT_EQ(linearize(bin("MINUS", bin("MINUS", var("x"), lit(1)), lit(2))), "x - 1 - 2");
  EXPECT_EQ(linearize(bin("MINUS", var("x"), bin("MINUS", lit(1), lit(2)))), "x - (1 - 2)");
  EXPECT_EQ(linearize(bin("SUM", var("x"), bin("MINUS", lit(1), lit(2)))), "x + 1 - 2");
  EXPECT_EQ(linearize(bin("MINUS", bin("SUM", var("x"), lit(1)), lit(2))), "(x + 1) - 2");
  EXPECT_EQ(linearize(bin("EXP", bin("SUM", var("n"), lit(1)), lit(2))), "(n + 1) ^ 2");
}

TEST(Linearize, Statements) {
  auto odd = [](const char* v) { return does(var(v), adj("ODD")); };
  EXPECT_EQ(linearize(and_(odd("x"), odd("y"))), "x is odd and y is odd");
  EXPECT_EQ(linearize(not_(odd("x"))), "it's not that x is odd");
  EXPECT_EQ(linearize(does(var("x"), adj("ODD", Polarity::Neg))), "x is not odd");
  EXPECT_EQ(linearize(if_then(odd("x"), odd("y"))), "if x is odd then y is odd");
  EXPECT_EQ(linearize(iff(odd("x"), odd("y"))), "x is odd iff y is odd");
  EXPECT_EQ(linearize(exists(notion("INTEGER", Named{"y"}))), "there exists an integer y");
  EXPECT_EQ(linearize(exists_no(notion("INTEGER", Named{"y"}))), "there exists no integer y");
  EXPECT_EQ(linearize(for_q(Quantifier::Every, notion("INTEGER", Named{"b"}), odd("b"))), "for every integer b, b is odd");
}

TEST(Linearize, Attributes) {
  auto n = notion("INTEGER", Named{"x"}, "ODD", IsPred{adj1("GREATER_THAN", lit(1))});
  EXPECT_EQ(linearize(n), "odd integer x greater than 1");
  auto st = notion("INTEGER", Named{"x"}, std::nullopt,
                   SuchThat{and_(does(var("x"), adj("ODD")), does(var("x"), adj1("GREATER_THAN", lit(1))))});
  EXPECT_EQ(linearize(st), "integer x such that x is odd and x is greater than 1");
  auto that = notion("INTEGER", Unnamed{}, std::nullopt, IsPred{is_term(lit(3))});
  EXPECT_EQ(linearize(that), "integer that is 3");
}

TEST(Linearize, Text) {
  ForthelText t{Example{{does(var("x"), is_notion(notion("INTEGER", Named{"x"})))}, does(var("x"), adj("ODD"))}};
  EXPECT_EQ(linearize(t), "ex . assume x is an integer x. then x is odd.");
}

TEST(Ast, ValueEquality) {
  EXPECT_EQ(bin("SUM", lit(1), var("x")), bin("SUM", lit(1), var("x")));
  EXPECT_NE(bin("SUM", lit(1), var("x")), bin("SUM", var("x"), lit(1)));
  EXPECT_NE(var("x"), meta_var(1));
}

TEST(Ast, ConjunctionNestsRight) {
  auto a = does(var("a"), adj("ODD"));
  auto b = does(var("b"), adj("ODD"));
  auto c = does(var("c"), adj("ODD"));
  EXPECT_EQ(conjunction({a, b, c}), and_(a, and_(b, c)));
  EXPECT_EQ(conjunction({a}), a);
}

TEST(Ast, JsonDump) {
  auto j = to_json(bin("EXP", var("x"), lit(2)));
  EXPECT_EQ(j.dump(), R"({"BinApp":["EXP",{"Var":[{"Named":["x"]}]},{"IntLit":[2]}]})");
}
