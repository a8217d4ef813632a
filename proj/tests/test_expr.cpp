#include "doctest.h"
#include "mvknuth/expr.hpp"

using namespace mvknuth;

TEST_CASE("arithmetic and normal form") {
  const Expr s = Expr::symbol(0), t = Expr::symbol(1);
  CHECK((s + t) * (s - t) == s * s - t * t);
  CHECK((s - s).is_zero());
  CHECK((s * t).is_signed_monomial());
  CHECK((-(s * t)).is_signed_monomial());
  CHECK_FALSE((s + t).is_signed_monomial());
  CHECK(Expr::constant(3).is_constant());
  CHECK(Expr::constant(0).is_zero());
  CHECK((s * s * t).degree_in(0) == 2);
  CHECK((s * t + Expr::constant(2)).symbols() == std::set<Symbol>{0, 1});
}

TEST_CASE("substitute, rename, evaluate") {
  const Expr s = Expr::symbol(0), t = Expr::symbol(1), u = Expr::symbol(2);
  const Expr e = s * t + s;
  CHECK(e.substitute(0, u - Expr::constant(1)) == (u - Expr::constant(1)) * t + u - Expr::constant(1));
  CHECK(e.rename({{0, 5}, {1, 4}}) == Expr::symbol(5) * Expr::symbol(4) + Expr::symbol(5));
  CHECK(e.evaluate({{0, 2}, {1, 2}}, 3) == 0);
  CHECK((-s).evaluate({{0, 1}}, 5) == 4);
}

TEST_CASE("text") {
  const Expr s = Expr::symbol(0), t = Expr::symbol(1);
  CHECK((s * t - Expr::constant(2) * t * t + Expr::constant(1)).to_string() == "s0*s1 - 2*s1^2 + 1");
  CHECK((-s).to_string() == "-s0");
  CHECK(Expr().to_string() == "0");
}
