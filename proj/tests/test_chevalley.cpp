#include "doctest.h"
#include "mvknuth/chevalley.hpp"
#include "mvknuth/errors.hpp"
#include "mvknuth/lattice.hpp"

using namespace mvknuth;

namespace {

Factor factor(Root r, int level, Symbol s) { return Factor{AffineRoot{r, level}, Expr::symbol(s), 0}; }

RewriteState state_of_word(int n, std::vector<int> letters) {
  const Gallery g = Gallery::of_word(Word(n, std::move(letters)));
  return initial_state(factor_word(g), coweight_of(g));
}

}  // namespace

TEST_CASE("commute examples") {
  RewriteState s;
  s.word.rank = 4;
  s.target = Coweight::zero(4);
  s.word.factors = {factor(Root(2, 1), 0, 0), factor(Root(4, 3), 0, 1)};
  RewriteState swapped = commute(s, 0);
  REQUIRE(swapped.word.size() == 2);
  CHECK(swapped.word.factors[0].root.root == Root(4, 3));

  // beta = eps_z - eps_y, delta = eps_m - eps_z with y < z < m.
  s.word.rank = 3;
  s.target = Coweight::zero(3);
  s.word.factors = {factor(Root(2, 1), 0, 0), factor(Root(3, 2), -1, 1)};
  RewriteState c = commute(s, 0);
  REQUIRE(c.word.size() == 3);
  CHECK(c.word.factors[0].root == AffineRoot{Root(3, 1), -1});
  CHECK(c.word.factors[0].param == Expr::constant(-1) * Expr::symbol(0) * Expr::symbol(1));

  // beta = eps_z - eps_y at level 0, delta = eps_y - eps_x at level -1.
  s.word.factors = {factor(Root(3, 2), 0, 0), factor(Root(2, 1), -1, 1)};
  c = commute(s, 0);
  REQUIRE(c.word.size() == 3);
  CHECK(c.word.factors[0].root == AffineRoot{Root(3, 1), -1});
  CHECK(c.word.factors[0].param == Expr::symbol(0) * Expr::symbol(1));

  s.word.factors = {factor(Root(2, 1), 0, 0), factor(Root(1, 2), 0, 1)};
  CHECK_THROWS_AS(commute(s, 0), InvalidValue);
}

TEST_CASE("structure constants come from the matrices") {
  CHECK(structure_constant(Root(2, 1), Root(3, 2), 3) == -1);
  CHECK(structure_constant(Root(3, 2), Root(2, 1), 3) == 1);
  CHECK(structure_constant(Root(2, 1), Root(4, 3), 4) == 0);
  for (int n = 2; n <= 4; ++n) CHECK(check_structure_constants(n) > 0);
}

TEST_CASE("absorb examples") {
  RewriteState s;
  s.word.rank = 2;
  s.target = Coweight(std::vector<int>{2, 1});
  s.word.factors = {factor(Root(2, 1), 0, 0), factor(Root(2, 1), 1, 1)};
  const RewriteState a = absorb(s);
  REQUIRE(a.word.size() == 1);
  CHECK(a.word.factors[0].root.level == 0);
  s.word.factors.clear();
  CHECK(absorb(s).word.empty());
}

TEST_CASE("gather merges equal roots") {
  RewriteState s;
  s.word.rank = 2;
  s.target = Coweight::zero(2);
  s.word.factors = {factor(Root(2, 1), -1, 0), factor(Root(2, 1), -1, 1)};
  const RewriteState g = gather(s, 0);
  REQUIRE(g.word.size() == 1);
  CHECK(g.word.factors[0].param == Expr::symbol(0) + Expr::symbol(1));
  s.word.factors[1].param = -Expr::symbol(0);
  CHECK(gather(s, 0).word.empty());
}

TEST_CASE("normal form of the degenerate relation") {
  const NormalForm a = normal_form(state_of_word(3, {1, 1, 2}));
  const NormalForm b = normal_form(state_of_word(3, {1, 2, 1}));
  CHECK(a.state.word == b.state.word);
  CHECK(a.state.constraints.empty());
  CHECK(b.state.constraints.empty());
}

TEST_CASE("normal form of 132 and 312") {
  const NormalForm a = normal_form(state_of_word(3, {1, 3, 2}));
  const NormalForm b = normal_form(state_of_word(3, {3, 1, 2}));
  CHECK(a.state.word == b.state.word);
  CHECK(to_string(a.state.word) == "U(e3-e1,-1)(s0) U(e3-e2,-1)(s1)");
  CHECK(a.state.constraints == std::set<Symbol>{0, 1});
  CHECK(b.state.constraints.empty());
}

TEST_CASE("normal form of the empty word") {
  const NormalForm e = normal_form(state_of_word(3, {}));
  CHECK(e.state.word.empty());
  CHECK(e.trace.empty());
}

TEST_CASE("traces are sound") {
  for (int len = 1; len <= 4; ++len) {
    for (const Word& w : all_words(3, len)) {
      const RewriteState s = state_of_word(3, {w.letters().begin(), w.letters().end()});
      const NormalForm nf = normal_form(s);
      const SoundnessReport r = check_trace(s, nf.trace, 5, 6, 17);
      CHECK(r.failures == 0);
    }
  }
}

TEST_CASE("normal form families lie in the image") {
  for (int len = 1; len <= 3; ++len) {
    for (const Word& w : all_words(3, len)) {
      const RewriteState s = state_of_word(3, {w.letters().begin(), w.letters().end()});
      const NormalForm nf = normal_form(s);
      const ImageSet img = image_points(w, ImageOptions{.p = 3});
      const int precision = default_precision(Gallery::of_word(w)) + 4;
      for (const LatticeRep& z : family_image(nf.state.word, nf.state.target, nf.state.constraints, 3, precision)) {
        CHECK(img.contains(z));
      }
      // Unconstrained normal forms describe the whole image.
      if (nf.state.constraints.empty()) {
        CHECK(family_image(nf.state.word, nf.state.target, {}, 3, precision) == img);
      }
    }
  }
}
