#include "doctest.h"
#include "mvknuth/errors.hpp"
#include "mvknuth/tableaux.hpp"
#include "mvknuth/words.hpp"

#include <map>

using namespace mvknuth;

namespace {
Word w3(std::vector<int> v) { return Word(3, std::move(v)); }
}  // namespace

TEST_CASE("knuth_moves examples") {
  CHECK(knuth_moves(w3({1, 3, 2})).contains(w3({3, 1, 2})));
  CHECK(knuth_moves(w3({})).empty());
  CHECK(knuth_moves(w3({1, 1, 2})) == WordSet{w3({1, 2, 1})});
}

TEST_CASE("knuth_class examples") {
  CHECK(knuth_class(w3({1, 3, 2})).contains(w3({3, 1, 2})));
  CHECK(knuth_class(w3({})) == WordSet{w3({})});
  CHECK(knuth_class(w3({1, 2, 3})) == WordSet{w3({1, 2, 3})});
}

TEST_CASE("knuth_equivalent examples") {
  for (auto m : {EquivalenceMethod::Bfs, EquivalenceMethod::Fingerprint}) {
    CHECK(knuth_equivalent(w3({1, 3, 2}), w3({3, 1, 2}), m));
    CHECK(knuth_equivalent(w3({2, 1, 3}), w3({2, 1, 3}), m));
    CHECK_FALSE(knuth_equivalent(Word(2, {1, 2}), Word(2, {2, 1}), m));
  }
  CHECK_THROWS_AS(knuth_equivalent(Word(2, {1}), Word(3, {1}), EquivalenceMethod::Bfs), RankMismatch);
}

TEST_CASE("word validation and text") {
  CHECK_THROWS_AS(Word(3, {4}), InvalidValue);
  CHECK(w3({1, 3, 2}).to_string() == "132");
  CHECK(Word(12, {1, 12}).to_string() == "1,12");
}

TEST_CASE("concat and reverse") {
  const Word w = w3({3, 2});
  CHECK(concat(w3({}), w) == w);
  CHECK(concat(w3({1}), w) == w3({1, 3, 2}));
  CHECK(reverse(w3({1, 3, 2})) == w3({2, 3, 1}));
  CHECK(reverse(reverse(w3({1, 3, 2, 2}))) == w3({1, 3, 2, 2}));
}

TEST_CASE("moves preserve content and are symmetric") {
  for (int n = 1; n <= 4; ++n) {
    for (int len = 0; len <= 5; ++len) {
      if (n == 4 && len == 5) continue;
      for (const Word& w : all_words(n, len)) {
        for (auto rules : {RuleSet::Primary, RuleSet::Alternate}) {
          for (const Word& u : knuth_moves(w, rules)) {
            CHECK(u.content().same_coords(w.content()));
            CHECK(knuth_moves(u, rules).contains(w));
          }
        }
      }
    }
  }
}

TEST_CASE("classes partition words of fixed length") {
  for (int len = 0; len <= 4; ++len) {
    std::size_t total = 0;
    WordSet seen;
    for (const WordSet& cls : all_knuth_classes(3, len)) {
      total += cls.size();
      seen.insert(cls.begin(), cls.end());
    }
    CHECK(total == seen.size());
    CHECK(total == all_words(3, len).size());
  }
}

TEST_CASE("plactic monoid: concatenation respects classes") {
  for (int lu = 0; lu <= 3; ++lu) {
    for (int lw = 0; lw + lu <= 3; ++lw) {
      for (const Word& u : all_words(3, lu)) {
        for (const Word& w : all_words(3, lw)) {
          const WordSet reference = knuth_class(concat(u, w));
          for (const Word& u2 : knuth_class(u)) {
            for (const Word& w2 : knuth_class(w)) CHECK(reference.contains(concat(u2, w2)));
          }
        }
      }
    }
  }
}

TEST_CASE("reversal maps primary classes onto alternate classes") {
  for (int len = 0; len <= 4; ++len) {
    for (const Word& w : all_words(3, len)) {
      WordSet reversed;
      for (const Word& u : knuth_class(w, RuleSet::Primary)) reversed.insert(reverse(u));
      CHECK(reversed == knuth_class(reverse(w), RuleSet::Alternate));
    }
  }
}

TEST_CASE("the two rule sets differ only in degenerate windows") {
  // On words with distinct letters the conventions coincide.
  CHECK(knuth_class(w3({2, 1, 3}), RuleSet::Primary) == knuth_class(w3({2, 1, 3}), RuleSet::Alternate));
  CHECK(knuth_class(w3({1, 1, 2}), RuleSet::Primary) != knuth_class(w3({1, 1, 2}), RuleSet::Alternate));
}

TEST_CASE("bfs and fingerprint agree") {
  for (int n = 1; n <= 4; ++n) {
    for (int len = 0; len <= 5; ++len) {
      std::map<KeyTableau, WordSet> by_print;
      for (const Word& w : all_words(n, len)) by_print[ssyt_of_word(w)].insert(w);
      for (const auto& [print, words] : by_print) CHECK(knuth_class(*words.begin()) == words);
    }
  }
}
