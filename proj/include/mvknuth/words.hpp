#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mvknuth/roots.hpp"

namespace mvknuth {

/// A finite sequence of letters from the alphabet {1..n}.
class Word {
 public:
  Word() = default;
  Word(int n, std::vector<int> letters);

  int rank() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Multiplicity vector of the letters.
  Coweight content() const;

  /// Compact digits when n <= 9 ("132"), comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

/// Which pair of length-3 rewriting rules generates the equivalence.
///
/// `Primary` is  xzy ~ zxy (x < y <= z)  and  yzx ~ yxz (x <= y < z), matching
/// the column reading word read rightmost column first.
/// `Alternate` is the textbook convention for row/column words read left to
/// right: yzx ~ yxz (x < y <= z)  and  xzy ~ zxy (x <= y < z).
/// The two never mix inside one closure.
enum class RuleSet { Primary, Alternate };

enum class EquivalenceMethod { Bfs, Fingerprint };

using WordSet = std::set<Word>;

/// All words reachable by exactly one rule application at one position, in either direction.
WordSet knuth_moves(const Word& w, RuleSet rules = RuleSet::Primary);

/// Breadth-first closure of `knuth_moves`. No depth bound is needed: every move
/// preserves length and content, so the class is a subset of the rearrangements of w.
WordSet knuth_class(const Word& w, RuleSet rules = RuleSet::Primary);

bool knuth_equivalent(const Word& u, const Word& w, EquivalenceMethod method = EquivalenceMethod::Fingerprint);

Word concat(const Word& u, const Word& w);
Word reverse(const Word& w);

/// Every word of the given length over {1..n}, in lexicographic order.
std::vector<Word> all_words(int n, int length);

/// Partition of all words of the given length into classes (each class sorted, classes
/// ordered by their smallest member).
std::vector<WordSet> all_knuth_classes(int n, int length, RuleSet rules = RuleSet::Primary);

}  // namespace mvknuth
