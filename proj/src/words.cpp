#include "mvknuth/words.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "mvknuth/errors.hpp"
#include "mvknuth/tableaux.hpp"

namespace mvknuth {

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw InvalidValue("alphabet size must be positive");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > n) {
      throw InvalidValue("letter " + std::to_string(letters_[i]) + " at position " + std::to_string(i) +
                         " outside 1.." + std::to_string(n));
    }
  }
}

Coweight Word::content() const { return Coweight::epsilon(n_, letters_); }

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (n_ > 9 && i > 0) os << ',';
    os << letters_[i];
  }
  return os.str();
}

namespace {

// Applies every rule to the window (p, q, r) and collects the replacement windows.
void window_moves(int p, int q, int r, RuleSet rules, std::vector<std::array<int, 3>>& out) {
  // Each rule relates a "left" pattern to a "right" pattern under a condition on x, y, z.
  // Primary:   xzy <-> zxy  when x < y <= z;   yzx <-> yxz  when x <= y < z.
  // Alternate: yzx <-> yxz  when x < y <= z;   xzy <-> zxy  when x <= y < z.
  const bool primary = rules == RuleSet::Primary;
  auto strict_low = [](int x, int y, int z) { return x < y && y <= z; };
  auto strict_high = [](int x, int y, int z) { return x <= y && y < z; };
  auto cond_xzy = [&](int x, int y, int z) { return primary ? strict_low(x, y, z) : strict_high(x, y, z); };
  auto cond_yzx = [&](int x, int y, int z) { return primary ? strict_high(x, y, z) : strict_low(x, y, z); };

  // window read as xzy -> zxy
  if (cond_xzy(p, r, q)) out.push_back({q, p, r});
  // window read as zxy -> xzy
  if (cond_xzy(q, r, p)) out.push_back({q, p, r});
  // window read as yzx -> yxz
  if (cond_yzx(r, p, q)) out.push_back({p, r, q});
  // window read as yxz -> yzx
  if (cond_yzx(q, p, r)) out.push_back({p, r, q});
}

}  // namespace

WordSet knuth_moves(const Word& w, RuleSet rules) {
  WordSet out;
  const auto letters = w.letters();
  std::vector<std::array<int, 3>> windows;
  for (std::size_t i = 0; i + 2 < letters.size(); ++i) {
    windows.clear();
    window_moves(letters[i], letters[i + 1], letters[i + 2], rules, windows);
    for (const auto& win : windows) {
      std::vector<int> v(letters.begin(), letters.end());
      std::copy(win.begin(), win.end(), v.begin() + static_cast<std::ptrdiff_t>(i));
      out.emplace(w.rank(), std::move(v));
    }
  }
  return out;
}

WordSet knuth_class(const Word& w, RuleSet rules) {
  WordSet seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    Word u = std::move(frontier.front());
    frontier.pop_front();
    for (const Word& v : knuth_moves(u, rules)) {
      if (seen.insert(v).second) frontier.push_back(v);
    }
  }
  return seen;
}

bool knuth_equivalent(const Word& u, const Word& w, EquivalenceMethod method) {
  if (u.rank() != w.rank()) throw RankMismatch(u.rank(), w.rank());
  if (u.size() != w.size()) return false;
  if (method == EquivalenceMethod::Fingerprint) return ssyt_of_word(u) == ssyt_of_word(w);
  return knuth_class(u).contains(w);
}

Word concat(const Word& u, const Word& w) {
  if (u.rank() != w.rank()) throw RankMismatch(u.rank(), w.rank());
  std::vector<int> v(u.letters().begin(), u.letters().end());
  v.insert(v.end(), w.letters().begin(), w.letters().end());
  return Word(u.rank(), std::move(v));
}

Word reverse(const Word& w) {
  std::vector<int> v(w.letters().rbegin(), w.letters().rend());
  return Word(w.rank(), std::move(v));
}

std::vector<Word> all_words(int n, int length) {
  std::vector<Word> out;
  std::vector<int> v(static_cast<std::size_t>(length), 1);
  while (true) {
    out.emplace_back(n, v);
    int i = length - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == n) v[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<WordSet> all_knuth_classes(int n, int length, RuleSet rules) {
  std::vector<WordSet> classes;
  WordSet assigned;
  for (const Word& w : all_words(n, length)) {
    if (assigned.contains(w)) continue;
    WordSet cls = knuth_class(w, rules);
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace mvknuth
