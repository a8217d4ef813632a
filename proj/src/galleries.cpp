#include "mvknuth/galleries.hpp"

#include <functional>

#include "mvknuth/errors.hpp"

namespace mvknuth {

Gallery::Gallery(int n, std::vector<std::vector<int>> steps) : n_(n), steps_(std::move(steps)) {
  if (n < 1) throw InvalidValue("alphabet size must be positive");
  for (std::size_t j = 0; j < steps_.size(); ++j) {
    const auto& s = steps_[j];
    if (s.empty() || static_cast<int>(s.size()) > n) {
      throw InvalidValue("step " + std::to_string(j) + " must hold between 1 and n indices");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n) throw InvalidValue("step " + std::to_string(j) + " has an index outside 1..n");
      if (i > 0 && s[i - 1] >= s[i]) throw InvalidValue("step " + std::to_string(j) + " is not strictly increasing");
    }
  }
}

Gallery Gallery::of_word(const Word& w) {
  std::vector<std::vector<int>> steps;
  for (int letter : w.letters()) steps.push_back({letter});
  return Gallery(w.rank(), std::move(steps));
}

std::vector<int> Gallery::type() const {
  std::vector<int> t;
  for (const auto& s : steps_) t.push_back(static_cast<int>(s.size()));
  return t;
}

Gallery gallery_of_key(const KeyTableau& t) { return Gallery(t.rank(), t.columns()); }

KeyTableau key_of_gallery(const Gallery& g) { return KeyTableau(g.rank(), g.steps()); }

Word word_of_gallery(const Gallery& g) {
  std::vector<int> letters;
  for (const auto& s : g.steps()) letters.insert(letters.end(), s.begin(), s.end());
  return Word(g.rank(), std::move(letters));
}

Polyline polyline(const Gallery& g) {
  Polyline out{Coweight::zero(g.rank())};
  for (const auto& s : g.steps()) out.push_back(out.back() + Coweight::epsilon(g.rank(), s));
  return out;
}

Coweight coweight_of(const Gallery& g) { return polyline(g).back(); }

Coweight dominant_coweight(int n, const std::vector<int>& type) {
  Coweight lambda = Coweight::zero(n);
  for (int d : type) lambda += Coweight::fundamental(n, d);
  return lambda;
}

Gallery gamma_zero(int n, const std::vector<int>& type) {
  std::vector<std::vector<int>> steps;
  for (int d : type) {
    if (d < 1 || d > n) throw InvalidValue("type entries must lie in 1..n");
    std::vector<int> s(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    steps.push_back(std::move(s));
  }
  return Gallery(n, std::move(steps));
}

Gallery wrapped_gallery(int n, const std::vector<int>& type) {
  std::vector<std::vector<int>> steps;
  Coweight vertex = Coweight::zero(n);
  for (std::size_t j = 0; j < type.size(); ++j) {
    const int d = type[j];
    if (d < 1 || d > n) throw InvalidValue("type entries must lie in 1..n");
    std::vector<std::vector<int>> admissible;
    for (auto& s : increasing_tuples(n, d)) {
      if (is_alcove_vertex(vertex + Coweight::epsilon(n, s))) admissible.push_back(std::move(s));
    }
    if (admissible.size() != 1) {
      throw InternalError("wrapped gallery step " + std::to_string(j) + " has " +
                          std::to_string(admissible.size()) + " admissible choices");
    }
    vertex += Coweight::epsilon(n, admissible.front());
    steps.push_back(std::move(admissible.front()));
  }
  return Gallery(n, std::move(steps));
}

Tail tail(const Gallery& g, std::size_t k) {
  if (k > g.length()) throw InvalidValue("tail index out of range");
  std::vector<std::vector<int>> rest(g.steps().begin() + static_cast<std::ptrdiff_t>(k), g.steps().end());
  Gallery tg(g.rank(), std::move(rest));
  Polyline full = polyline(g);
  Polyline shifted(full.begin() + static_cast<std::ptrdiff_t>(k), full.end());
  return Tail{tg, polyline(tg), std::move(shifted)};
}

std::vector<std::vector<int>> increasing_tuples(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::vector<int>> all_types(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int d = 1; d <= std::min(n, remaining); ++d) {
      cur.push_back(d);
      rec(remaining - d);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

std::vector<Gallery> all_galleries(int n, const std::vector<int>& type) {
  std::vector<std::vector<std::vector<int>>> choices;
  for (int d : type) choices.push_back(increasing_tuples(n, d));
  std::vector<Gallery> out;
  std::vector<std::vector<int>> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == type.size()) {
      out.emplace_back(n, cur);
      return;
    }
    for (const auto& s : choices[j]) {
      cur.push_back(s);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace mvknuth
