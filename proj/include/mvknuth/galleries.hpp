#pragma once

#include <string>
#include <vector>

#include "mvknuth/roots.hpp"
#include "mvknuth/tableaux.hpp"
#include "mvknuth/words.hpp"

namespace mvknuth {

/// A sequence of strictly increasing index tuples (i_1 < ... < i_d), 1 <= d <= n.
class Gallery {
 public:
  Gallery() = default;
  Gallery(int n, std::vector<std::vector<int>> steps);

  /// The word viewed as a gallery of type (1,...,1).
  static Gallery of_word(const Word& w);

  int rank() const { return n_; }
  const std::vector<std::vector<int>>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  std::vector<int> type() const;

  friend bool operator==(const Gallery&, const Gallery&) = default;
  friend auto operator<=>(const Gallery&, const Gallery&) = default;

 private:
  int n_ = 1;
  std::vector<std::vector<int>> steps_;
};

/// Vertices mu_0 = 0, mu_j = mu_{j-1} + eps_{i_j}.
using Polyline = std::vector<Coweight>;

Gallery gallery_of_key(const KeyTableau& t);
KeyTableau key_of_gallery(const Gallery& g);

/// Flattening of the steps.
Word word_of_gallery(const Gallery& g);

Polyline polyline(const Gallery& g);
/// Last polyline vertex.
Coweight coweight_of(const Gallery& g);

/// lambda = sum of omega_{d_j} over the type.
Coweight dominant_coweight(int n, const std::vector<int>& type);

/// Steps (1, 2, ..., d_j): only 1's in the top row, 2's in the second row, ...
Gallery gamma_zero(int n, const std::vector<int>& type);

/// The gallery of the given type all of whose vertices are vertices of the fundamental
/// alcove. Found step by step; each step is required to have exactly one admissible choice.
Gallery wrapped_gallery(int n, const std::vector<int>& type);

struct Tail {
  Gallery gallery;   ///< steps k+1..r
  Polyline own;      ///< polyline of the tail, starting at 0
  Polyline shifted;  ///< (mu_k, ..., mu_r)
};

/// Tail after vertex k (0 <= k <= r). tail(g, 0) is g itself.
Tail tail(const Gallery& g, std::size_t k);

/// All strictly increasing d-subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> increasing_tuples(int n, int d);

/// All compositions of `total` with parts in 1..n.
std::vector<std::vector<int>> all_types(int n, int total);

/// Every gallery of the given type.
std::vector<Gallery> all_galleries(int n, const std::vector<int>& type);

}  // namespace mvknuth
