#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mvknuth/expr.hpp"
#include "mvknuth/galleries.hpp"
#include "mvknuth/roots.hpp"

namespace mvknuth {

enum class CrossingDirection { Positive, Negative, Contained };

struct WallCrossing {
  AffineRoot wall;  // alpha positive, mu_j on the wall
  CrossingDirection direction;

  friend bool operator==(const WallCrossing&, const WallCrossing&) = default;
};

/// For each segment [mu_j, mu_{j+1}], every wall H_{alpha,k} (alpha positive)
/// through mu_j together with how the segment leaves it.
struct CrossingReport {
  int rank = 1;
  std::vector<Coweight> vertices;
  std::vector<std::vector<WallCrossing>> segments;
};

/// One root subgroup factor U_h(param). `vertex` is the polyline vertex the
/// factor belongs to.
struct Factor {
  AffineRoot root;
  Expr param;
  int vertex = 0;

  /// The vertex is bookkeeping only; two factors are equal when they give the same element.
  friend bool operator==(const Factor& x, const Factor& y) { return x.root == y.root && x.param == y.param; }
};

struct FactorWord {
  int rank = 1;
  std::vector<Factor> factors;

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }
  /// Affine roots in order.
  std::vector<AffineRoot> roots() const;
  std::set<Symbol> symbols() const;

  friend bool operator==(const FactorWord&, const FactorWord&) = default;
};

/// Walls through `start` that the segment start -> start + eps_step does not keep in
/// the closed negative half-space.
std::vector<AffineRoot> psi_set_at(const Coweight& start, const std::vector<int>& step);

std::vector<AffineRoot> psi_set(const Gallery& g, std::size_t j);

CrossingReport crossing_report(const Gallery& g);

struct CrossingCounts {
  int positive = 0;
  int negative = 0;
  int total() const { return positive + negative; }
};

CrossingCounts crossing_counts(const Gallery& g);

/// (lambda + mu_r, rho) with lambda the dominant coweight of the type.
int dimension_by_pairing(const Gallery& g);

/// The number of positive crossings. Throws InternalError if it disagrees with
/// dimension_by_pairing.
int cell_dimension(const Gallery& g);

/// p[(l, l')] = (eps_l - eps_l', mu_k) for l < l'.
std::map<std::pair<int, int>, int> p_offsets(const Gallery& g, std::size_t k);

/// Product over the vertices of U_{(-alpha,-k)}(s) for (alpha,k) in psi. Within a vertex
/// the factors are grouped by the letters of the step in increasing order, and for each
/// letter a the targets m > a that are not later letters of the step run upward.
/// Parameters are fresh symbols s0, s1, ... in order.
FactorWord factor_word(const Gallery& g);

/// factor_word of the word gallery of g.
FactorWord refine_to_word(const Gallery& g);

/// (alpha, nu) + k >= 0.
bool stabilizer_contains(const Coweight& nu, const AffineRoot& h);

/// Both endpoints of the segment lie in the closed positive half-space.
bool segment_stabilizer_contains(const Coweight& from, const Coweight& to, const AffineRoot& h);

std::string to_string(const FactorWord& w);

}  // namespace mvknuth
