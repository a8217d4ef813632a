#include "mvknuth/cells.hpp"

#include <algorithm>
#include <sstream>

#include "mvknuth/errors.hpp"

namespace mvknuth {

namespace {

bool contains(const std::vector<int>& step, int x) { return std::binary_search(step.begin(), step.end(), x); }

// Change of (eps_a - eps_b, .) along a step.
int slope(const Root& alpha, const std::vector<int>& step) {
  return (contains(step, alpha.a) ? 1 : 0) - (contains(step, alpha.b) ? 1 : 0);
}

// The level k with mu on H_{alpha,k}.
AffineRoot wall_through(const Coweight& mu, const Root& alpha) { return AffineRoot{alpha, -pairing(alpha, mu)}; }

void check_vertex(const Gallery& g, std::size_t k) {
  if (k > g.length()) throw InvalidValue("vertex index " + std::to_string(k) + " out of range");
}

}  // namespace

std::vector<AffineRoot> FactorWord::roots() const {
  std::vector<AffineRoot> out;
  for (const auto& f : factors) out.push_back(f.root);
  return out;
}

std::set<Symbol> FactorWord::symbols() const {
  std::set<Symbol> out;
  for (const auto& f : factors) {
    auto s = f.param.symbols();
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::vector<AffineRoot> psi_set_at(const Coweight& start, const std::vector<int>& step) {
  std::vector<AffineRoot> out;
  for (const Root& alpha : positive_roots(start.rank())) {
    if (slope(alpha, step) > 0) out.push_back(wall_through(start, alpha));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineRoot> psi_set(const Gallery& g, std::size_t j) {
  if (j >= g.length()) throw InvalidValue("segment index " + std::to_string(j) + " out of range");
  return psi_set_at(polyline(g)[j], g.steps()[j]);
}

CrossingReport crossing_report(const Gallery& g) {
  CrossingReport report;
  report.rank = g.rank();
  report.vertices = polyline(g);
  for (std::size_t j = 0; j < g.length(); ++j) {
    std::vector<WallCrossing> walls;
    for (const Root& alpha : positive_roots(g.rank())) {
      const int s = slope(alpha, g.steps()[j]);
      const auto dir = s > 0 ? CrossingDirection::Positive
                             : (s < 0 ? CrossingDirection::Negative : CrossingDirection::Contained);
      walls.push_back({wall_through(report.vertices[j], alpha), dir});
    }
    report.segments.push_back(std::move(walls));
  }
  return report;
}

CrossingCounts crossing_counts(const Gallery& g) {
  CrossingCounts counts;
  for (const auto& segment : crossing_report(g).segments) {
    for (const auto& c : segment) {
      if (c.direction == CrossingDirection::Positive) ++counts.positive;
      if (c.direction == CrossingDirection::Negative) ++counts.negative;
    }
  }
  return counts;
}

int dimension_by_pairing(const Gallery& g) {
  const int twice = pairing_with_two_rho(dominant_coweight(g.rank(), g.type()) + coweight_of(g));
  if (twice % 2 != 0) throw InternalError("(lambda + mu, 2 rho) is odd");
  return twice / 2;
}

int cell_dimension(const Gallery& g) {
  const int positive = crossing_counts(g).positive;
  const int by_pairing = dimension_by_pairing(g);
  if (positive != by_pairing) {
    throw InternalError("positive crossings " + std::to_string(positive) + " differ from pairing formula " +
                        std::to_string(by_pairing));
  }
  return positive;
}

std::map<std::pair<int, int>, int> p_offsets(const Gallery& g, std::size_t k) {
  check_vertex(g, k);
  const Coweight mu = polyline(g)[k];
  std::map<std::pair<int, int>, int> out;
  for (const Root& alpha : positive_roots(g.rank())) out[{alpha.a, alpha.b}] = pairing(alpha, mu);
  return out;
}

FactorWord factor_word(const Gallery& g) {
  FactorWord out;
  out.rank = g.rank();
  const Polyline line = polyline(g);
  Symbol next = 0;
  for (std::size_t k = 0; k < g.length(); ++k) {
    const auto& step = g.steps()[k];
    const Coweight& mu = line[k];
    for (int a : step) {
      for (int m = a + 1; m <= g.rank(); ++m) {
        if (contains(step, m)) continue;
        // (eps_a - eps_m, -p) is in psi; the factor is its opposite.
        out.factors.push_back(
            Factor{AffineRoot{Root(m, a), mu[a] - mu[m]}, Expr::symbol(next++), static_cast<int>(k)});
      }
    }
  }
  return out;
}

FactorWord refine_to_word(const Gallery& g) { return factor_word(Gallery::of_word(word_of_gallery(g))); }

bool stabilizer_contains(const Coweight& nu, const AffineRoot& h) { return wall_value(nu, h) >= 0; }

bool segment_stabilizer_contains(const Coweight& from, const Coweight& to, const AffineRoot& h) {
  return stabilizer_contains(from, h) && stabilizer_contains(to, h);
}

std::string to_string(const FactorWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    if (i > 0) os << ' ';
    os << "U" << to_string(w.factors[i].root) << "(" << w.factors[i].param.to_string() << ')';
  }
  return os.str();
}

}  // namespace mvknuth
