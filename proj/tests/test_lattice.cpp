#include "doctest.h"
#include "mvknuth/errors.hpp"
#include "mvknuth/lattice.hpp"

#include <algorithm>
#include <random>

using namespace mvknuth;

namespace {

Coweight cw(std::vector<int> v) { return Coweight(std::move(v)); }

// The matrix inverse of point(mu), for the same coordinate representative.
TruncMatrix point_inverse(const Coweight& mu, int p, int precision) {
  const Coweight rep = mu.canonical();
  TruncMatrix m(mu.rank(), p, precision);
  for (int i = 0; i < mu.rank(); ++i) m.set_coeff(i, i, rep.coords()[static_cast<std::size_t>(i)], 1);
  return m;
}

bool fixes(const AffineRoot& h, const Coweight& mu, int p, int precision) {
  const LatticeRep base = canonical(point(mu, p, precision));
  for (int c = 0; c < p; ++c) {
    if (canonical(root_matrix(mu.rank(), h, c, p, precision) * point(mu, p, precision)) != base) return false;
  }
  return true;
}

// A random matrix over F_p[t] with constant nonzero determinant, built from elementary
// operations with polynomial multipliers.
TruncMatrix random_unit(int n, int p, int precision, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(0, p - 1), unit(1, p - 1), idx(0, n - 1), deg(0, 2);
  TruncMatrix k = TruncMatrix::identity(n, p, precision);
  for (int i = 0; i < n; ++i) {
    TruncMatrix d = TruncMatrix::identity(n, p, precision);
    d.set_coeff(i, i, 0, unit(rng));
    k = k * d;
  }
  for (int step = 0; step < 4; ++step) {
    const int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    k.add_column_multiple(a, b, coef(rng), deg(rng));
  }
  return k;
}

}  // namespace

TEST_CASE("point examples") {
  CHECK(canonical(point(Coweight::zero(3), 2, 2)) == canonical(TruncMatrix::identity(3, 2, 2)));
  const TruncMatrix e1 = point(Coweight::epsilon(2, 1), 2, 2);
  CHECK(e1.coeff(0, 0, -1) == 1);
  CHECK(e1.coeff(1, 1, 0) == 1);
  CHECK(point(cw({1, 1}), 2, 2) == point(Coweight::zero(2), 2, 2));
  CHECK_THROWS_AS(point(cw({0, 5}), 2, 2), PrecisionError);
}

TEST_CASE("root_matrix examples") {
  const AffineRoot h{Root(2, 1), 0};
  CHECK(root_matrix(2, h, 0, 2, 2) == TruncMatrix::identity(2, 2, 2));
  const TruncMatrix u = root_matrix(2, h, 1, 2, 2);
  CHECK(u.coeff(1, 0, 0) == 1);
  CHECK(u.coeff(0, 1, 0) == 0);
  // point(mu)^{-1} U_{(beta,l)} point(mu) = U_{(beta, l + (beta,mu))}
  const TruncMatrix conj = point_inverse(Coweight::epsilon(2, 1), 2, 3) * u * point(Coweight::epsilon(2, 1), 2, 3);
  CHECK(conj == root_matrix(2, {Root(2, 1), -1}, 1, 2, 3));
}

TEST_CASE("conjugation shifts levels") {
  for (int p : {2, 3}) {
    for (const Coweight& mu : {cw({1, 0, 0}), cw({2, 1, 0}), cw({0, 2, 1})}) {
      for (const Root& b : negative_roots(3)) {
        for (int level = -1; level <= 1; ++level) {
          const TruncMatrix lhs =
              point_inverse(mu, p, 6) * root_matrix(3, {b, level}, 1, p, 6) * point(mu, p, 6);
          CHECK(lhs == root_matrix(3, shift_by_translation({b, level}, mu), 1, p, 6));
        }
      }
    }
  }
}

TEST_CASE("canonical examples") {
  const LatticeRep std_lattice = canonical(TruncMatrix::identity(2, 2, 1));
  CHECK(std_lattice.diagonal == std::vector<int>{0, 0});
  TruncMatrix g(2, 2, 2);
  g.set_coeff(0, 0, -1, 1);
  g.set_coeff(1, 1, 0, 1);
  const LatticeRep rep = canonical(g);
  CHECK(rep.diagonal == std::vector<int>{0, 1});
  CHECK(rep.entries[0][0] == std::vector<int>{});
  CHECK(to_string(rep) == "[1 0; 0 t]");
  CHECK_THROWS_AS(canonical(TruncMatrix(2, 2, 1)), InvalidValue);
}

TEST_CASE("canonical is invariant under units and scaling") {
  std::mt19937 rng(3);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 3;
      TruncMatrix g = TruncMatrix::identity(n, p, 12);
      std::uniform_int_distribution<int> idx(0, n - 1), coef(0, p - 1), lvl(-2, 2);
      for (int step = 0; step < 5; ++step) {
        const int a = idx(rng), b = idx(rng);
        if (a != b) g.add_column_multiple(a, b, coef(rng), lvl(rng));
      }
      for (int i = 0; i < n; ++i) g.shift_column(i, lvl(rng));
      const LatticeRep rep = canonical(g);
      CHECK(canonical(g * random_unit(n, p, 12, rng)) == rep);
      TruncMatrix scaled = g;
      for (int i = 0; i < n; ++i) scaled.shift_column(i, 2);
      CHECK(canonical(scaled) == rep);
      CHECK(canonical(to_matrix(rep, 12)) == rep);
      // Reduced form: degrees below the diagonal exponent of the row.
      for (int i = 0; i < n; ++i)
        for (const auto& e : rep.entries[static_cast<std::size_t>(i)])
          CHECK(static_cast<int>(e.size()) == rep.diagonal[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("stabilizer calibration") {
  for (int p : {2, 3}) {
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) {
          const Coweight mu = cw({a, b, c});
          for (const Root& r : positive_roots(3)) {
            for (const Root& beta : {r, r.opposite()}) {
              for (int level = -2; level <= 2; ++level) {
                const AffineRoot h{beta, level};
                CHECK(fixes(h, mu, p, 6) == stabilizer_contains(mu, h));
              }
            }
          }
        }
  }
}

TEST_CASE("image_points examples") {
  ImageOptions opts;
  CHECK(image_points(Word(2, {1}), opts).size() == 2);
  for (int p : {2, 3, 5}) {
    opts.p = p;
    const ImageSet img = image_points(Word(2, {2}), opts);
    REQUIRE(img.size() == 1);
    CHECK(*img.begin() == canonical(point(Coweight::epsilon(2, 2), p, 3)));
  }
  opts.p = 2;
  const ImageSet empty = image_points(Word(3, {}), opts);
  REQUIRE(empty.size() == 1);
  CHECK(empty.begin()->diagonal == std::vector<int>{0, 0, 0});
}

TEST_CASE("budget guard") {
  ImageOptions opts;
  opts.budget = 4;
  CHECK_THROWS_AS(image_points(Word(3, {1, 1}), opts), BudgetExceeded);
}

TEST_CASE("image sizes, precision stability and threads") {
  for (int len = 0; len <= 3; ++len) {
    for (const Word& w : all_words(3, len)) {
      const Gallery g = Gallery::of_word(w);
      ImageOptions opts;
      const ImageSet img = image_points(w, opts);
      CHECK(img.size() <= count_tuples(2, static_cast<std::size_t>(crossing_counts(g).positive)));
      opts.precision = default_precision(g) + 1;
      CHECK(image_points(w, opts) == img);
      opts.precision = 0;
      opts.threads = 3;
      CHECK(image_points(w, opts) == img);
    }
  }
}

TEST_CASE("factor order within a vertex does not matter") {
  for (int total = 1; total <= 3; ++total) {
    for (const auto& type : all_types(3, total)) {
      for (const Gallery& g : all_galleries(3, type)) {
        FactorWord w = factor_word(g);
        const int precision = default_precision(g);
        const ImageSet img = family_image(w, coweight_of(g), {}, 2, precision);
        auto begin = w.factors.begin();
        while (begin != w.factors.end()) {
          auto end = std::find_if(begin, w.factors.end(), [&](const Factor& f) { return f.vertex != begin->vertex; });
          std::reverse(begin, end);
          begin = end;
        }
        CHECK(family_image(w, coweight_of(g), {}, 2, precision) == img);
      }
    }
  }
}

TEST_CASE("images are stable under the negative root subgroups over O") {
  std::mt19937 rng(5);
  for (int len = 1; len <= 3; ++len) {
    for (const Word& w : all_words(3, len)) {
      const ImageSet img = image_points(w);
      const int window = 16;
      std::uniform_int_distribution<int> pick_root(0, 2), level(0, 2), coef(1, 1);
      const auto negatives = negative_roots(3);
      for (const LatticeRep& z : img) {
        for (int trial = 0; trial < 3; ++trial) {
          const AffineRoot h{negatives[static_cast<std::size_t>(pick_root(rng))], level(rng)};
          const LatticeRep moved = canonical(root_matrix(3, h, coef(rng), 2, window) * to_matrix(z, window));
          CHECK(img.contains(moved));
        }
      }
    }
  }
}

TEST_CASE("galleries and their words have the same image (small range)") {
  for (int total = 1; total <= 3; ++total) {
    for (const auto& type : all_types(3, total)) {
      for (const Gallery& g : all_galleries(3, type)) {
        CHECK(image_points(g) == image_points(word_of_gallery(g)));
      }
    }
  }
}
