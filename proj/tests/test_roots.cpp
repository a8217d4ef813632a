#include "doctest.h"
#include "mvknuth/errors.hpp"
#include "mvknuth/roots.hpp"

#include <random>

using namespace mvknuth;

namespace {
Coweight cw(std::vector<int> v) { return Coweight(std::move(v)); }
}  // namespace

TEST_CASE("pairing examples") {
  CHECK(pairing(Root(1, 2), Coweight::epsilon(3, 1)) == 1);
  CHECK(pairing(Root(1, 2), cw({1, 1, 0})) == 0);
  CHECK(pairing(Root(1, 3), cw({2, 1, 2, 2})) == 0);
  CHECK_THROWS_AS(pairing(Root(1, 4), cw({0, 0, 0})), RankMismatch);
}

TEST_CASE("halfspace_sign examples") {
  const auto zero = Coweight::zero(3);
  for (const Root& a : positive_roots(3)) CHECK(halfspace_sign(zero, {a, 0}) == Sign::Zero);
  const auto e1 = Coweight::epsilon(2, 1);
  CHECK(halfspace_sign(e1, {Root(1, 2), 0}) == Sign::Positive);
  CHECK(halfspace_sign(e1, {Root(1, 2), -1}) == Sign::Zero);
  CHECK(halfspace_sign(e1, {Root(2, 1), 0}) == Sign::Negative);
}

TEST_CASE("reflect examples") {
  CHECK(reflect(Coweight::zero(2), {Root(1, 2), 0}) == Coweight::zero(2));
  CHECK(reflect(Coweight::epsilon(2, 1), {Root(1, 2), 0}).same_coords(Coweight::epsilon(2, 2)));
  CHECK(reflect(Coweight::epsilon(2, 1), {Root(1, 2), -1}).same_coords(Coweight::epsilon(2, 1)));
}

TEST_CASE("shift_by_translation examples") {
  const AffineRoot h{Root(2, 1), 0};
  CHECK(shift_by_translation(h, Coweight::zero(2)) == h);
  CHECK(shift_by_translation(h, Coweight::epsilon(2, 1)) == AffineRoot{Root(2, 1), -1});
  const auto mu = cw({3, -1, 2});
  const AffineRoot g{Root(3, 1), 5};
  CHECK(shift_by_translation(shift_by_translation(g, mu), -mu) == g);
}

TEST_CASE("coweight quotient and canonical form") {
  CHECK(cw({1, 1}) == Coweight::zero(2));
  CHECK(cw({3, 5, 4}).canonical().same_coords(cw({0, 2, 1})));
  CHECK(cw({2, 1}) == Coweight::epsilon(2, 1));
  CHECK(CoweightHash{}(cw({2, 1})) == CoweightHash{}(cw({1, 0})));
  CHECK_THROWS_AS(Coweight::zero(0), InvalidValue);
  CHECK_THROWS_AS(Root(2, 2), InvalidValue);
}

TEST_CASE("named coweights and chamber tests") {
  CHECK(Coweight::fundamental(4, 2).same_coords(cw({1, 1, 0, 0})));
  CHECK(Coweight::rho(4).same_coords(cw({3, 2, 1, 0})));
  CHECK(is_dominant(Coweight::rho(4)));
  CHECK_FALSE(is_dominant(Coweight::epsilon(3, 2)));
  for (int d = 0; d < 4; ++d) CHECK(is_alcove_vertex(Coweight::fundamental(4, d)));
  CHECK(is_alcove_vertex(Coweight::fundamental(4, 4)));
  CHECK_FALSE(is_alcove_vertex(Coweight::epsilon(4, 2)));
  CHECK(pairing_with_two_rho(Coweight::fundamental(3, 1)) == 2);
}

TEST_CASE("properties on random coweights") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4), shift(-3, 3), lvl(-3, 3);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> v(static_cast<std::size_t>(n)), moved(static_cast<std::size_t>(n));
      const int s = shift(rng);
      for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = coord(rng);
        moved[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + s;
      }
      const Coweight mu(v), mu_moved(moved);
      std::vector<int> w(static_cast<std::size_t>(n));
      for (auto& x : w) x = coord(rng);
      const Coweight nu(w);
      for (const Root& a : positive_roots(n)) {
        for (const Root& r : {a, a.opposite()}) {
          CHECK(pairing(r, mu) == pairing(r, mu_moved));
          const AffineRoot h{r, lvl(rng)};
          const Coweight image = reflect(mu, h);
          CHECK(reflect(image, h).same_coords(mu));
          CHECK(wall_value(image, h) == -wall_value(mu, h));
          CHECK(halfspace_sign(nu, shift_by_translation(h, mu)) == halfspace_sign(nu + mu, h));
        }
      }
    }
  }
}

TEST_CASE("pairing with two rho") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> v(4);
    for (auto& x : v) x = coord(rng);
    const Coweight mu(v);
    int direct = 0;
    for (const Root& a : positive_roots(4)) direct += pairing(a, mu);
    CHECK(pairing_with_two_rho(mu) == direct);
  }
}
