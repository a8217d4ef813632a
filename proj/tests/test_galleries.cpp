#include "doctest.h"
#include "mvknuth/errors.hpp"
#include "mvknuth/galleries.hpp"

using namespace mvknuth;

namespace {
Coweight cw(std::vector<int> v) { return Coweight(std::move(v)); }
}  // namespace

TEST_CASE("gallery and key tableau") {
  const Gallery g(7, {{3, 6, 7}, {2}, {2, 3, 4}, {1, 4}});
  const KeyTableau t = key_of_gallery(g);
  CHECK(t.columns() == g.steps());
  CHECK(render(t) == "1 2 2 3\n4 3   6\n  4   7\n");
  CHECK(gallery_of_key(t) == g);

  const KeyTableau t1(5, {{1, 2, 3, 4}, {2, 3}, {1, 2, 3, 4}, {5}});
  CHECK(gallery_of_key(t1) == Gallery(5, {{1, 2, 3, 4}, {2, 3}, {1, 2, 3, 4}, {5}}));
  CHECK(key_of_gallery(Gallery(3, {{2}})) == KeyTableau(3, {{2}}));
  CHECK_THROWS_AS(Gallery(3, {{2, 1}}), InvalidValue);
}

TEST_CASE("word_of_gallery") {
  CHECK(word_of_gallery(Gallery(4, {{3}, {1, 4}, {1, 2, 3, 4}})) == Word(4, {3, 1, 4, 1, 2, 3, 4}));
  CHECK(word_of_gallery(Gallery(3, {})).empty());
  const Word w(3, {2, 3, 1, 1});
  CHECK(word_of_gallery(Gallery::of_word(w)) == w);
}

TEST_CASE("polyline") {
  const auto one = polyline(Gallery(2, {{1}}));
  REQUIRE(one.size() == 2);
  CHECK(one[0].same_coords(cw({0, 0})));
  CHECK(one[1].same_coords(cw({1, 0})));
  CHECK(polyline(Gallery(2, {})).size() == 1);
  const auto line = polyline(Gallery(4, {{3}, {1, 4}, {1, 2, 3, 4}}));
  REQUIRE(line.size() == 4);
  CHECK(line[1].same_coords(cw({0, 0, 1, 0})));
  CHECK(line[2].same_coords(cw({1, 0, 1, 1})));
  CHECK(line[3].same_coords(cw({2, 1, 2, 2})));
}

TEST_CASE("distinguished galleries") {
  CHECK(gamma_zero(3, {2, 3}) == Gallery(3, {{1, 2}, {1, 2, 3}}));
  CHECK(wrapped_gallery(2, {1, 1}) == Gallery(2, {{1}, {2}}));
  CHECK(wrapped_gallery(2, {1, 1, 1}) == Gallery(2, {{1}, {2}, {1}}));
  const Gallery w = wrapped_gallery(4, {2, 3, 1, 2});
  for (const Coweight& v : polyline(w)) CHECK(is_alcove_vertex(v));
}

TEST_CASE("wrapped gallery is the only one with alcove vertices") {
  for (int n = 1; n <= 4; ++n) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& type : all_types(n, total)) {
        int count = 0;
        for (const Gallery& g : all_galleries(n, type)) {
          bool all_vertices = true;
          for (const Coweight& v : polyline(g)) all_vertices = all_vertices && is_alcove_vertex(v);
          count += all_vertices ? 1 : 0;
          if (all_vertices) CHECK(g == wrapped_gallery(n, type));
        }
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("tails") {
  const Gallery g(4, {{3}, {1, 4}, {1, 2, 3, 4}});
  const Tail t0 = tail(g, 0);
  CHECK(t0.gallery == g);
  CHECK(t0.own == polyline(g));
  const Tail tr = tail(g, 3);
  CHECK(tr.gallery.length() == 0);
  CHECK(tr.own.size() == 1);
  CHECK(tr.shifted.front().same_coords(cw({2, 1, 2, 2})));
  const Tail t1 = tail(g, 1);
  CHECK(t1.gallery == Gallery(4, {{1, 4}, {1, 2, 3, 4}}));
  CHECK(t1.shifted.front().same_coords(cw({0, 0, 1, 0})));
  for (std::size_t j = 0; j < t1.own.size(); ++j) CHECK(t1.shifted[j].same_coords(t1.own[j] + t1.shifted[0]));
  CHECK_THROWS_AS(tail(g, 4), InvalidValue);
}

TEST_CASE("round trips and coweight over the full range") {
  for (int n = 1; n <= 4; ++n) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& type : all_types(n, total)) {
        for (const Gallery& g : all_galleries(n, type)) {
          const KeyTableau t = key_of_gallery(g);
          CHECK(gallery_of_key(t) == g);
          CHECK(key_of_gallery(gallery_of_key(t)) == t);
          CHECK(word_of_gallery(g) == reading_word(t));
          CHECK(content(t).same_coords(coweight_of(g)));
          CHECK(g.type() == type);
        }
      }
    }
  }
}
