#include <string>

#include "doctest.h"
#include "mvknuth/errors.hpp"
#include "mvknuth/io.hpp"

using namespace mvknuth;

namespace {

std::size_t offset_of(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.offset;
  }
  FAIL("no parse error");
  return 0;
}

}  // namespace

TEST_CASE("word literals") {
  CHECK(parse_word("132") == Word(3, {1, 3, 2}));
  CHECK(parse_word("1,3,2") == Word(3, {1, 3, 2}));
  CHECK(parse_word(" (1, 3, 2) ") == Word(3, {1, 3, 2}));
  CHECK(parse_word("1 3 2", 4) == Word(4, {1, 3, 2}));
  CHECK(parse_word("10,2") == Word(10, {10, 2}));
  CHECK(parse_word("") == Word(1, {}));
  CHECK(parse_word("()", 3) == Word(3, {}));
  CHECK(parse_word(parse_word("12,3", 12).to_string(), 12) == Word(12, {12, 3}));
}

TEST_CASE("word literal errors cite byte offsets") {
  CHECK(offset_of([] { parse_word("13x2"); }) == 2);
  CHECK(offset_of([] { parse_word("1,,2"); }) == 2);
  CHECK(offset_of([] { parse_word("1,4", 3); }) == 2);
  CHECK(offset_of([] { parse_word("(12"); }) == 0);
  CHECK(offset_of([] { parse_word("1,2,"); }) == 4);
  CHECK(offset_of([] { parse_word("102", 3); }) == 1);
}

TEST_CASE("gallery literals") {
  const Gallery g(4, {{3}, {1, 4}, {1, 2, 3, 4}});
  CHECK(parse_gallery("3|1,4|1,2,3,4") == g);
  CHECK(parse_gallery("3|14|1234") == g);
  CHECK(parse_gallery("3 | 1 4 | 1 2 3 4", 4) == g);
  CHECK(parse_gallery(R"({"n": 4, "steps": [[3], [1, 4], [1, 2, 3, 4]]})") == g);
  CHECK(parse_gallery("1", 2) == Gallery(2, {{1}}));
  CHECK(parse_gallery("", 3).length() == 0);
  CHECK(offset_of([] { parse_gallery("3||1"); }) == 2);
  CHECK(offset_of([] { parse_gallery("3|41"); }) == 3);
  CHECK(offset_of([] { parse_gallery("3|1,5", 4); }) == 4);
  CHECK(offset_of([] { parse_gallery("{\"n\": 4,"); }) > 0);
  CHECK_THROWS_AS(parse_gallery(R"({"n": 4})"), ParseError);
  CHECK_THROWS_AS(parse_gallery(R"({"n": 4, "steps": [[1]]})", 3), RankMismatch);
}

TEST_CASE("json round trips") {
  const Word w(3, {1, 3, 2});
  CHECK(Json(w).get<Word>() == w);
  const Coweight mu({2, 0, 1});
  CHECK(Json(mu).get<Coweight>().same_coords(mu));
  const AffineRoot h{Root(3, 1), -2};
  CHECK(Json(h).get<AffineRoot>() == h);
  const KeyTableau t = ssyt_of_word(w);
  CHECK(Json(t).get<KeyTableau>() == t);
  const Gallery g(4, {{3}, {1, 4}, {1, 2, 3, 4}});
  CHECK(Json(g).get<Gallery>() == g);
  const Expr e = Expr::constant(-2) * Expr::symbol(0) * Expr::symbol(3) * Expr::symbol(3) + Expr::constant(5);
  CHECK(Json(e).get<Expr>() == e);
  const FactorWord fw = factor_word(g);
  const FactorWord back = Json(fw).get<FactorWord>();
  CHECK(back == fw);
  for (std::size_t i = 0; i < fw.size(); ++i) CHECK(back.factors[i].vertex == fw.factors[i].vertex);
}

TEST_CASE("json survives text serialization") {
  const Gallery g = Gallery::of_word(Word(3, {1, 3, 2}));
  const RewriteState s = initial_state(factor_word(g), coweight_of(g));
  const Json j = parse_json(Json(s).dump(2));
  const RewriteState back = j.get<RewriteState>();
  CHECK(back.word == s.word);
  CHECK(back.target == s.target);
  CHECK(back.next_symbol == s.next_symbol);
}

TEST_CASE("lattice points and images") {
  ImageOptions opts;
  opts.p = 3;
  const ImageSet img = image_points(Word(3, {1, 3, 2}), opts);
  const Json j = image_to_json(img);
  CHECK(j["size"] == img.size());
  CHECK(j["p"] == 3);
  CHECK(image_from_json(parse_json(j.dump())) == img);
  for (const LatticeRep& z : img) {
    const Json row = Json(z)["rows"];
    REQUIRE(row.size() == 3);
    CHECK(row[1][0].empty());
  }

  Json bad = Json(*img.begin());
  bad["rows"][1][0] = {1};
  CHECK_THROWS_AS(bad.get<LatticeRep>(), InvalidValue);
  bad = Json(*img.begin());
  bad["rows"][0][0] = {1, 1};
  CHECK_THROWS_AS(bad.get<LatticeRep>(), InvalidValue);
}

TEST_CASE("replay traces round trip") {
  for (const auto& letters : {std::vector<int>{1, 3, 2}, std::vector<int>{1, 2, 1}}) {
    const Gallery g = Gallery::of_word(Word(3, letters));
    const RewriteState s = initial_state(factor_word(g), coweight_of(g));
    const NormalForm nf = normal_form(s);
    const ReplayTrace t{s, nf.trace};
    const ReplayTrace back = parse_json(Json(t).dump()).get<ReplayTrace>();
    REQUIRE(back.steps.size() == t.steps.size());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      CHECK(back.steps[i].action == t.steps[i].action);
      CHECK(back.steps[i].state.word == t.steps[i].state.word);
      CHECK(back.steps[i].state.constraints == t.steps[i].state.constraints);
      CHECK(back.steps[i].preimages.size() == t.steps[i].preimages.size());
    }
    CHECK(back.final_state().word == nf.state.word);
    CHECK(check_trace(back.initial, back.steps, 5, 5, 11).failures == 0);
  }
}

TEST_CASE("reports") {
  const Json cell = cell_report(Gallery(2, {{1}}));
  CHECK(cell["dimension"] == 1);
  CHECK(cell["dimension_by_pairing"] == 1);
  CHECK(cell_report(Gallery(2, {{2}}))["dimension"] == 0);

  const Json c = compare_images(Word(3, {1, 3, 2}), Word(3, {3, 1, 2}));
  CHECK(c["verdict"] == "COMMON_FAMILY");
  CHECK(c["fingerprints_equal"] == true);
  CHECK(c["family"]["source"].is_string());
  const Json d = compare_images(Word(2, {1, 2}), Word(2, {2, 1}));
  CHECK(d["verdict"] == "DISTINCT");
  CHECK(d["family"].is_null());
}

TEST_CASE("polyline svg") {
  const std::string svg = polyline_svg(Gallery(3, {{1}, {1, 3}, {2}}));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(polyline_svg(Gallery(2, {{1}, {2}})).find("<polyline") != std::string::npos);
  CHECK_THROWS_AS(polyline_svg(Gallery(4, {{1}})), InvalidValue);
}
