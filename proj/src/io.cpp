#include "mvknuth/io.hpp"

#include <algorithm>
#include <cctype>

#include "mvknuth/errors.hpp"

namespace mvknuth {

namespace {

struct Token {
  int value;
  std::size_t offset;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Letters of a word or a gallery step. `base` is the offset of `text` in the whole input.
std::vector<Token> parse_letters(std::string_view text, std::size_t base) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && is_space(text[lo])) ++lo;
  while (hi > lo && is_space(text[hi - 1])) --hi;
  if (lo < hi && text[lo] == '(') {
    if (text[hi - 1] != ')') throw ParseError("unbalanced parenthesis", base + lo);
    ++lo;
    --hi;
  } else if (lo < hi && text[hi - 1] == ')') {
    throw ParseError("unbalanced parenthesis", base + hi - 1);
  }
  const std::string_view body = text.substr(lo, hi - lo);

  bool delimited = body.find(',') != std::string_view::npos;
  for (std::size_t i = 0; i < body.size() && !delimited; ++i) delimited = is_space(body[i]);

  std::vector<Token> out;
  if (!delimited) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (!is_digit(body[i])) throw ParseError(std::string("unexpected character '") + body[i] + "'", base + lo + i);
      out.push_back({body[i] - '0', base + lo + i});
    }
    return out;
  }

  std::size_t i = 0;
  bool expect_letter = true;
  while (i < body.size()) {
    const char c = body[i];
    if (is_space(c)) {
      ++i;
    } else if (c == ',') {
      if (expect_letter) throw ParseError("empty letter", base + lo + i);
      expect_letter = true;
      ++i;
    } else if (is_digit(c)) {
      const std::size_t start = i;
      int value = 0;
      while (i < body.size() && is_digit(body[i])) {
        value = value * 10 + (body[i] - '0');
        if (value > 1'000'000) throw ParseError("letter too large", base + lo + start);
        ++i;
      }
      out.push_back({value, base + lo + start});
      expect_letter = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", base + lo + i);
    }
  }
  if (expect_letter && !out.empty()) throw ParseError("trailing comma", base + hi);
  return out;
}

void check_range(const std::vector<Token>& tokens, int n) {
  for (const Token& t : tokens) {
    if (t.value < 1 || t.value > n) {
      throw ParseError("letter " + std::to_string(t.value) + " outside 1.." + std::to_string(n), t.offset);
    }
  }
}

int infer_rank(const std::vector<Token>& tokens) {
  int n = 1;
  for (const Token& t : tokens) n = std::max(n, t.value);
  return n;
}

std::vector<int> values(const std::vector<Token>& tokens) {
  std::vector<int> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.value);
  return out;
}

const char* direction_name(CrossingDirection d) {
  switch (d) {
    case CrossingDirection::Positive:
      return "positive";
    case CrossingDirection::Negative:
      return "negative";
    case CrossingDirection::Contained:
      return "contained";
  }
  return "?";
}

Json factor_json(const Factor& f) {
  return Json{{"root", f.root}, {"param", f.param}, {"text", f.param.to_string()}, {"vertex", f.vertex}};
}

Json step_json(const TraceStep& s) {
  Json pre = Json::array();
  for (const Preimage& p : s.preimages) {
    pre.push_back({{"symbol", p.symbol}, {"numerator", p.numerator}, {"denominator", p.denominator}});
  }
  return Json{{"action", s.action}, {"position", s.position}, {"detail", s.detail},
              {"state", s.state},   {"preimages", pre}};
}

TraceStep step_from_json(const Json& j) {
  TraceStep s;
  s.action = j.at("action").get<std::string>();
  s.position = j.at("position").get<std::size_t>();
  s.detail = j.value("detail", std::string{});
  s.state = j.at("state").get<RewriteState>();
  for (const Json& p : j.value("preimages", Json::array())) {
    s.preimages.push_back(
        {p.at("symbol").get<Symbol>(), p.at("numerator").get<Expr>(), p.at("denominator").get<Expr>()});
  }
  return s;
}

template <class T>
T json_to(const Json& j) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

Word parse_word(std::string_view text, int n) {
  const auto tokens = parse_letters(text, 0);
  if (n <= 0) n = infer_rank(tokens);
  check_range(tokens, n);
  return Word(n, values(tokens));
}

Gallery parse_gallery(std::string_view text, int n) {
  const auto first = std::find_if_not(text.begin(), text.end(), is_space);
  if (first != text.end() && *first == '{') {
    Gallery g = json_to<Gallery>(parse_json(text));
    if (n > 0 && g.rank() != n) throw RankMismatch(g.rank(), n);
    return g;
  }

  std::vector<std::vector<Token>> steps;
  std::vector<std::size_t> starts;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view piece = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
    auto tokens = parse_letters(piece, start);
    if (tokens.empty()) {
      // A lone empty literal is the empty gallery.
      if (!(steps.empty() && bar == std::string_view::npos)) throw ParseError("empty step", start);
    } else {
      steps.push_back(std::move(tokens));
      starts.push_back(start);
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }

  if (n <= 0) {
    n = 1;
    for (const auto& s : steps) n = std::max(n, infer_rank(s));
  }
  std::vector<std::vector<int>> raw;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    check_range(steps[j], n);
    for (std::size_t i = 1; i < steps[j].size(); ++i) {
      if (steps[j][i].value <= steps[j][i - 1].value) {
        throw ParseError("step indices must increase strictly", steps[j][i].offset);
      }
    }
    raw.push_back(values(steps[j]));
  }
  try {
    return Gallery(n, std::move(raw));
  } catch (const InvalidValue& e) {
    throw ParseError(e.what(), 0);
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
}

void to_json(Json& j, const Word& w) {
  j = Json{{"n", w.rank()}, {"letters", std::vector<int>(w.letters().begin(), w.letters().end())}};
}

void from_json(const Json& j, Word& w) { w = Word(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>()); }

void to_json(Json& j, const Coweight& mu) { j = std::vector<int>(mu.coords().begin(), mu.coords().end()); }

void from_json(const Json& j, Coweight& mu) { mu = Coweight(j.get<std::vector<int>>()); }

void to_json(Json& j, const AffineRoot& h) { j = Json{{"a", h.root.a}, {"b", h.root.b}, {"k", h.level}}; }

void from_json(const Json& j, AffineRoot& h) {
  h = AffineRoot{Root(j.at("a").get<int>(), j.at("b").get<int>()), j.at("k").get<int>()};
}

void to_json(Json& j, const KeyTableau& t) { j = Json{{"n", t.rank()}, {"columns", t.columns()}}; }

void from_json(const Json& j, KeyTableau& t) {
  t = KeyTableau(j.at("n").get<int>(), j.at("columns").get<std::vector<std::vector<int>>>());
}

void to_json(Json& j, const Gallery& g) { j = Json{{"n", g.rank()}, {"steps", g.steps()}}; }

void from_json(const Json& j, Gallery& g) {
  g = Gallery(j.at("n").get<int>(), j.at("steps").get<std::vector<std::vector<int>>>());
}

void to_json(Json& j, const Expr& e) {
  j = Json::array();
  for (const auto& [mono, coef] : e.terms()) {
    Json m = Json::array();
    for (const auto& [s, k] : mono) m.push_back({s, k});
    j.push_back({{"coef", coef}, {"monomial", m}});
  }
}

void from_json(const Json& j, Expr& e) {
  e = Expr();
  for (const Json& term : j) {
    Expr t = Expr::constant(term.at("coef").get<std::int64_t>());
    for (const Json& factor : term.at("monomial")) {
      const auto s = factor.at(0).get<Symbol>();
      const int k = factor.at(1).get<int>();
      if (s < 0 || k < 1) throw InvalidValue("malformed monomial in expression");
      for (int i = 0; i < k; ++i) t = t * Expr::symbol(s);
    }
    e += t;
  }
}

void to_json(Json& j, const FactorWord& w) {
  Json factors = Json::array();
  for (const Factor& f : w.factors) factors.push_back(factor_json(f));
  j = Json{{"n", w.rank}, {"factors", factors}, {"text", to_string(w)}};
}

void from_json(const Json& j, FactorWord& w) {
  w = FactorWord{};
  w.rank = j.at("n").get<int>();
  for (const Json& f : j.at("factors")) {
    Factor factor{f.at("root").get<AffineRoot>(), f.at("param").get<Expr>(), f.value("vertex", 0)};
    if (std::max(factor.root.root.a, factor.root.root.b) > w.rank) {
      throw RankMismatch(std::max(factor.root.root.a, factor.root.root.b), w.rank);
    }
    w.factors.push_back(std::move(factor));
  }
}

void to_json(Json& j, const CrossingReport& r) {
  Json segments = Json::array();
  for (const auto& seg : r.segments) {
    Json walls = Json::array();
    for (const WallCrossing& c : seg) walls.push_back({{"wall", c.wall}, {"direction", direction_name(c.direction)}});
    segments.push_back(walls);
  }
  j = Json{{"n", r.rank}, {"vertices", r.vertices}, {"segments", segments}};
}

void to_json(Json& j, const LatticeRep& rep) {
  Json rows = Json::array();
  for (int i = 0; i < rep.rank; ++i) {
    Json row = Json::array();
    for (int j2 = 0; j2 < rep.rank; ++j2) {
      if (j2 < i) {
        row.push_back(Json::array());
      } else if (j2 == i) {
        std::vector<int> diag(static_cast<std::size_t>(rep.diagonal[i]) + 1, 0);
        diag.back() = 1;
        row.push_back(diag);
      } else {
        row.push_back(rep.entries[i][j2 - i - 1]);
      }
    }
    rows.push_back(row);
  }
  j = Json{{"p", rep.prime}, {"N", rep.precision}, {"n", rep.rank}, {"rows", rows}};
}

void from_json(const Json& j, LatticeRep& rep) {
  rep = LatticeRep{};
  rep.prime = j.at("p").get<int>();
  rep.precision = j.value("N", 0);
  rep.rank = j.at("n").get<int>();
  const auto rows = j.at("rows").get<std::vector<std::vector<std::vector<int>>>>();
  if (rep.rank < 1 || rows.size() != static_cast<std::size_t>(rep.rank)) {
    throw InvalidValue("lattice rows do not match the rank");
  }
  for (int i = 0; i < rep.rank; ++i) {
    const auto& row = rows[i];
    if (row.size() != static_cast<std::size_t>(rep.rank)) throw InvalidValue("lattice row of the wrong length");
    for (int k = 0; k < i; ++k) {
      if (std::any_of(row[k].begin(), row[k].end(), [](int c) { return c != 0; })) {
        throw InvalidValue("lattice basis is not upper triangular");
      }
    }
    const auto& diag = row[i];
    if (diag.empty() || diag.back() != 1 ||
        std::any_of(diag.begin(), diag.end() - 1, [](int c) { return c != 0; })) {
      throw InvalidValue("diagonal entry is not a power of t");
    }
    const int a = static_cast<int>(diag.size()) - 1;
    rep.diagonal.push_back(a);
    std::vector<std::vector<int>> upper;
    for (int k = i + 1; k < rep.rank; ++k) {
      std::vector<int> coeffs = row[k];
      if (static_cast<int>(coeffs.size()) > a) throw InvalidValue("entry not reduced modulo the diagonal");
      coeffs.resize(static_cast<std::size_t>(a), 0);
      for (int c : coeffs) {
        if (c < 0 || c >= rep.prime) throw InvalidValue("coefficient outside 0..p-1");
      }
      upper.push_back(std::move(coeffs));
    }
    rep.entries.push_back(std::move(upper));
  }
}

Json image_to_json(const ImageSet& img) {
  int p = 0, n = 0, precision = 0;
  Json points = Json::array();
  for (const LatticeRep& z : img) {
    p = z.prime;
    n = z.rank;
    precision = std::max(precision, z.precision);
    points.push_back(z);
  }
  return Json{{"p", p}, {"N", precision}, {"n", n}, {"size", img.size()}, {"points", points}};
}

ImageSet image_from_json(const Json& j) {
  ImageSet out;
  for (const Json& z : j.at("points")) out.insert(z.get<LatticeRep>());
  if (j.contains("size") && j.at("size").get<std::size_t>() != out.size()) {
    throw InvalidValue("image size does not match its points");
  }
  return out;
}

void to_json(Json& j, const RewriteState& s) {
  j = Json{{"word", s.word},
           {"target", s.target},
           {"constraints", s.constraints},
           {"next_symbol", s.next_symbol},
           {"text", to_string(s)}};
}

void from_json(const Json& j, RewriteState& s) {
  s = RewriteState{};
  s.word = j.at("word").get<FactorWord>();
  s.target = j.at("target").get<Coweight>();
  if (s.target.rank() != s.word.rank) throw RankMismatch(s.target.rank(), s.word.rank);
  s.constraints = j.value("constraints", std::set<Symbol>{});
  s.next_symbol = j.value("next_symbol", 0);
}

void to_json(Json& j, const ReplayTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) steps.push_back(step_json(s));
  j = Json{{"initial", t.initial}, {"steps", steps}, {"final", t.final_state()}};
}

void from_json(const Json& j, ReplayTrace& t) {
  t = ReplayTrace{};
  t.initial = j.at("initial").get<RewriteState>();
  for (const Json& s : j.at("steps")) t.steps.push_back(step_from_json(s));
}

void to_json(Json& j, const Comparison& c) {
  j = Json{{"n", c.first.rank()},
           {"first", c.first.to_string()},
           {"second", c.second.to_string()},
           {"verdict", to_string(c.verdict)},
           {"fingerprints_equal", c.fingerprints_equal},
           {"coweights_equal", c.coweights_equal},
           {"shapes_equal", c.shapes_equal},
           {"images_equal", c.images_equal},
           {"first_size", c.first_size},
           {"second_size", c.second_size},
           {"family", nullptr}};
  if (c.family) {
    RewriteState shown{c.family->word, c.family->target, c.family->constraints, 0};
    j["family"] = Json{{"source", c.family->source},
                       {"text", to_string(shown)},
                       {"word", c.family->word},
                       {"target", c.family->target},
                       {"constraints", c.family->constraints},
                       {"size", c.family->size}};
  }
}

void to_json(Json& j, const SuiteReport& r) {
  Json rows = Json::array();
  for (const SuiteRow& row : r.rows) {
    Json entry = row.comparison;
    entry["violation"] = row.violation;
    rows.push_back(std::move(entry));
  }
  j = Json{{"n", r.n},
           {"max_len", r.max_len},
           {"p", r.p},
           {"words", r.words},
           {"pairs", r.pairs},
           {"equal_fingerprints", r.equal_fingerprints},
           {"equal_sets", r.equal_sets},
           {"common_family", r.common_family},
           {"inconclusive", r.inconclusive},
           {"distinct", r.distinct},
           {"distinct_equal_images", r.distinct_equal_images},
           {"violations", r.violations},
           {"rows", rows}};
}

Json cell_report(const Gallery& g) {
  Json psi = Json::array();
  for (std::size_t j = 0; j < g.length(); ++j) psi.push_back(psi_set(g, j));
  const CrossingCounts counts = crossing_counts(g);
  const FactorWord fw = factor_word(g);
  return Json{{"gallery", g},
              {"type", g.type()},
              {"word", word_of_gallery(g).to_string()},
              {"coweight", coweight_of(g)},
              {"crossings", crossing_report(g)},
              {"psi", psi},
              {"positive_crossings", counts.positive},
              {"negative_crossings", counts.negative},
              {"total_crossings", counts.total()},
              {"dimension", cell_dimension(g)},
              {"dimension_by_pairing", dimension_by_pairing(g)},
              {"factor_word", fw}};
}

}  // namespace mvknuth
