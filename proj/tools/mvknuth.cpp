// mvknuth command-line front end.
//
// Exit status: 0 when every check passed, 1 on a property violation, 2 on usage,
// parse or budget errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvknuth/chevalley.hpp"
#include "mvknuth/compare.hpp"
#include "mvknuth/errors.hpp"
#include "mvknuth/io.hpp"
#include "mvknuth/lattice.hpp"
#include "mvknuth/tableaux.hpp"
#include "mvknuth/words.hpp"

using namespace mvknuth;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct RunConfig {
  int n = 0;
  int p = 2;
  int precision = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;

  ImageOptions image_options() const {
    ImageOptions o;
    o.p = p;
    o.precision = precision;
    o.budget = budget;
    o.threads = threads;
    return o;
  }
};

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("MVKNUTH_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || value == 0) {
    throw InvalidValue(std::string("MVKNUTH_BUDGET must be a positive integer, got '") + raw + "'");
  }
  return value;
}

void check_config(const RunConfig& cfg) {
  if (cfg.p < 2) throw InvalidValue("p must be a prime");
  for (int d = 2; d * d <= cfg.p; ++d) {
    if (cfg.p % d == 0) throw InvalidValue("p must be a prime");
  }
  if (cfg.budget == 0) throw InvalidValue("budget must be positive");
  if (cfg.threads < 1) throw InvalidValue("threads must be positive");
  if (cfg.precision < 0) throw InvalidValue("precision must be non-negative");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join_rows(const KeyTableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    if (!out.empty()) out += '/';
    for (int x : row) out += std::to_string(x) + (t.rank() > 9 ? "," : "");
  }
  return out;
}

// classes

int run_classes(const RunConfig& cfg, int max_len) {
  const int n = cfg.n > 0 ? cfg.n : 3;
  std::uint64_t words = 0, power = 1;
  for (int len = 0; len <= max_len; ++len, power *= static_cast<std::uint64_t>(n)) {
    words += power;
    if (words > cfg.budget) throw BudgetExceeded("more than " + std::to_string(cfg.budget) + " words to classify");
  }

  bool ok = true;
  Json lengths = Json::array();
  std::ostringstream text;
  for (int len = 0; len <= max_len; ++len) {
    Json classes = Json::array();
    const auto all = all_knuth_classes(n, len);
    text << "length " << len << ": " << all.size() << " classes\n";
    for (const WordSet& cls : all) {
      const KeyTableau t = ssyt_of_word(*cls.begin());
      int tableau_words = 0;
      Json members = Json::array();
      for (const Word& w : cls) {
        members.push_back(w.to_string());
        if (ssyt_of_word(w) != t) ok = false;
        if (reading_word(ssyt_of_word(w)) == w) ++tableau_words;
      }
      if (tableau_words != 1) ok = false;
      const Word rep = reading_word(t);
      classes.push_back({{"size", cls.size()},
                         {"representative", rep.to_string()},
                         {"rows", t.rows()},
                         {"shape", t.column_shape()},
                         {"tableau_words", tableau_words},
                         {"members", members}});
      text << "  " << rep.to_string() << "  rows " << join_rows(t) << "  size " << cls.size() << "  {";
      bool first = true;
      for (const Word& w : cls) {
        text << (first ? "" : " ") << w.to_string();
        first = false;
      }
      text << "}\n";
    }
    lengths.push_back({{"length", len}, {"count", all.size()}, {"classes", classes}});
  }
  if (cfg.format == "text") {
    std::cout << text.str();
  } else {
    print({{"n", n}, {"max_len", max_len}, {"verified", ok}, {"lengths", lengths}});
  }
  return ok ? kOk : kViolation;
}

// cell

int run_cell(const RunConfig& cfg, const std::string& literal) {
  const Gallery g = parse_gallery(literal, cfg.n);
  const Json report = cell_report(g);
  if (cfg.format != "text") {
    print(report);
    return kOk;
  }
  std::cout << "gallery   " << literal << "  (n = " << g.rank() << ")\n";
  std::cout << "word      " << word_of_gallery(g).to_string() << '\n';
  std::cout << "coweight  " << coweight_of(g).to_string() << '\n';
  const CrossingCounts counts = crossing_counts(g);
  std::cout << "crossings " << counts.positive << " positive, " << counts.negative << " negative\n";
  std::cout << "dimension " << cell_dimension(g) << " (pairing formula " << dimension_by_pairing(g) << ")\n";
  for (std::size_t j = 0; j < g.length(); ++j) {
    std::cout << "psi_" << j << "    ";
    for (const AffineRoot& h : psi_set(g, j)) std::cout << ' ' << to_string(h);
    std::cout << '\n';
  }
  std::cout << "factors   " << to_string(factor_word(g)) << '\n';
  return kOk;
}

// image

int run_image(const RunConfig& cfg, const std::string& literal, bool as_gallery) {
  const ImageOptions opts = cfg.image_options();
  const ImageSet img = as_gallery ? image_points(parse_gallery(literal, cfg.n), opts)
                                  : image_points(parse_word(literal, cfg.n), opts);
  if (cfg.format == "text") {
    for (const LatticeRep& z : img) std::cout << to_string(z) << '\n';
    std::cout << img.size() << " points\n";
  } else {
    print(image_to_json(img));
  }
  return kOk;
}

// compare

int run_compare(const RunConfig& cfg, const std::string& a, const std::string& b) {
  Word w1 = parse_word(a, cfg.n), w2 = parse_word(b, cfg.n);
  if (cfg.n == 0 && w1.rank() != w2.rank()) {
    const int n = std::max(w1.rank(), w2.rank());
    w1 = parse_word(a, n);
    w2 = parse_word(b, n);
  }
  const Comparison c = compare_images(w1, w2, cfg.image_options());
  if (cfg.format == "text") {
    std::cout << to_string(c.verdict) << '\n';
    std::cout << "fingerprints " << (c.fingerprints_equal ? "equal" : "differ") << ", coweights "
              << (c.coweights_equal ? "equal" : "differ") << ", shapes " << (c.shapes_equal ? "equal" : "differ")
              << '\n';
    std::cout << "image sizes " << c.first_size << " and " << c.second_size << '\n';
    if (c.family) {
      std::cout << "family (" << c.family->source << ", " << c.family->size
                << " points): " << to_string(RewriteState{c.family->word, c.family->target, c.family->constraints, 0})
                << '\n';
    }
  } else {
    print(c);
  }
  return c.verdict == Verdict::Inconclusive ? kViolation : kOk;
}

// theorem-suite

int run_suite(const RunConfig& cfg, int max_len) {
  const int n = cfg.n > 0 ? cfg.n : 3;
  const SuiteReport r = theorem_suite(n, max_len, cfg.image_options());
  if (cfg.format == "text") {
    std::cout << "n = " << n << ", length <= " << max_len << ", p = " << cfg.p << '\n';
    std::cout << r.words << " words, " << r.pairs << " pairs\n";
    std::cout << r.equal_fingerprints << " with equal fingerprints: " << r.equal_sets << " EQUAL_SETS, "
              << r.common_family << " COMMON_FAMILY, " << r.inconclusive << " INCONCLUSIVE\n";
    std::cout << r.distinct << " DISTINCT, " << r.distinct_equal_images << " of them with coinciding images\n";
    for (const SuiteRow& row : r.rows) {
      const Comparison& c = row.comparison;
      if (c.verdict == Verdict::EqualSets && !row.violation) continue;
      std::cout << "  " << c.first.to_string() << " ~ " << c.second.to_string() << "  " << to_string(c.verdict)
                << (c.verdict == Verdict::Distinct ? " (images coincide)" : "")
                << (row.violation ? "  VIOLATION" : "") << '\n';
    }
    std::cout << r.violations << " violations\n";
  } else {
    print(r);
  }
  return r.violations == 0 ? kOk : kViolation;
}

// replay

Json soundness_json(const SoundnessReport& s) {
  return Json{{"steps", s.steps}, {"samples", s.samples}, {"failures", s.failures}, {"messages", s.messages}};
}

RewriteState word_state(const Word& w) {
  const Gallery g = Gallery::of_word(w);
  return initial_state(factor_word(g), coweight_of(g));
}

bool same_steps(const std::vector<TraceStep>& x, const std::vector<TraceStep>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const RewriteState &a = x[i].state, &b = y[i].state;
    if (x[i].action != y[i].action || x[i].position != y[i].position || a.word != b.word || a.target != b.target ||
        a.constraints != b.constraints) {
      return false;
    }
  }
  return true;
}

int run_replay(const RunConfig& cfg, const std::vector<std::string>& words, const std::string& trace_file,
               int samples) {
  const int p = cfg.p == 2 ? 5 : cfg.p;
  bool ok = true;
  Json out;
  if (!trace_file.empty()) {
    std::ifstream in(trace_file);
    if (!in) throw InvalidValue("cannot read " + trace_file);
    std::stringstream buf;
    buf << in.rdbuf();
    const ReplayTrace recorded = parse_json(buf.str()).get<ReplayTrace>();
    const NormalForm again = normal_form(recorded.initial);
    const bool reproduced = same_steps(recorded.steps, again.trace);
    const SoundnessReport s = check_trace(recorded.initial, recorded.steps, p, samples, cfg.seed);
    ok = reproduced && s.failures == 0;
    out = Json{{"file", trace_file},
               {"reproduced", reproduced},
               {"final", recorded.final_state()},
               {"soundness", soundness_json(s)}};
  } else {
    if (words.empty()) throw InvalidValue("replay needs words or --trace");
    int n = cfg.n;
    if (n == 0) {
      for (const std::string& w : words) n = std::max(n, parse_word(w).rank());
    }
    Json instances = Json::array();
    std::vector<RewriteState> finals;
    for (const std::string& literal : words) {
      const Word w = parse_word(literal, n);
      const RewriteState start = word_state(w);
      const NormalForm nf = normal_form(start);
      const SoundnessReport s = check_trace(start, nf.trace, p, samples, cfg.seed);
      ok = ok && s.failures == 0;
      finals.push_back(nf.state);
      instances.push_back({{"word", w.to_string()},
                           {"normal_form", to_string(nf.state)},
                           {"trace", ReplayTrace{start, nf.trace}},
                           {"soundness", soundness_json(s)}});
    }
    bool same = true;
    for (const RewriteState& s : finals) same = same && s.word == finals.front().word && s.target == finals.front().target;
    out = Json{{"n", n}, {"p", p}, {"seed", cfg.seed}, {"normal_forms_equal", same}, {"instances", instances}};
  }
  if (cfg.format == "text") {
    if (out.contains("instances")) {
      for (const Json& inst : out["instances"]) {
        std::cout << inst["word"].get<std::string>() << "  ->  " << inst["normal_form"].get<std::string>() << '\n';
        for (const Json& step : inst["trace"]["steps"]) {
          std::cout << "    " << step["action"].get<std::string>() << " @" << step["position"].get<std::size_t>()
                    << "  " << step["state"]["text"].get<std::string>() << '\n';
        }
        std::cout << "    soundness: " << inst["soundness"]["failures"] << " failures in "
                  << inst["soundness"]["samples"] << " samples\n";
      }
      std::cout << "normal forms " << (out["normal_forms_equal"].get<bool>() ? "equal" : "differ") << '\n';
    } else {
      std::cout << "trace " << (out["reproduced"].get<bool>() ? "reproduced" : "NOT reproduced") << ", "
                << out["soundness"]["failures"] << " soundness failures\n";
    }
  } else {
    print(out);
  }
  return ok ? kOk : kViolation;
}

// polyline-svg

int run_svg(const RunConfig& cfg, const std::string& literal, const std::string& output) {
  const std::string svg = polyline_svg(parse_gallery(literal, cfg.n));
  if (output.empty() || output == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InvalidValue("cannot write " + output);
    out << svg;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knuth equivalence, Bialynicki-Birula cells and their lattice images"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  bool budget_given = false;

  app.add_option("-n,--rank", cfg.n, "alphabet size n (0 infers it from the input)")->check(CLI::NonNegativeNumber);
  app.add_option("-p,--prime", cfg.p, "prime field for lattice computations");
  app.add_option("-N,--precision", cfg.precision, "Laurent window (0 selects length + 2)");
  app.add_option_function<std::uint64_t>(
      "--budget",
      [&](const std::uint64_t& b) {
        cfg.budget = b;
        budget_given = true;
      },
      "maximal parameter tuples per image (default from MVKNUTH_BUDGET)");
  app.add_option("-f,--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("-j,--threads", cfg.threads, "worker threads for enumeration");

  int max_len = 3;
  auto* classes = app.add_subcommand("classes", "all Knuth classes with their tableau representatives");
  classes->add_option("--max-len", max_len, "longest word length")->check(CLI::NonNegativeNumber);

  std::string gallery_text;
  auto* cell = app.add_subcommand("cell", "crossing report, Psi-sets, dimension and factor word of a gallery");
  cell->add_option("gallery", gallery_text, "gallery literal such as 3|1,4|1234")->required();

  std::string image_text;
  bool image_gallery = false;
  auto* image = app.add_subcommand("image", "lattice points of a word or gallery cell");
  image->add_option("input", image_text, "word literal (or gallery with --gallery)")->required();
  image->add_flag("--gallery", image_gallery, "read the input as a gallery");

  std::string first, second;
  auto* compare = app.add_subcommand("compare", "compare the cell images of two words");
  compare->add_option("first", first)->required();
  compare->add_option("second", second)->required();

  int suite_len = 3;
  auto* suite = app.add_subcommand("theorem-suite", "all pairs of words: fingerprints against lattice evidence");
  suite->add_option("--max-len", suite_len, "longest word length")->check(CLI::NonNegativeNumber);

  std::vector<std::string> replay_words;
  std::string trace_file;
  int samples = 20;
  auto* replay = app.add_subcommand("replay", "normal form traces with a soundness check of every step");
  replay->add_option("words", replay_words, "words to rewrite, e.g. 132 312");
  replay->add_option("--trace", trace_file, "recorded trace to reproduce and check");
  replay->add_option("--samples", samples, "random specializations per step")->check(CLI::PositiveNumber);

  std::string svg_output;
  auto* svg = app.add_subcommand("polyline-svg", "draw the polyline of a gallery (n <= 3)");
  svg->add_option("gallery", gallery_text, "gallery literal")->required();
  svg->add_option("-o,--output", svg_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!budget_given) cfg.budget = budget_from_env();
    check_config(cfg);
    if (*classes) return run_classes(cfg, max_len);
    if (*cell) return run_cell(cfg, gallery_text);
    if (*image) return run_image(cfg, image_text, image_gallery);
    if (*compare) return run_compare(cfg, first, second);
    if (*suite) return run_suite(cfg, suite_len);
    if (*replay) return run_replay(cfg, replay_words, trace_file, samples);
    if (*svg) return run_svg(cfg, gallery_text, svg_output);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON document: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
