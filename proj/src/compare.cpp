#include "mvknuth/compare.hpp"

#include <algorithm>
#include <map>

#include "mvknuth/errors.hpp"
#include "mvknuth/tableaux.hpp"

namespace mvknuth {

namespace {

RewriteState word_state(const Word& w) {
  const Gallery g = Gallery::of_word(w);
  return initial_state(factor_word(g), coweight_of(g));
}

bool subset(const ImageSet& small, const ImageSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Comparison compare_with_images(const Word& w1, const Word& w2, const ImageSet& img1, const ImageSet& img2,
                               const ImageOptions& opts) {
  if (w1.rank() != w2.rank()) throw RankMismatch(w1.rank(), w2.rank());
  Comparison c;
  c.first = w1;
  c.second = w2;
  const KeyTableau t1 = ssyt_of_word(w1), t2 = ssyt_of_word(w2);
  c.fingerprints_equal = t1 == t2;
  c.shapes_equal = t1.column_shape() == t2.column_shape();
  c.coweights_equal = w1.content() == w2.content();
  c.images_equal = img1 == img2;
  c.first_size = img1.size();
  c.second_size = img2.size();
  if (!c.fingerprints_equal) {
    c.verdict = Verdict::Distinct;
    return c;
  }
  c.family = common_family(w1, w2, img1, img2, opts);
  if (c.images_equal) {
    c.verdict = Verdict::EqualSets;
  } else {
    c.verdict = c.family ? Verdict::CommonFamily : Verdict::Inconclusive;
  }
  return c;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::EqualSets:
      return "EQUAL_SETS";
    case Verdict::CommonFamily:
      return "COMMON_FAMILY";
    case Verdict::Distinct:
      return "DISTINCT";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(MoveCase c) {
  switch (c) {
    case MoveCase::Generic:
      return "x<y<z";
    case MoveCase::LowerEqual:
      return "x=y<z";
    case MoveCase::UpperEqual:
      return "x<y=z";
  }
  return "?";
}

std::optional<FamilyEvidence> common_family(const Word& w1, const Word& w2, const ImageSet& img1, const ImageSet& img2,
                                            const ImageOptions& opts) {
  const NormalForm nf1 = normal_form(word_state(w1));
  const NormalForm nf2 = normal_form(word_state(w2));
  std::vector<FamilyEvidence> candidates;
  if (nf1.state.word == nf2.state.word && nf1.state.target == nf2.state.target) {
    std::set<Symbol> both = nf1.state.constraints;
    both.insert(nf2.state.constraints.begin(), nf2.state.constraints.end());
    candidates.push_back({nf1.state.word, both, nf1.state.target, "shared normal form"});
  }
  candidates.push_back({nf1.state.word, nf1.state.constraints, nf1.state.target, "normal form of first word"});
  candidates.push_back({nf2.state.word, nf2.state.constraints, nf2.state.target, "normal form of second word"});
  // The open torus of either parametrization is dense as well; it helps when a product
  // relation between parameters survives the rewriting.
  candidates.push_back({nf1.state.word, nf1.state.word.symbols(), nf1.state.target,
                        "normal form of first word, all parameters nonzero"});
  candidates.push_back({nf2.state.word, nf2.state.word.symbols(), nf2.state.target,
                        "normal form of second word, all parameters nonzero"});

  const int base = static_cast<int>(std::max(w1.size(), w2.size())) + 2;
  for (FamilyEvidence& cand : candidates) {
    const ImageSet fam = with_precision_retry(opts, base, [&](int precision) {
      return family_image(cand.word, cand.target, cand.constraints, opts.p, precision, opts.budget, opts.threads);
    });
    if (subset(fam, img1) && subset(fam, img2)) {
      cand.size = fam.size();
      return cand;
    }
  }
  return std::nullopt;
}

Comparison compare_images(const Word& w1, const Word& w2, const ImageOptions& opts) {
  if (w1.rank() != w2.rank()) throw RankMismatch(w1.rank(), w2.rank());
  return compare_with_images(w1, w2, image_points(w1, opts), image_points(w2, opts), opts);
}

bool gallery_vs_word_image(const Gallery& g, const ImageOptions& opts) {
  return image_points(g, opts) == image_points(word_of_gallery(g), opts);
}

ImageSet translate_image(const ImageSet& img, const Coweight& mu, int precision) {
  ImageSet out;
  for (const LatticeRep& z : img) {
    out.insert(canonical(point(mu, z.prime, precision) * to_matrix(z, precision)));
  }
  return out;
}

bool tail_translation_holds(const Gallery& g, std::size_t k, const ImageOptions& opts) {
  const Tail t = tail(g, k);
  const ImageSet own = image_points(t.gallery, opts);

  FactorWord shifted = factor_word(g);
  std::erase_if(shifted.factors, [&](const Factor& f) { return f.vertex < static_cast<int>(k); });
  const ImageSet expected = with_precision_retry(opts, default_precision(g), [&](int precision) {
    return family_image(shifted, coweight_of(g), {}, opts.p, precision, opts.budget, opts.threads);
  });
  const ImageSet moved = with_precision_retry(opts, default_precision(g) + 2, [&](int precision) {
    return translate_image(own, t.shifted.front(), precision);
  });
  return moved == expected;
}

std::vector<KnuthMove> knuth_move_instances(int n, int max_len) {
  std::vector<KnuthMove> out;
  for (int len = 3; len <= max_len; ++len) {
    for (const Word& w : all_words(n, len)) {
      const auto& l = w.letters();
      for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        const int p = l[i], q = l[i + 1], r = l[i + 2];
        // Window read as x z y with x < y <= z; partner z x y.
        if (p < r && r <= q) {
          std::vector<int> v(l.begin(), l.end());
          v[i] = q;
          v[i + 1] = p;
          out.push_back({w, Word(n, v), i, "xzy~zxy", r == q ? MoveCase::UpperEqual : MoveCase::Generic});
        }
        // Window read as y z x with x <= y < z; partner y x z.
        if (r <= p && p < q) {
          std::vector<int> v(l.begin(), l.end());
          v[i + 1] = r;
          v[i + 2] = q;
          out.push_back({w, Word(n, v), i, "yzx~yxz", r == p ? MoveCase::LowerEqual : MoveCase::Generic});
        }
      }
    }
  }
  return out;
}

SuiteReport theorem_suite(int n, int max_len, const ImageOptions& opts) {
  SuiteReport report;
  report.n = n;
  report.max_len = max_len;
  report.p = opts.p;
  std::vector<Word> words;
  for (int len = 0; len <= max_len; ++len) {
    auto batch = all_words(n, len);
    words.insert(words.end(), batch.begin(), batch.end());
  }
  report.words = words.size();
  std::vector<ImageSet> images;
  images.reserve(words.size());
  for (const Word& w : words) images.push_back(image_points(w, opts));

  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      ++report.pairs;
      const bool same_print = words[i].size() == words[j].size() && ssyt_of_word(words[i]) == ssyt_of_word(words[j]);
      if (!same_print && images[i] != images[j]) {
        ++report.distinct;
        continue;
      }
      SuiteRow row{compare_with_images(words[i], words[j], images[i], images[j], opts)};
      const Comparison& c = row.comparison;
      if (c.fingerprints_equal) {
        ++report.equal_fingerprints;
        if (c.verdict == Verdict::EqualSets) ++report.equal_sets;
        if (c.verdict == Verdict::CommonFamily) ++report.common_family;
        if (c.verdict == Verdict::Inconclusive) {
          ++report.inconclusive;
          row.violation = true;
        }
      } else {
        ++report.distinct;
        ++report.distinct_equal_images;
        row.violation = c.coweights_equal && c.shapes_equal;
      }
      if (row.violation) ++report.violations;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace mvknuth
