#pragma once

// Comparing cell images of Knuth-related words, and the batch checks built on top.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvknuth/chevalley.hpp"
#include "mvknuth/galleries.hpp"
#include "mvknuth/lattice.hpp"
#include "mvknuth/words.hpp"

namespace mvknuth {

enum class Verdict { EqualSets, CommonFamily, Distinct, Inconclusive };

std::string to_string(Verdict v);

/// A family of points lying in both images: every specialization of `word` with the
/// constrained symbols nonzero.
struct FamilyEvidence {
  FactorWord word;
  std::set<Symbol> constraints;
  Coweight target;
  std::string source;
  std::size_t size = 0;
};

struct Comparison {
  Word first;
  Word second;
  Verdict verdict = Verdict::Inconclusive;
  bool fingerprints_equal = false;
  bool coweights_equal = false;
  bool shapes_equal = false;
  bool images_equal = false;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  std::optional<FamilyEvidence> family;
};

/// Looks for a family inside both images: the shared normal form (with the union of
/// the constraints) when both normal forms agree, otherwise the normal form of either word.
std::optional<FamilyEvidence> common_family(const Word& w1, const Word& w2, const ImageSet& img1, const ImageSet& img2,
                                            const ImageOptions& opts);

Comparison compare_images(const Word& w1, const Word& w2, const ImageOptions& opts = {});

/// image_points(g) == image_points(word_of_gallery(g)).
bool gallery_vs_word_image(const Gallery& g, const ImageOptions& opts = {});

/// Left translate of every point by point(mu).
ImageSet translate_image(const ImageSet& img, const Coweight& mu, int precision);

/// point(mu_k) applied to the image of the tail gallery, compared with the image of the
/// factors at vertices k.. of g applied to the last vertex.
bool tail_translation_holds(const Gallery& g, std::size_t k, const ImageOptions& opts = {});

enum class MoveCase { Generic, LowerEqual, UpperEqual };

std::string to_string(MoveCase c);

/// One application of a Knuth relation: `first` contains the window read as xzy (rule
/// "xzy~zxy") or yzx (rule "yzx~yxz") at `position`; `second` is the rewritten word.
/// LowerEqual means x = y < z, UpperEqual means x < y = z.
struct KnuthMove {
  Word first;
  Word second;
  std::size_t position = 0;
  std::string rule;
  MoveCase move_case = MoveCase::Generic;
};

/// Every move between words of length 3..max_len over {1..n}, each unordered pair and
/// position once.
std::vector<KnuthMove> knuth_move_instances(int n, int max_len);

struct SuiteRow {
  Comparison comparison;
  bool violation = false;
};

struct SuiteReport {
  int n = 0;
  int max_len = 0;
  int p = 2;
  std::size_t words = 0;
  std::size_t pairs = 0;
  std::size_t equal_fingerprints = 0;
  std::size_t equal_sets = 0;
  std::size_t common_family = 0;
  std::size_t inconclusive = 0;
  std::size_t distinct = 0;
  /// Fingerprints differ, images coincide (allowed unless coweights and shapes agree too).
  std::size_t distinct_equal_images = 0;
  std::size_t violations = 0;
  /// Rows worth reporting: everything with equal fingerprints or coinciding images.
  std::vector<SuiteRow> rows;
};

/// All unordered pairs of words of length <= max_len.
SuiteReport theorem_suite(int n, int max_len, const ImageOptions& opts = {});

}  // namespace mvknuth
