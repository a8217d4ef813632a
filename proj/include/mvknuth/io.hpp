#pragma once

// Text literals and JSON documents for the library types.
//
// Word literals are either compact ("132", one digit per letter) or delimited
// ("1,3,2", "1 3 2", optionally wrapped in parentheses). Gallery literals separate
// steps with '|' and write each step like a word: "3|1,4|1234". A gallery may also be
// given as the JSON object {"n": 4, "steps": [[3], [1, 4], [1, 2, 3, 4]]}.
// Malformed input raises ParseError carrying the byte offset of the problem.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvknuth/cells.hpp"
#include "mvknuth/chevalley.hpp"
#include "mvknuth/compare.hpp"
#include "mvknuth/galleries.hpp"
#include "mvknuth/lattice.hpp"
#include "mvknuth/roots.hpp"
#include "mvknuth/tableaux.hpp"
#include "mvknuth/words.hpp"

namespace mvknuth {

using Json = nlohmann::ordered_json;

/// n = 0 takes the largest letter as the rank.
Word parse_word(std::string_view text, int n = 0);
Gallery parse_gallery(std::string_view text, int n = 0);

/// nlohmann parsing with errors rethrown as ParseError.
Json parse_json(std::string_view text);

void to_json(Json& j, const Word& w);
void from_json(const Json& j, Word& w);
void to_json(Json& j, const Coweight& mu);
void from_json(const Json& j, Coweight& mu);
void to_json(Json& j, const AffineRoot& h);
void from_json(const Json& j, AffineRoot& h);
void to_json(Json& j, const KeyTableau& t);
void from_json(const Json& j, KeyTableau& t);
void to_json(Json& j, const Gallery& g);
void from_json(const Json& j, Gallery& g);
void to_json(Json& j, const Expr& e);
void from_json(const Json& j, Expr& e);
void to_json(Json& j, const FactorWord& w);
void from_json(const Json& j, FactorWord& w);
void to_json(Json& j, const CrossingReport& r);
void to_json(Json& j, const LatticeRep& rep);
void from_json(const Json& j, LatticeRep& rep);
void to_json(Json& j, const RewriteState& s);
void from_json(const Json& j, RewriteState& s);
void to_json(Json& j, const Comparison& c);
void to_json(Json& j, const SuiteReport& r);

/// Sorted list of points with a {p, N, n} header. N is the largest precision used.
Json image_to_json(const ImageSet& img);
ImageSet image_from_json(const Json& j);

/// A recorded run of normal_form: the starting state and every step after it.
struct ReplayTrace {
  RewriteState initial;
  std::vector<TraceStep> steps;

  const RewriteState& final_state() const { return steps.empty() ? initial : steps.back().state; }
};

void to_json(Json& j, const ReplayTrace& t);
void from_json(const Json& j, ReplayTrace& t);

/// Crossing report, Psi-sets per vertex, both dimension formulas and the factor word.
Json cell_report(const Gallery& g);

/// The polyline of g drawn in the plane, with the walls through its vertices and
/// the crossing direction of every segment. Throws InvalidValue for n > 3.
std::string polyline_svg(const Gallery& g);

}  // namespace mvknuth
