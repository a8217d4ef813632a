#pragma once

#include <string>
#include <vector>

#include "mvknuth/roots.hpp"
#include "mvknuth/words.hpp"

namespace mvknuth {

/// A filling of top-aligned columns, strictly increasing down each column.
///
/// Columns are stored right to left: columns()[0] is the rightmost column of the
/// diagram, which is also the order in which the reading word visits them.
class KeyTableau {
 public:
  KeyTableau() = default;
  KeyTableau(int n, std::vector<std::vector<int>> columns);

  /// Builds from diagram rows read left to right (row 0 on top). Rows must be left-justified.
  static KeyTableau from_rows(int n, const std::vector<std::vector<int>>& rows);

  int rank() const { return n_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  std::size_t num_boxes() const;
  bool empty() const { return columns_.empty(); }

  /// Column lengths, rightmost column first.
  std::vector<int> column_shape() const;
  /// Diagram rows, top row first, entries left to right. Only meaningful for Young shapes;
  /// for general keys a row is the list of entries at that depth, left to right.
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const KeyTableau&, const KeyTableau&) = default;
  friend auto operator<=>(const KeyTableau&, const KeyTableau&) = default;

 private:
  int n_ = 1;
  std::vector<std::vector<int>> columns_;
};

/// Columns read top to bottom, rightmost column first.
Word reading_word(const KeyTableau& t);

/// Young column shape (lengths weakly increasing right to left) and weakly increasing rows.
bool is_ssyt(const KeyTableau& t);

/// Row-bumps `letter` into the semistandard tableau `t`. The result is the semistandard
/// tableau whose reading word is Knuth equivalent to (letter) followed by reading_word(t).
KeyTableau bump_insert(const KeyTableau& t, int letter);

/// The unique semistandard tableau whose reading word is Knuth equivalent to w.
///
/// With the rightmost-column-first reading order the equivalence is the mirror image of
/// the textbook one, so the letters of w are row-inserted from last to first.
KeyTableau ssyt_of_word(const Word& w);

/// coords[i] = number of boxes holding i.
Coweight content(const KeyTableau& t);

/// Diagram rendering with rows top-aligned, e.g. for rows (1,3)/(2):
///   1 3
///   2
std::string render(const KeyTableau& t);

/// Every semistandard tableau with `boxes` boxes and entries <= n (brute force over shapes).
std::vector<KeyTableau> all_ssyt(int n, int boxes);

}  // namespace mvknuth
