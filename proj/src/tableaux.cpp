#include "mvknuth/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mvknuth/errors.hpp"

namespace mvknuth {

KeyTableau::KeyTableau(int n, std::vector<std::vector<int>> columns) : n_(n), columns_(std::move(columns)) {
  if (n < 1) throw InvalidValue("alphabet size must be positive");
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& col = columns_[c];
    if (col.empty()) throw InvalidValue("column " + std::to_string(c) + " is empty");
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] < 1 || col[i] > n) throw InvalidValue("entry outside alphabet in column " + std::to_string(c));
      if (i > 0 && col[i - 1] >= col[i]) {
        throw InvalidValue("column " + std::to_string(c) + " is not strictly increasing");
      }
    }
  }
}

KeyTableau KeyTableau::from_rows(int n, const std::vector<std::vector<int>>& rows) {
  std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::vector<std::vector<int>> left_to_right(width);
  for (const auto& row : rows) {
    if (row.size() > width) throw InvalidValue("rows must be left-justified and weakly shrinking");
    for (std::size_t c = 0; c < row.size(); ++c) left_to_right[c].push_back(row[c]);
  }
  std::reverse(left_to_right.begin(), left_to_right.end());
  return KeyTableau(n, std::move(left_to_right));
}

std::size_t KeyTableau::num_boxes() const {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

std::vector<int> KeyTableau::column_shape() const {
  std::vector<int> shape;
  for (const auto& col : columns_) shape.push_back(static_cast<int>(col.size()));
  return shape;
}

std::vector<std::vector<int>> KeyTableau::rows() const {
  std::size_t depth = 0;
  for (const auto& col : columns_) depth = std::max(depth, col.size());
  std::vector<std::vector<int>> out(depth);
  for (auto it = columns_.rbegin(); it != columns_.rend(); ++it) {
    for (std::size_t i = 0; i < it->size(); ++i) out[i].push_back((*it)[i]);
  }
  return out;
}

Word reading_word(const KeyTableau& t) {
  std::vector<int> letters;
  for (const auto& col : t.columns()) letters.insert(letters.end(), col.begin(), col.end());
  return Word(t.rank(), std::move(letters));
}

bool is_ssyt(const KeyTableau& t) {
  const auto& cols = t.columns();
  for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
    // cols[c + 1] sits immediately to the left of cols[c].
    if (cols[c].size() > cols[c + 1].size()) return false;
    for (std::size_t i = 0; i < cols[c].size(); ++i) {
      if (cols[c + 1][i] > cols[c][i]) return false;
    }
  }
  return true;
}

KeyTableau bump_insert(const KeyTableau& t, int letter) {
  if (letter < 1 || letter > t.rank()) throw InvalidValue("letter outside alphabet");
  if (!is_ssyt(t)) throw InvalidValue("bump_insert needs a semistandard tableau");
  auto rows = t.rows();
  int carry = letter;
  for (auto& row : rows) {
    auto pos = std::upper_bound(row.begin(), row.end(), carry);
    if (pos == row.end()) {
      row.push_back(carry);
      carry = 0;
      break;
    }
    std::swap(*pos, carry);
  }
  if (carry != 0) rows.push_back({carry});
  return KeyTableau::from_rows(t.rank(), rows);
}

KeyTableau ssyt_of_word(const Word& w) {
  KeyTableau t(w.rank(), {});
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) t = bump_insert(t, *it);
  return t;
}

Coweight content(const KeyTableau& t) {
  Coweight mu = Coweight::zero(t.rank());
  for (const auto& col : t.columns()) mu += Coweight::epsilon(t.rank(), col);
  return mu;
}

std::string render(const KeyTableau& t) {
  const auto& cols = t.columns();
  std::size_t depth = 0;
  for (const auto& col : cols) depth = std::max(depth, col.size());
  std::size_t cell = 1;
  for (const auto& col : cols)
    for (int e : col) cell = std::max(cell, std::to_string(e).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < depth; ++i) {
    std::string line;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
      const std::string entry = i < it->size() ? std::to_string((*it)[i]) : std::string();
      if (it != cols.rbegin()) line += ' ';
      line += std::string(cell - entry.size(), ' ') + entry;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::vector<KeyTableau> all_ssyt(int n, int boxes) {
  // Brute force: every Young column shape, every strictly increasing filling of each
  // column, filtered by the row condition.
  std::vector<std::vector<std::vector<int>>> columns_of_size(static_cast<std::size_t>(n) + 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> col;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) col.push_back(i + 1);
    columns_of_size[col.size()].push_back(col);
  }

  std::vector<KeyTableau> out;
  std::vector<int> shape;
  std::function<void(int, int)> shapes = [&](int remaining, int max_len) {
    if (remaining == 0) {
      // shape is listed left to right (longest first); fillings column by column.
      std::vector<std::vector<int>> cols(shape.size());
      std::function<void(std::size_t)> fill = [&](std::size_t c) {
        if (c == shape.size()) {
          std::vector<std::vector<int>> right_to_left(cols.rbegin(), cols.rend());
          KeyTableau t(n, right_to_left);
          if (is_ssyt(t)) out.push_back(std::move(t));
          return;
        }
        for (const auto& col : columns_of_size[static_cast<std::size_t>(shape[c])]) {
          cols[c] = col;
          fill(c + 1);
        }
      };
      fill(0);
      return;
    }
    for (int len = std::min(remaining, max_len); len >= 1; --len) {
      shape.push_back(len);
      shapes(remaining - len, len);
      shape.pop_back();
    }
  };
  shapes(boxes, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mvknuth
