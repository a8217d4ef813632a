#pragma once

// Polynomials over Z in numbered symbols. Factor parameters in symbolic
// rewriting are values of this type; evaluation happens over F_p only at the
// very end.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mvknuth {

using Symbol = int;

/// Sorted (symbol, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<Symbol, int>>;

class Expr {
 public:
  Expr() = default;
  static Expr constant(std::int64_t c);
  static Expr symbol(Symbol s);

  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant or zero.
  bool is_constant() const;
  std::int64_t constant_term() const;
  /// +-1 times a single monomial of positive degree.
  bool is_signed_monomial() const;

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::set<Symbol> symbols() const;
  /// Highest exponent of s over all terms.
  int degree_in(Symbol s) const;

  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator-() const;
  Expr operator*(const Expr& o) const;
  Expr& operator+=(const Expr& o);

  /// Replaces every occurrence of s by `value`.
  Expr substitute(Symbol s, const Expr& value) const;
  /// Replaces every symbol through `rename` (which must be injective on symbols()).
  Expr rename(const std::map<Symbol, Symbol>& rename) const;

  /// Value modulo p; `values` must cover every symbol.
  std::int64_t evaluate(const std::map<Symbol, std::int64_t>& values, std::int64_t p) const;

  /// Text such as "s0*s1 - 2*s3^2 + 1".
  std::string to_string() const;

  friend bool operator==(const Expr&, const Expr&) = default;
  friend auto operator<=>(const Expr&, const Expr&) = default;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

std::string symbol_name(Symbol s);

}  // namespace mvknuth
