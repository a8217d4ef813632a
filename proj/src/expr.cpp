#include "mvknuth/expr.hpp"

#include <algorithm>
#include <sstream>

#include "mvknuth/errors.hpp"

namespace mvknuth {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t mod(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

std::int64_t power_mod(std::int64_t base, int exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base = mod(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::string symbol_name(Symbol s) { return "s" + std::to_string(s); }

Expr Expr::constant(std::int64_t c) {
  Expr e;
  e.add_term({}, c);
  return e;
}

Expr Expr::symbol(Symbol s) {
  Expr e;
  e.add_term({{s, 1}}, 1);
  return e;
}

void Expr::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Expr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

std::int64_t Expr::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0 : it->second;
}

bool Expr::is_signed_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return !m.empty() && (c == 1 || c == -1);
}

std::set<Symbol> Expr::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [s, e] : m) out.insert(s);
  return out;
}

int Expr::degree_in(Symbol s) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [t, e] : m)
      if (t == s) d = std::max(d, e);
  return d;
}

Expr Expr::operator+(const Expr& o) const {
  Expr r = *this;
  r += o;
  return r;
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Expr Expr::operator-() const {
  Expr r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
  Expr r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(multiply(m1, m2), c1 * c2);
  return r;
}

Expr Expr::substitute(Symbol s, const Expr& value) const {
  Expr r;
  for (const auto& [m, c] : terms_) {
    Expr term = constant(c);
    Monomial rest;
    for (const auto& [t, e] : m) {
      if (t == s) {
        for (int k = 0; k < e; ++k) term = term * value;
      } else {
        rest.emplace_back(t, e);
      }
    }
    Expr rest_expr;
    rest_expr.add_term(rest, 1);
    r += term * rest_expr;
  }
  return r;
}

Expr Expr::rename(const std::map<Symbol, Symbol>& rename) const {
  Expr r;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& [t, e] : m) {
      auto it = rename.find(t);
      renamed.emplace_back(it == rename.end() ? t : it->second, e);
    }
    std::sort(renamed.begin(), renamed.end());
    for (std::size_t i = 1; i < renamed.size(); ++i) {
      if (renamed[i].first == renamed[i - 1].first) throw InternalError("rename is not injective");
    }
    r.add_term(renamed, c);
  }
  return r;
}

std::int64_t Expr::evaluate(const std::map<Symbol, std::int64_t>& values, std::int64_t p) const {
  std::int64_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t term = mod(c, p);
    for (const auto& [s, e] : m) {
      auto it = values.find(s);
      if (it == values.end()) throw InvalidValue("no value for symbol " + symbol_name(s));
      term = term * power_mod(it->second, e, p) % p;
    }
    total = (total + term) % p;
  }
  return total;
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Monomial, std::int64_t>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    auto deg = [](const Monomial& m) {
      int d = 0;
      for (const auto& [s, e] : m) d += e;
      return d;
    };
    return deg(x.first) > deg(y.first);
  });
  for (const auto& [m, c] : ordered) {
    std::int64_t magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (magnitude != 1 || m.empty()) {
      os << magnitude;
      need_star = true;
    }
    for (const auto& [s, e] : m) {
      if (need_star) os << '*';
      os << symbol_name(s);
      if (e != 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace mvknuth
