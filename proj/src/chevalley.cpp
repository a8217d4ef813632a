#include "mvknuth/chevalley.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "mvknuth/errors.hpp"
#include "mvknuth/lattice.hpp"

namespace mvknuth {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix elementary(int n, const Root& r, int c) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  m[static_cast<std::size_t>(r.a - 1)][static_cast<std::size_t>(r.b - 1)] += c;
  return m;
}

template <typename T>
std::vector<std::vector<T>> multiply(const std::vector<std::vector<T>>& x, const std::vector<std::vector<T>>& y) {
  const std::size_t n = x.size();
  std::vector<std::vector<T>> r(n, std::vector<T>(n, T{}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + x[i][k] * y[k][j];
  return r;
}

using ExprMatrix = std::vector<std::vector<Expr>>;

ExprMatrix root_element(int n, const Root& r, const Expr& x) {
  ExprMatrix m(static_cast<std::size_t>(n), std::vector<Expr>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Expr::constant(1);
  m[static_cast<std::size_t>(r.a - 1)][static_cast<std::size_t>(r.b - 1)] = x;
  return m;
}

bool is_plain_symbol(const Expr& e) {
  if (e.terms().size() != 1) return false;
  const auto& [mono, coef] = *e.terms().begin();
  return coef == 1 && mono.size() == 1 && mono.front().second == 1;
}

using SortKey = std::tuple<int, int, int, int>;

SortKey sort_key(const Factor& f, const Coweight& target) {
  return {stabilizer_contains(target, f.root) ? 1 : 0, f.root.root.a, f.root.root.b, f.root.level};
}

// Symbols used by any factor other than `skip`.
std::set<Symbol> symbols_elsewhere(const FactorWord& w, std::size_t skip) {
  std::set<Symbol> out;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    if (i == skip) continue;
    auto s = w.factors[i].param.symbols();
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = ((a % p) + p) % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

LatticeRep evaluate_point(const FactorWord& w, const std::map<Symbol, std::int64_t>& values, const Coweight& target,
                          int p) {
  int levels = 0;
  for (const Factor& f : w.factors) levels += std::abs(f.root.level);
  int spread = 0;
  const Coweight rep = target.canonical();
  for (int c : rep.coords()) spread = std::max(spread, c);
  ImageOptions opts;
  opts.p = p;
  opts.retries = 6;
  return with_precision_retry(opts, levels + spread + 2,
                              [&](int precision) { return canonical(evaluate(w, values, target, p, precision)); });
}

class Rewriter {
 public:
  Rewriter(const RewriteState& s, std::size_t max_steps) : state_(s), max_steps_(max_steps) {}

  void record(std::string action, std::size_t position, std::string detail, RewriteState next,
              std::vector<Preimage> preimages = {}) {
    if (++steps_ > max_steps_) throw InternalError("normal form exceeded " + std::to_string(max_steps_) + " rewrites");
    state_ = std::move(next);
    trace_.push_back(TraceStep{std::move(action), position, std::move(detail), state_, std::move(preimages)});
  }

  void collect() {
    while (true) {
      const auto& f = state_.word.factors;
      std::optional<std::size_t> pos;
      for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        if (sort_key(f[i], state_.target) > sort_key(f[i + 1], state_.target)) {
          pos = i;
          break;
        }
      }
      if (!pos) return;
      const int c = structure_constant(f[*pos].root.root, f[*pos + 1].root.root, state_.word.rank);
      record("commute", *pos, c == 0 ? "swap" : "swap with commutator sign " + std::to_string(c),
             commute(state_, *pos));
    }
  }

  void absorb_suffix() {
    RewriteState next = absorb(state_);
    const std::size_t removed = state_.word.size() - next.word.size();
    if (removed > 0) record("absorb", next.word.size(), std::to_string(removed) + " stabilizer factors", next);
  }

  void gather_all() {
    while (true) {
      const auto& f = state_.word.factors;
      std::optional<std::size_t> pos;
      for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        if (f[i].root == f[i + 1].root) {
          pos = i;
          break;
        }
      }
      if (!pos) return;
      record("gather", *pos, to_string(f[*pos].root), gather(state_, *pos));
    }
  }

  // One pass over the parameters. Returns true if something changed.
  bool reparametrize_once() {
    for (std::size_t i = 0; i < state_.word.factors.size(); ++i) {
      // Copied: recording a step replaces state_.
      const Expr param = state_.word.factors[i].param;
      if (is_plain_symbol(param)) continue;
      const std::set<Symbol> elsewhere = symbols_elsewhere(state_.word, i);

      // A linear term +-u in a symbol of this factor alone.
      for (const auto& [mono, coef] : param.terms()) {
        if (mono.size() != 1 || mono.front().second != 1 || (coef != 1 && coef != -1)) continue;
        const Symbol u = mono.front().first;
        if (elsewhere.contains(u) || state_.constraints.contains(u) || param.degree_in(u) != 1) continue;
        bool linear_only = true;
        for (const auto& [m2, c2] : param.terms())
          for (const auto& [s2, e2] : m2)
            if (s2 == u && m2.size() != 1) linear_only = false;
        if (!linear_only) continue;
        const Symbol v = state_.next_symbol;
        const Expr rest = param - Expr::constant(coef) * Expr::symbol(u);
        RewriteState next = state_;
        next.next_symbol = v + 1;
        next.word.factors[i].param = Expr::symbol(v);
        const Expr value = Expr::constant(coef) * (Expr::symbol(v) - rest);
        record("reparametrize", i, symbol_name(v) + " = " + param.to_string(), next, {Preimage{u, value}});
        return true;
      }

      // A signed monomial with an exponent-one symbol of this factor alone.
      if (param.is_signed_monomial()) {
        const auto& [mono, coef] = *param.terms().begin();
        for (const auto& [x, e] : mono) {
          if (e != 1 || elsewhere.contains(x)) continue;
          std::set<Symbol> needed;
          for (const auto& [s, ex] : mono) needed.insert(s);
          bool fresh_constraint = false;
          for (Symbol s : needed) fresh_constraint = fresh_constraint || !state_.constraints.contains(s);
          if (fresh_constraint) {
            RewriteState next = state_;
            next.constraints.insert(needed.begin(), needed.end());
            std::string names;
            for (Symbol s : needed) names += (names.empty() ? "" : ", ") + symbol_name(s);
            record("constrain", i, names + " nonzero", next);
          }
          const Symbol y = state_.next_symbol;
          Expr denominator = Expr::constant(coef);
          for (const auto& [s, ex] : mono) {
            if (s == x) continue;
            for (int k = 0; k < ex; ++k) denominator = denominator * Expr::symbol(s);
          }
          RewriteState next = state_;
          next.next_symbol = y + 1;
          next.word.factors[i].param = Expr::symbol(y);
          next.constraints.insert(y);
          record("reparametrize", i, symbol_name(y) + " = " + param.to_string(), next,
                 {Preimage{x, Expr::symbol(y), denominator}});
          return true;
        }
      }
    }
    return false;
  }

  void rename() {
    std::map<Symbol, Symbol> mapping;
    Symbol next = 0;
    for (const Factor& f : state_.word.factors)
      for (Symbol s : f.param.symbols())
        if (!mapping.contains(s)) mapping[s] = next++;
    RewriteState renamed = state_;
    for (Factor& f : renamed.word.factors) f.param = f.param.rename(mapping);
    renamed.constraints.clear();
    for (Symbol s : state_.constraints)
      if (mapping.contains(s)) renamed.constraints.insert(mapping.at(s));
    renamed.next_symbol = next;
    bool identity = renamed.constraints == state_.constraints;
    for (const auto& [from, to] : mapping) identity = identity && from == to;
    if (identity && renamed.next_symbol == state_.next_symbol) return;
    std::vector<Preimage> preimages;
    for (const auto& [from, to] : mapping) preimages.push_back({from, Expr::symbol(to)});
    record("rename", 0, "symbols in order of appearance", renamed, preimages);
  }

  NormalForm run() {
    collect();
    absorb_suffix();
    gather_all();
    while (reparametrize_once()) {
    }
    rename();
    return NormalForm{state_, trace_};
  }

 private:
  RewriteState state_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::vector<TraceStep> trace_;
};

}  // namespace

RewriteState initial_state(const FactorWord& w, const Coweight& target) {
  if (w.rank != target.rank()) throw RankMismatch(w.rank, target.rank());
  RewriteState s;
  s.word = w;
  s.target = target;
  const auto symbols = w.symbols();
  s.next_symbol = symbols.empty() ? 0 : *symbols.rbegin() + 1;
  return s;
}

int structure_constant(const Root& beta, const Root& delta, int n) {
  if (beta == delta.opposite()) throw InvalidValue("cannot commute " + to_string(beta) + " with its opposite");
  if (std::max({beta.a, beta.b, delta.a, delta.b}) > n) throw RankMismatch(std::max({beta.a, beta.b, delta.a, delta.b}), n);
  const IntMatrix a = elementary(n, beta, 1), b = elementary(n, delta, 1);
  const IntMatrix a_inv = elementary(n, beta, -1), b_inv = elementary(n, delta, -1);
  const IntMatrix comm = multiply(multiply(multiply(a, b), a_inv), b_inv);
  int constant = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int expected = i == j ? 1 : 0;
      const int value = comm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (value == expected) continue;
      if (!roots_sum_to_root(beta, delta)) throw InternalError("commutator of non-adding roots is not trivial");
      const Root sum = root_sum(beta, delta);
      if (i != sum.a - 1 || j != sum.b - 1) throw InternalError("commutator lands outside the sum root");
      constant = value;
    }
  }
  return constant;
}

RewriteState commute(const RewriteState& s, std::size_t i) {
  if (i + 1 >= s.word.size()) throw InvalidValue("commute position out of range");
  RewriteState next = s;
  auto& f = next.word.factors;
  const Factor left = f[i], right = f[i + 1];
  const int c = structure_constant(left.root.root, right.root.root, s.word.rank);
  f[i] = right;
  f[i + 1] = left;
  if (c != 0) {
    Factor extra{AffineRoot{root_sum(left.root.root, right.root.root), left.root.level + right.root.level},
                 Expr::constant(c) * left.param * right.param, std::min(left.vertex, right.vertex)};
    f.insert(f.begin() + static_cast<std::ptrdiff_t>(i), extra);
  }
  return next;
}

RewriteState absorb(const RewriteState& s) {
  RewriteState next = s;
  auto& f = next.word.factors;
  while (!f.empty() && stabilizer_contains(s.target, f.back().root)) f.pop_back();
  return next;
}

RewriteState gather(const RewriteState& s, std::size_t i) {
  if (i + 1 >= s.word.size()) throw InvalidValue("gather position out of range");
  if (s.word.factors[i].root != s.word.factors[i + 1].root) throw InvalidValue("gather needs equal affine roots");
  RewriteState next = s;
  auto& f = next.word.factors;
  f[i].param = f[i].param + f[i + 1].param;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  if (f[i].param.is_zero()) f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
  return next;
}

NormalForm normal_form(const RewriteState& s, std::size_t max_steps) {
  if (max_steps == 0) {
    const std::size_t len = s.word.size() + 1;
    max_steps = 1000 + 50 * len * len * len;
  }
  return Rewriter(s, max_steps).run();
}

SoundnessReport check_trace(const RewriteState& initial, const std::vector<TraceStep>& trace, int p, int samples,
                            std::uint64_t seed) {
  SoundnessReport report;
  std::mt19937_64 rng(seed);
  const RewriteState* previous = &initial;
  for (const TraceStep& step : trace) {
    ++report.steps;
    const RewriteState& next = step.state;
    std::set<Symbol> substituted;
    for (const auto& pre : step.preimages) substituted.insert(pre.symbol);

    // Symbols to sample: those of the new state, the symbols the preimages use, and the
    // symbols of the old state that keep their value.
    std::set<Symbol> domain = next.word.symbols();
    for (const auto& pre : step.preimages) {
      auto a = pre.numerator.symbols(), b = pre.denominator.symbols();
      domain.insert(a.begin(), a.end());
      domain.insert(b.begin(), b.end());
    }
    for (Symbol sym : previous->word.symbols())
      if (!substituted.contains(sym)) domain.insert(sym);

    for (int sample = 0; sample < samples; ++sample) {
      std::map<Symbol, std::int64_t> new_values;
      for (Symbol sym : domain) {
        const bool nonzero = next.constraints.contains(sym) || (!substituted.contains(sym) && previous->constraints.contains(sym));
        std::uniform_int_distribution<int> dist(nonzero ? 1 : 0, p - 1);
        new_values[sym] = dist(rng);
      }
      std::map<Symbol, std::int64_t> old_values;
      for (Symbol sym : previous->word.symbols())
        if (!substituted.contains(sym)) old_values[sym] = new_values.at(sym);
      for (const auto& pre : step.preimages) {
        const std::int64_t den = pre.denominator.evaluate(new_values, p);
        if (den == 0) throw InternalError("preimage denominator vanishes on a constrained sample");
        old_values[pre.symbol] = pre.numerator.evaluate(new_values, p) * inverse_mod(den, p) % p;
      }
      bool constraints_ok = true;
      for (Symbol sym : previous->constraints)
        if (old_values.contains(sym) && old_values.at(sym) == 0) constraints_ok = false;
      const LatticeRep before = evaluate_point(previous->word, old_values, previous->target, p);
      const LatticeRep after = evaluate_point(next.word, new_values, next.target, p);
      ++report.samples;
      if (!constraints_ok || before != after) {
        ++report.failures;
        std::ostringstream os;
        os << "step " << report.steps << " (" << step.action << " at " << step.position << "): "
           << (constraints_ok ? "lattice points differ" : "sample violates previous constraints");
        report.messages.push_back(os.str());
      }
    }
    previous = &step.state;
  }
  return report;
}

std::size_t check_structure_constants(int n) {
  std::size_t checked = 0;
  const Expr s = Expr::symbol(0), u = Expr::symbol(1), t = Expr::symbol(2);
  std::vector<Root> roots = positive_roots(n);
  for (const Root& r : positive_roots(n)) roots.push_back(r.opposite());
  for (const Root& beta : roots) {
    for (const Root& delta : roots) {
      if (beta == delta.opposite()) continue;
      const int c = structure_constant(beta, delta, n);
      for (int k = 0; k <= 2; ++k) {
        for (int l = 0; l <= 2; ++l) {
          Expr x = s, y = u;
          for (int i = 0; i < k; ++i) x = x * t;
          for (int i = 0; i < l; ++i) y = y * t;
          const ExprMatrix lhs = multiply(root_element(n, beta, x), root_element(n, delta, y));
          ExprMatrix rhs = multiply(root_element(n, delta, y), root_element(n, beta, x));
          if (c != 0) rhs = multiply(root_element(n, root_sum(beta, delta), Expr::constant(c) * x * y), rhs);
          if (lhs != rhs) {
            throw InternalError("commutator identity fails for " + to_string(beta) + ", " + to_string(delta));
          }
          ++checked;
        }
      }
    }
  }
  return checked;
}

std::string to_string(const RewriteState& s) {
  std::string out = to_string(s.word);
  if (!s.constraints.empty()) {
    out += "  [";
    bool first = true;
    for (Symbol sym : s.constraints) {
      out += (first ? "" : ", ") + symbol_name(sym) + " != 0";
      first = false;
    }
    out += "]";
  }
  return out;
}

}  // namespace mvknuth
