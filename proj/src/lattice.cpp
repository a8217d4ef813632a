#include "mvknuth/lattice.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "mvknuth/errors.hpp"

namespace mvknuth {

namespace {

int mod(std::int64_t x, int p) {
  x %= p;
  return static_cast<int>(x < 0 ? x + p : x);
}

int inverse_mod(int a, int p) {
  // p is prime: a^(p-2).
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Truncated power series over F_p: coefficients of t^0 .. t^{E-1}.
using Series = std::vector<int>;

int valuation(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return static_cast<int>(i);
  return static_cast<int>(s.size());
}

// a * b mod t^E, with a shifted up by `shift` first.
Series multiply(const Series& a, const Series& b, int p, int shift = 0) {
  const std::size_t E = b.size();
  Series r(E, 0);
  for (std::size_t i = 0; i + static_cast<std::size_t>(shift) < E && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t base = i + static_cast<std::size_t>(shift);
    for (std::size_t j = 0; base + j < E; ++j) {
      if (b[j] != 0) r[base + j] = mod(r[base + j] + static_cast<std::int64_t>(a[i]) * b[j], p);
    }
  }
  return r;
}

// Inverse of a series with nonzero constant term.
Series inverse_unit(const Series& u, int p) {
  const std::size_t E = u.size();
  Series inv(E, 0);
  const int a0 = inverse_mod(u[0], p);
  inv[0] = a0;
  for (std::size_t k = 1; k < E; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += static_cast<std::int64_t>(u[i]) * inv[k - i];
    inv[k] = mod(-mod(s, p) * static_cast<std::int64_t>(a0), p);
  }
  return inv;
}

using Column = std::vector<Series>;

// col_dst -= q * col_src
void subtract_multiple(Column& dst, const Column& src, const Series& q, int p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const Series prod = multiply(q, src[i], p);
    for (std::size_t e = 0; e < prod.size(); ++e) dst[i][e] = mod(dst[i][e] - prod[e], p);
  }
}

struct Hermite {
  std::vector<int> diagonal;
  std::vector<Column> columns;  // columns[j] is the column with its pivot in row j
};

// Triangularizes the submodule of (O/t^E)^n spanned by `cols`. Returns nothing if some
// row has no pivot of valuation below E.
std::optional<Hermite> triangularize(std::vector<Column> cols, int n, int p) {
  Hermite h;
  h.diagonal.assign(static_cast<std::size_t>(n), 0);
  h.columns.assign(static_cast<std::size_t>(n), Column{});
  std::vector<int> free(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) free[static_cast<std::size_t>(j)] = j;
  for (int row = n - 1; row >= 0; --row) {
    const auto r = static_cast<std::size_t>(row);
    int best = -1, best_val = std::numeric_limits<int>::max();
    for (int j : free) {
      const int v = valuation(cols[static_cast<std::size_t>(j)][r]);
      if (v < best_val) {
        best_val = v;
        best = j;
      }
    }
    Column& pivot = cols[static_cast<std::size_t>(best)];
    const int E = static_cast<int>(pivot[r].size());
    if (best_val >= E) return std::nullopt;
    Series unit(pivot[r].begin() + best_val, pivot[r].end());
    unit.resize(static_cast<std::size_t>(E), 0);
    const Series unit_inv = inverse_unit(unit, p);
    for (auto& entry : pivot) entry = multiply(entry, unit_inv, p);
    free.erase(std::find(free.begin(), free.end(), best));
    for (int j : free) {
      Column& other = cols[static_cast<std::size_t>(j)];
      const int w = valuation(other[r]);
      if (w >= E) continue;
      // other[r] = t^w * stuff; divide by the pivot t^{best_val}.
      Series q(static_cast<std::size_t>(E), 0);
      for (int e = w; e < E; ++e) q[static_cast<std::size_t>(e - best_val)] = other[r][static_cast<std::size_t>(e)];
      subtract_multiple(other, pivot, q, p);
    }
    h.diagonal[r] = best_val;
    h.columns[r] = pivot;
  }
  // Reduce above the diagonal: entry (i, j) modulo t^{a_i}, rows from the bottom up.
  for (int j = 1; j < n; ++j) {
    Column& col = h.columns[static_cast<std::size_t>(j)];
    for (int i = j - 1; i >= 0; --i) {
      const auto ii = static_cast<std::size_t>(i);
      const int a = h.diagonal[ii];
      const int E = static_cast<int>(col[ii].size());
      Series q(static_cast<std::size_t>(E), 0);
      bool any = false;
      for (int e = a; e < E; ++e) {
        q[static_cast<std::size_t>(e - a)] = col[ii][static_cast<std::size_t>(e)];
        any = any || col[ii][static_cast<std::size_t>(e)] != 0;
      }
      if (any) subtract_multiple(col, h.columns[ii], q, p);
    }
  }
  return h;
}

}  // namespace

TruncMatrix::TruncMatrix(int n, int p, int precision) : n_(n), p_(p), N_(precision) {
  if (n < 1) throw InvalidValue("matrix size must be positive");
  if (!is_prime(p)) throw InvalidValue(std::to_string(p) + " is not a prime");
  if (precision < 0) throw InvalidValue("precision must be non-negative");
  data_.assign(static_cast<std::size_t>(n * n * (2 * precision + 1)), 0);
}

TruncMatrix TruncMatrix::identity(int n, int p, int precision) {
  TruncMatrix m(n, p, precision);
  for (int i = 0; i < n; ++i) m.set_coeff(i, i, 0, 1);
  return m;
}

int TruncMatrix::coeff(int i, int j, int e) const {
  if (e < -N_ || e > N_) return 0;
  return data_[static_cast<std::size_t>(index(i, j, e))];
}

void TruncMatrix::set_coeff(int i, int j, int e, int c) {
  c = mod(c, p_);
  if (e < -N_ || e > N_) {
    if (c == 0) return;
    throw PrecisionError("exponent " + std::to_string(e) + " outside window [-" + std::to_string(N_) + ", " +
                         std::to_string(N_) + "]");
  }
  data_[static_cast<std::size_t>(index(i, j, e))] = c;
}

bool TruncMatrix::entry_is_zero(int i, int j) const {
  for (int e = -N_; e <= N_; ++e)
    if (coeff(i, j, e) != 0) return false;
  return true;
}

void TruncMatrix::add_column_multiple(int src, int dst, int c, int shift) {
  if (src == dst) throw InvalidValue("column operation needs two different columns");
  c = mod(c, p_);
  if (c == 0) return;
  for (int i = 0; i < n_; ++i) {
    for (int e = -N_; e <= N_; ++e) {
      const int x = coeff(i, src, e);
      if (x != 0) set_coeff(i, dst, e + shift, coeff(i, dst, e + shift) + c * x);
    }
  }
}

void TruncMatrix::add_row_multiple(int src, int dst, int c, int shift) {
  if (src == dst) throw InvalidValue("row operation needs two different rows");
  c = mod(c, p_);
  if (c == 0) return;
  for (int j = 0; j < n_; ++j) {
    for (int e = -N_; e <= N_; ++e) {
      const int x = coeff(src, j, e);
      if (x != 0) set_coeff(dst, j, e + shift, coeff(dst, j, e + shift) + c * x);
    }
  }
}

void TruncMatrix::shift_column(int col, int shift) {
  if (shift == 0) return;
  for (int i = 0; i < n_; ++i) {
    std::vector<int> old(static_cast<std::size_t>(2 * N_ + 1));
    for (int e = -N_; e <= N_; ++e) {
      old[static_cast<std::size_t>(e + N_)] = coeff(i, col, e);
      data_[static_cast<std::size_t>(index(i, col, e))] = 0;
    }
    for (int e = -N_; e <= N_; ++e) {
      const int x = old[static_cast<std::size_t>(e + N_)];
      if (x != 0) set_coeff(i, col, e + shift, x);
    }
  }
}

void TruncMatrix::shift_row(int row, int shift) {
  if (shift == 0) return;
  for (int j = 0; j < n_; ++j) {
    std::vector<int> old(static_cast<std::size_t>(2 * N_ + 1));
    for (int e = -N_; e <= N_; ++e) {
      old[static_cast<std::size_t>(e + N_)] = coeff(row, j, e);
      data_[static_cast<std::size_t>(index(row, j, e))] = 0;
    }
    for (int e = -N_; e <= N_; ++e) {
      const int x = old[static_cast<std::size_t>(e + N_)];
      if (x != 0) set_coeff(row, j, e + shift, x);
    }
  }
}

TruncMatrix TruncMatrix::operator*(const TruncMatrix& o) const {
  if (n_ != o.n_) throw RankMismatch(n_, o.n_);
  if (p_ != o.p_) throw InvalidValue("matrices over different primes");
  const int N = std::max(N_, o.N_);
  TruncMatrix r(n_, p_, N);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(4 * N + 1));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int k = 0; k < n_; ++k) {
        for (int e1 = -N_; e1 <= N_; ++e1) {
          const int x = coeff(i, k, e1);
          if (x == 0) continue;
          for (int e2 = -o.N_; e2 <= o.N_; ++e2) {
            const int y = o.coeff(k, j, e2);
            if (y != 0) acc[static_cast<std::size_t>(e1 + e2 + 2 * N)] += static_cast<std::int64_t>(x) * y;
          }
        }
      }
      for (int e = -2 * N; e <= 2 * N; ++e) r.set_coeff(i, j, e, mod(acc[static_cast<std::size_t>(e + 2 * N)], p_));
    }
  }
  return r;
}

TruncMatrix point(const Coweight& mu, int p, int precision) {
  const Coweight rep = mu.canonical();
  TruncMatrix m(mu.rank(), p, precision);
  for (int i = 0; i < mu.rank(); ++i) m.set_coeff(i, i, -rep.coords()[static_cast<std::size_t>(i)], 1);
  return m;
}

TruncMatrix root_matrix(int n, const AffineRoot& h, int c, int p, int precision) {
  if (std::max(h.root.a, h.root.b) > n) throw RankMismatch(std::max(h.root.a, h.root.b), n);
  TruncMatrix m = TruncMatrix::identity(n, p, precision);
  m.set_coeff(h.root.a - 1, h.root.b - 1, h.level, c);
  return m;
}

LatticeRep canonical(const TruncMatrix& g) {
  const int n = g.rank(), p = g.prime(), N = g.precision();
  int lowest = std::numeric_limits<int>::max(), highest = std::numeric_limits<int>::min();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int e = -N; e <= N; ++e)
        if (g.coeff(i, j, e) != 0) {
          lowest = std::min(lowest, e);
          highest = std::max(highest, e);
        }
  if (lowest == std::numeric_limits<int>::max()) throw InvalidValue("zero matrix has no lattice");
  // After scaling by t^{-lowest} every entry is a polynomial of degree <= span, so the
  // determinant has valuation at most n * span when it is nonzero.
  const int span = highest - lowest;
  const int max_valuation = n * span;

  for (int E = std::min(2 * span + 2, max_valuation + 1);; E = std::min(2 * E, max_valuation + 1)) {
    std::vector<Column> cols(static_cast<std::size_t>(n), Column(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        Series s(static_cast<std::size_t>(E), 0);
        for (int e = lowest; e <= highest && e - lowest < E; ++e) s[static_cast<std::size_t>(e - lowest)] = g.coeff(i, j, e);
        cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(s);
      }
    auto h = triangularize(std::move(cols), n, p);
    int s = 0;
    if (h)
      for (int a : h->diagonal) s += a;
    // Exact once t^E O^n lies inside the lattice, which holds when E > s.
    if (h && s < E) {
      int shift = std::numeric_limits<int>::max();
      for (int i = 0; i < n; ++i) {
        shift = std::min(shift, h->diagonal[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
          const Series& entry = h->columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          const int v = valuation(entry);
          if (v < h->diagonal[static_cast<std::size_t>(i)]) shift = std::min(shift, v);
        }
      }
      LatticeRep rep;
      rep.rank = n;
      rep.prime = p;
      rep.precision = N;
      for (int i = 0; i < n; ++i) {
        const int a = h->diagonal[static_cast<std::size_t>(i)];
        rep.diagonal.push_back(a - shift);
        std::vector<std::vector<int>> row;
        for (int j = i + 1; j < n; ++j) {
          const Series& entry = h->columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          row.emplace_back(entry.begin() + shift, entry.begin() + a);
        }
        rep.entries.push_back(std::move(row));
      }
      return rep;
    }
    if (E > max_valuation) throw InvalidValue("matrix is singular");
  }
}

TruncMatrix to_matrix(const LatticeRep& rep, int precision) {
  TruncMatrix m(rep.rank, rep.prime, precision);
  for (int i = 0; i < rep.rank; ++i) {
    m.set_coeff(i, i, rep.diagonal[static_cast<std::size_t>(i)], 1);
    for (int j = i + 1; j < rep.rank; ++j) {
      const auto& coeffs = rep.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
      for (std::size_t e = 0; e < coeffs.size(); ++e) m.set_coeff(i, j, static_cast<int>(e), coeffs[e]);
    }
  }
  return m;
}

std::string to_string(const LatticeRep& rep) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rep.rank; ++i) {
    if (i > 0) os << "; ";
    for (int j = 0; j < rep.rank; ++j) {
      if (j > 0) os << ' ';
      if (j < i) {
        os << '0';
      } else if (j == i) {
        const int a = rep.diagonal[static_cast<std::size_t>(i)];
        os << (a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a)));
      } else {
        const auto& coeffs = rep.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
        std::string text;
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
          if (coeffs[e] == 0) continue;
          if (!text.empty()) text += '+';
          const std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
          if (coeffs[e] != 1 || mono.empty()) text += std::to_string(coeffs[e]);
          text += mono;
        }
        os << (text.empty() ? "0" : text);
      }
    }
  }
  os << ']';
  return os.str();
}

TruncMatrix evaluate(const FactorWord& w, const std::map<Symbol, std::int64_t>& values, const Coweight& target, int p,
                     int precision) {
  if (target.rank() != w.rank) throw RankMismatch(target.rank(), w.rank);
  TruncMatrix g = TruncMatrix::identity(w.rank, p, precision);
  for (const Factor& f : w.factors) {
    const int c = static_cast<int>(f.param.evaluate(values, p));
    g.add_column_multiple(f.root.root.a - 1, f.root.root.b - 1, c, f.root.level);
  }
  const Coweight rep = target.canonical();
  for (int i = 0; i < w.rank; ++i) g.shift_column(i, -rep.coords()[static_cast<std::size_t>(i)]);
  return g;
}

std::uint64_t count_tuples(int p, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

ImageSet family_image(const FactorWord& w, const Coweight& target, const std::set<Symbol>& nonzero, int p,
                      int precision, std::uint64_t budget, int threads) {
  const std::set<Symbol> symbols_set = w.symbols();
  const std::vector<Symbol> symbols(symbols_set.begin(), symbols_set.end());
  std::vector<int> base(symbols.size()), low(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    low[i] = nonzero.contains(symbols[i]) ? 1 : 0;
    base[i] = p - low[i];
  }
  std::uint64_t total = 1;
  for (int b : base) {
    if (b != 0 && total > budget / static_cast<std::uint64_t>(b)) {
      throw BudgetExceeded("image enumeration needs more than " + std::to_string(budget) + " parameter tuples");
    }
    total *= static_cast<std::uint64_t>(b);
  }
  if (total > budget) {
    throw BudgetExceeded("image enumeration needs " + std::to_string(total) + " parameter tuples, budget " +
                         std::to_string(budget));
  }

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    ImageSet out;
    std::map<Symbol, std::int64_t> values;
    for (std::uint64_t index = begin; index < end; ++index) {
      std::uint64_t rest = index;
      for (std::size_t i = symbols.size(); i-- > 0;) {
        const auto b = static_cast<std::uint64_t>(base[i]);
        values[symbols[i]] = low[i] + static_cast<std::int64_t>(rest % b);
        rest /= b;
      }
      out.insert(canonical(evaluate(w, values, target, p, precision)));
    }
    return out;
  };

  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1 || total < 64) return run(0, total);

  std::vector<ImageSet> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          parts[t] = run(total * t / workers, total * (t + 1) / workers);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  ImageSet merged;
  for (auto& part : parts) merged.merge(part);
  return merged;
}

int default_precision(const Gallery& g) { return static_cast<int>(g.length()) + 2; }

ImageSet image_points(const Gallery& g, const ImageOptions& opts) {
  const FactorWord w = factor_word(g);
  const Coweight target = coweight_of(g);
  return with_precision_retry(opts, default_precision(g), [&](int precision) {
    return family_image(w, target, {}, opts.p, precision, opts.budget, opts.threads);
  });
}

ImageSet image_points(const Word& w, const ImageOptions& opts) { return image_points(Gallery::of_word(w), opts); }

}  // namespace mvknuth
