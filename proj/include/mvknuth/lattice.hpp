#pragma once

// Truncated matrix model of the affine Grassmannian over F_p.
//
// A point is the O-lattice spanned by the columns of an invertible matrix over
// F_p((t)); O = F_p[[t]]. Lattices are compared up to t-power scaling. Matrix
// entries are Laurent polynomials with exponents in a window [-N, N]; leaving
// the window raises PrecisionError rather than silently truncating.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mvknuth/cells.hpp"
#include "mvknuth/errors.hpp"
#include "mvknuth/roots.hpp"

namespace mvknuth {

class TruncMatrix {
 public:
  TruncMatrix(int n, int p, int precision);
  static TruncMatrix identity(int n, int p, int precision);

  int rank() const { return n_; }
  int prime() const { return p_; }
  int precision() const { return N_; }

  /// Coefficient of t^e in entry (i, j); 0-based indices, e outside the window reads 0.
  int coeff(int i, int j, int e) const;
  void set_coeff(int i, int j, int e, int c);
  bool entry_is_zero(int i, int j) const;

  /// column dst += c t^shift column src.
  void add_column_multiple(int src, int dst, int c, int shift);
  /// row dst += c t^shift row src.
  void add_row_multiple(int src, int dst, int c, int shift);
  /// Multiply a column by t^shift.
  void shift_column(int col, int shift);
  /// Multiply a row by t^shift.
  void shift_row(int row, int shift);

  TruncMatrix operator*(const TruncMatrix& o) const;
  bool operator==(const TruncMatrix& o) const = default;

 private:
  int index(int i, int j, int e) const { return ((i * n_ + j) * (2 * N_ + 1)) + (e + N_); }
  int n_, p_, N_;
  std::vector<std::int32_t> data_;
};

/// diag(t^{-mu_1}, ..., t^{-mu_n}) for the canonical representative of mu.
TruncMatrix point(const Coweight& mu, int p, int precision);

/// I + c t^level E_{ab} for the root eps_a - eps_b.
TruncMatrix root_matrix(int n, const AffineRoot& h, int c, int p, int precision);

/// Upper triangular basis of a lattice class: diagonal t^{a_i}, entry (i, j), j > i,
/// a polynomial of degree < a_i. Normalized so the lattice lies in O^n but not in tO^n.
struct LatticeRep {
  int rank = 1;
  int prime = 2;
  int precision = 0;  ///< window of the source matrix; not part of the identity
  std::vector<int> diagonal;
  /// entries[i][j - i - 1] holds the coefficients of entry (i, j), lowest degree first,
  /// padded to length diagonal[i].
  std::vector<std::vector<std::vector<int>>> entries;

  friend bool operator==(const LatticeRep& x, const LatticeRep& y) {
    return x.rank == y.rank && x.prime == y.prime && x.diagonal == y.diagonal && x.entries == y.entries;
  }
  friend auto operator<=>(const LatticeRep& x, const LatticeRep& y) {
    if (auto c = x.rank <=> y.rank; c != 0) return c;
    if (auto c = x.prime <=> y.prime; c != 0) return c;
    if (auto c = x.diagonal <=> y.diagonal; c != 0) return c;
    return x.entries <=> y.entries;
  }
};

/// Hermite-style normal form of the column lattice of g. Throws InvalidValue if g is singular.
LatticeRep canonical(const TruncMatrix& g);

/// The basis matrix of a representative, in a window of the given precision.
TruncMatrix to_matrix(const LatticeRep& rep, int precision);

std::string to_string(const LatticeRep& rep);

/// u_0 u_1 ... u_{k-1} point(target) with parameters evaluated at `values` mod p.
TruncMatrix evaluate(const FactorWord& w, const std::map<Symbol, std::int64_t>& values, const Coweight& target, int p,
                     int precision);

using ImageSet = std::set<LatticeRep>;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

struct ImageOptions {
  int p = 2;
  /// 0 selects the default r + 2.
  int precision = 0;
  /// Maximal number of parameter tuples enumerated per image.
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
  /// Extra attempts with precision + 2 after a PrecisionError.
  int retries = 4;
};

/// Every specialization of the family: symbols in `nonzero` run over F_p^*, the others
/// over F_p. Single precision, no retry.
ImageSet family_image(const FactorWord& w, const Coweight& target, const std::set<Symbol>& nonzero, int p,
                      int precision, std::uint64_t budget = kDefaultBudget, int threads = 1);

/// Calls f(precision) starting at `opts.precision` (or the default) and retries after a
/// PrecisionError with the window widened by 2.
template <typename F>
auto with_precision_retry(const ImageOptions& opts, int default_precision, F&& f) {
  int precision = opts.precision > 0 ? opts.precision : default_precision;
  for (int attempt = 0;; ++attempt, precision += 2) {
    try {
      return f(precision);
    } catch (const PrecisionError&) {
      if (attempt >= opts.retries) throw;
    }
  }
}

int default_precision(const Gallery& g);

/// Image of the cell: all specializations of factor_word(g) applied to the last vertex.
ImageSet image_points(const Gallery& g, const ImageOptions& opts = {});
ImageSet image_points(const Word& w, const ImageOptions& opts = {});

/// p^k with saturation at UINT64_MAX.
std::uint64_t count_tuples(int p, std::size_t k);

}  // namespace mvknuth
