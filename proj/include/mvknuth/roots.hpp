#pragma once

// Type A_{n-1} roots, coweights and the affine hyperplane arrangement.
//
// Coweights are kept as full integer vectors in Z^n; two vectors name the same
// coweight when they differ by a multiple of (1,...,1). Every pairing with a
// root is invariant under that shift, so nothing here needs a representative
// except equality and hashing, which go through `canonical()`.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mvknuth {

class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<int> coords);

  static Coweight zero(int n);
  /// eps_i, 1-based.
  static Coweight epsilon(int n, int i);
  /// eps_{i_1} + ... + eps_{i_d}.
  static Coweight epsilon(int n, std::span<const int> indices);
  /// omega_d = eps_1 + ... + eps_d, 0 <= d <= n.
  static Coweight fundamental(int n, int d);
  /// rho = omega_1 + ... + omega_{n-1}.
  static Coweight rho(int n);

  int rank() const { return static_cast<int>(coords_.size()); }
  std::span<const int> coords() const { return coords_; }
  /// 1-based coordinate access.
  int operator[](int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }

  /// Representative with minimum coordinate 0.
  Coweight canonical() const;

  Coweight operator+(const Coweight& other) const;
  Coweight operator-(const Coweight& other) const;
  Coweight operator-() const;
  Coweight& operator+=(const Coweight& other);

  /// Equality in Z^n / Z(1,...,1).
  friend bool operator==(const Coweight& lhs, const Coweight& rhs);
  /// Total order on canonical representatives (for ordered containers).
  friend std::strong_ordering operator<=>(const Coweight& lhs, const Coweight& rhs);

  /// Raw coordinate equality, no quotient.
  bool same_coords(const Coweight& other) const { return coords_ == other.coords_; }

  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

/// alpha = eps_a - eps_b with a != b (1-based).
struct Root {
  int a = 1;
  int b = 2;

  Root() = default;
  Root(int a, int b);

  bool positive() const { return a < b; }
  bool negative() const { return a > b; }
  Root opposite() const { return Root{b, a}; }
  /// Height of the root; negative roots have negative height.
  int height() const { return b - a; }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// The pair (alpha, k): wall H = {x : (alpha,x) + k = 0}, root subgroup label.
struct AffineRoot {
  Root root;
  int level = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

std::vector<Root> positive_roots(int n);
std::vector<Root> negative_roots(int n);

/// Sum of two roots when it is a root (same rank implied).
bool roots_sum_to_root(const Root& beta, const Root& delta);
Root root_sum(const Root& beta, const Root& delta);

/// (eps_a - eps_b, mu) = mu_a - mu_b. Throws RankMismatch when an index exceeds the rank.
int pairing(const Root& alpha, const Coweight& mu);

/// Value of the affine function (alpha, mu) + k.
int wall_value(const Coweight& mu, const AffineRoot& h);
Sign halfspace_sign(const Coweight& mu, const AffineRoot& h);

/// s_{alpha,k}(mu) = mu - ((alpha,mu) + k) alpha^vee.
Coweight reflect(const Coweight& mu, const AffineRoot& h);

/// (beta, l) -> (beta, l + (beta, mu)).
AffineRoot shift_by_translation(const AffineRoot& h, const Coweight& mu);

/// (alpha, mu) >= 0 for every positive alpha.
bool is_dominant(const Coweight& mu);
/// mu equals one of 0, omega_1, ..., omega_{n-1} in the quotient.
bool is_alcove_vertex(const Coweight& mu);

/// (mu, 2 rho) = sum over positive roots of (alpha, mu). Always an integer.
int pairing_with_two_rho(const Coweight& mu);

/// Canonical form used for set keys of coweights.
struct CoweightHash {
  std::size_t operator()(const Coweight& mu) const;
};

std::string to_string(const Root& r);
std::string to_string(const AffineRoot& h);

}  // namespace mvknuth
