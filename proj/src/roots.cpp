#include "mvknuth/roots.hpp"

#include <algorithm>
#include <sstream>

#include "mvknuth/errors.hpp"

namespace mvknuth {

namespace {

void check_rank(const Coweight& lhs, const Coweight& rhs) {
  if (lhs.rank() != rhs.rank()) throw RankMismatch(lhs.rank(), rhs.rank());
}

void check_root_fits(const Root& r, int n) {
  if (r.a > n || r.b > n) {
    throw RankMismatch(std::max(r.a, r.b), n);
  }
}

}  // namespace

Coweight::Coweight(std::vector<int> coords) : coords_(std::move(coords)) {}

Coweight Coweight::zero(int n) {
  if (n < 1) throw InvalidValue("rank must be positive");
  return Coweight(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Coweight Coweight::epsilon(int n, int i) {
  if (i < 1 || i > n) throw InvalidValue("epsilon index out of range: " + std::to_string(i));
  Coweight mu = zero(n);
  mu.coords_[static_cast<std::size_t>(i - 1)] = 1;
  return mu;
}

Coweight Coweight::epsilon(int n, std::span<const int> indices) {
  Coweight mu = zero(n);
  for (int i : indices) {
    if (i < 1 || i > n) throw InvalidValue("epsilon index out of range: " + std::to_string(i));
    mu.coords_[static_cast<std::size_t>(i - 1)] += 1;
  }
  return mu;
}

Coweight Coweight::fundamental(int n, int d) {
  if (d < 0 || d > n) throw InvalidValue("fundamental coweight index out of range");
  Coweight mu = zero(n);
  std::fill_n(mu.coords_.begin(), d, 1);
  return mu;
}

Coweight Coweight::rho(int n) {
  Coweight mu = zero(n);
  for (int d = 1; d < n; ++d) mu += fundamental(n, d);
  return mu;
}

Coweight Coweight::canonical() const {
  if (coords_.empty()) return *this;
  const int m = *std::min_element(coords_.begin(), coords_.end());
  std::vector<int> out(coords_);
  for (int& c : out) c -= m;
  return Coweight(std::move(out));
}

Coweight Coweight::operator+(const Coweight& other) const {
  Coweight out(*this);
  out += other;
  return out;
}

Coweight& Coweight::operator+=(const Coweight& other) {
  check_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Coweight Coweight::operator-(const Coweight& other) const { return *this + (-other); }

Coweight Coweight::operator-() const {
  std::vector<int> out(coords_);
  for (int& c : out) c = -c;
  return Coweight(std::move(out));
}

bool operator==(const Coweight& lhs, const Coweight& rhs) {
  if (lhs.rank() != rhs.rank()) return false;
  if (lhs.coords_.empty()) return true;
  const int shift = lhs.coords_[0] - rhs.coords_[0];
  for (std::size_t i = 1; i < lhs.coords_.size(); ++i) {
    if (lhs.coords_[i] - rhs.coords_[i] != shift) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Coweight& lhs, const Coweight& rhs) {
  if (auto c = lhs.rank() <=> rhs.rank(); c != 0) return c;
  return lhs.canonical().coords_ <=> rhs.canonical().coords_;
}

std::string Coweight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

Root::Root(int a, int b) : a(a), b(b) {
  if (a < 1 || b < 1) throw InvalidValue("root indices are 1-based");
  if (a == b) throw InvalidValue("root needs a != b");
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

std::vector<Root> negative_roots(int n) {
  std::vector<Root> out;
  for (const Root& r : positive_roots(n)) out.push_back(r.opposite());
  return out;
}

bool roots_sum_to_root(const Root& beta, const Root& delta) {
  // (eps_a - eps_b) + (eps_c - eps_d) is a root iff b == c, a != d or a == d, b != c.
  return (beta.b == delta.a && beta.a != delta.b) || (beta.a == delta.b && beta.b != delta.a);
}

Root root_sum(const Root& beta, const Root& delta) {
  if (beta.b == delta.a && beta.a != delta.b) return Root{beta.a, delta.b};
  if (beta.a == delta.b && beta.b != delta.a) return Root{delta.a, beta.b};
  throw InvalidValue("sum of " + to_string(beta) + " and " + to_string(delta) + " is not a root");
}

int pairing(const Root& alpha, const Coweight& mu) {
  check_root_fits(alpha, mu.rank());
  return mu[alpha.a] - mu[alpha.b];
}

int wall_value(const Coweight& mu, const AffineRoot& h) { return pairing(h.root, mu) + h.level; }

Sign halfspace_sign(const Coweight& mu, const AffineRoot& h) {
  const int v = wall_value(mu, h);
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

Coweight reflect(const Coweight& mu, const AffineRoot& h) {
  const int v = wall_value(mu, h);
  std::vector<int> out(mu.coords().begin(), mu.coords().end());
  out[static_cast<std::size_t>(h.root.a - 1)] -= v;
  out[static_cast<std::size_t>(h.root.b - 1)] += v;
  return Coweight(std::move(out));
}

AffineRoot shift_by_translation(const AffineRoot& h, const Coweight& mu) {
  return AffineRoot{h.root, h.level + pairing(h.root, mu)};
}

bool is_dominant(const Coweight& mu) {
  for (int i = 1; i < mu.rank(); ++i) {
    if (mu[i] < mu[i + 1]) return false;
  }
  return true;
}

bool is_alcove_vertex(const Coweight& mu) {
  const int n = mu.rank();
  for (int d = 0; d < n; ++d) {
    if (mu == Coweight::fundamental(n, d)) return true;
  }
  return false;
}

int pairing_with_two_rho(const Coweight& mu) {
  const int n = mu.rank();
  int sum = 0;
  for (int i = 1; i <= n; ++i) sum += mu[i] * (n + 1 - 2 * i);
  return sum;
}

std::size_t CoweightHash::operator()(const Coweight& mu) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  const Coweight rep = mu.canonical();
  for (int c : rep.coords()) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
  return h;
}

std::string to_string(const Root& r) {
  return "e" + std::to_string(r.a) + "-e" + std::to_string(r.b);
}

std::string to_string(const AffineRoot& h) {
  return "(" + to_string(h.root) + "," + std::to_string(h.level) + ")";
}

}  // namespace mvknuth
