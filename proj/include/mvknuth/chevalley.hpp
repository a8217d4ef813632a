#pragma once

// Symbolic rewriting of root subgroup products U_{h_1}(x_1) ... U_{h_k}(x_k) acting on a
// torus fixed point. Parameters are integer polynomials in symbols; a constraint set
// lists symbols that range over nonzero scalars only.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mvknuth/cells.hpp"
#include "mvknuth/expr.hpp"
#include "mvknuth/roots.hpp"

namespace mvknuth {

struct RewriteState {
  FactorWord word;
  Coweight target;
  std::set<Symbol> constraints;
  Symbol next_symbol = 0;
};

RewriteState initial_state(const FactorWord& w, const Coweight& target);

/// c with U_beta(x) U_delta(y) = U_{beta+delta}(c x y) U_delta(y) U_beta(x), read off the
/// group commutator of the integer matrices I + E_beta and I + E_delta. 0 when they commute.
/// Throws InvalidValue for delta = -beta.
int structure_constant(const Root& beta, const Root& delta, int n);

/// Swaps factors i and i+1, inserting the commutator factor in front when there is one.
RewriteState commute(const RewriteState& s, std::size_t i);

/// Deletes the longest suffix of factors fixing the target point.
RewriteState absorb(const RewriteState& s);

/// Merges factors i and i+1, which must carry the same affine root. A factor whose merged
/// parameter vanishes is dropped.
RewriteState gather(const RewriteState& s, std::size_t i);

/// Value of a symbol of the previous state, numerator / denominator, in terms of the
/// symbols of the next state. Symbols without a preimage keep their value.
struct Preimage {
  Symbol symbol;
  Expr numerator;
  Expr denominator = Expr::constant(1);
};

struct TraceStep {
  std::string action;
  std::size_t position = 0;
  std::string detail;
  RewriteState state;
  std::vector<Preimage> preimages;
};

struct NormalForm {
  RewriteState state;
  std::vector<TraceStep> trace;
};

/// Deterministic strategy: collect the factors into the order (non-stabilizer first, then by
/// root, then by level) using commute, absorb the stabilizer suffix, gather equal roots,
/// reparametrize parameters that can be replaced by a fresh symbol (a linear term in an
/// unconstrained symbol of its own, or a signed monomial after constraining its symbols to
/// be nonzero), and finally rename symbols in order of first appearance.
/// Throws InternalError when more than `max_steps` rewrites are needed (0 = automatic bound).
NormalForm normal_form(const RewriteState& s, std::size_t max_steps = 0);

struct SoundnessReport {
  std::size_t steps = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;
};

/// Replays each step of `trace` on random specializations over F_p respecting the
/// constraints of the later state and compares the lattice points before and after.
SoundnessReport check_trace(const RewriteState& initial, const std::vector<TraceStep>& trace, int p, int samples,
                            std::uint64_t seed);

/// Checks U_beta(s t^k) U_delta(u t^l) = U_{beta+delta}(c s u t^{k+l}) U_delta(u t^l) U_beta(s t^k)
/// as an identity of integer polynomial matrices for every pair of non-opposite roots and
/// levels 0..2. Returns the number of identities checked; throws InternalError on a failure.
std::size_t check_structure_constants(int n);

std::string to_string(const RewriteState& s);

}  // namespace mvknuth
