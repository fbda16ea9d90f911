#pragma once

#include <utility>
#include <vector>

#include "finperm/atom.hpp"

namespace finperm {

using AtomPair = std::pair<Atom, Atom>;

/// A bijection on atoms that moves only finitely many of them.
///
/// Both directions are stored as association vectors sorted by key, with
/// fixed-point entries dropped. The stored form is canonical, so structural
/// equality coincides with extensional equality (see perm_eq).
class Permutation {
public:
  Permutation() = default;  // identity

  /// Builds a permutation from explicit [from, to] pairs. Rejects duplicate
  /// sources, fixed-point entries and non-bijective maps (validation_error).
  /// This is the deserialization entry point, so it rejects rather than
  /// silently repairing.
  static Permutation from_pairs(const std::vector<AtomPair>& pairs);

  Atom apply(Atom a) const;          // forward(a), or a outside the support
  Atom apply_inverse(Atom a) const;  // backward(a), or a outside the support

  Permutation inverse() const;

  AtomSet support() const;
  std::size_t support_size() const { return forward_.size(); }
  bool is_identity() const { return forward_.empty(); }

  /// Forward map as sorted [from, to] pairs, fixed points omitted.
  const std::vector<AtomPair>& mapping() const { return forward_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation transposition(Atom, Atom);

  // pairs must be sorted by key, bijective on their own key set, and free of
  // fixed points; not revalidated.
  static Permutation from_canonical(std::vector<AtomPair> forward);

  std::vector<AtomPair> forward_;
  std::vector<AtomPair> backward_;
};

Permutation identity();

/// The swap of a and b; transposition(a, a) collapses to the identity so no
/// fixed-point entry is ever stored.
Permutation transposition(Atom a, Atom b);

Atom apply(const Permutation& p, Atom a);

/// Group multiplication: the right operand acts first,
/// apply(compose(p, q), a) = apply(p, apply(q, a)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

AtomSet support(const Permutation& p);

/// Extensional equality, decided on the union of the supports.
bool perm_eq(const Permutation& p, const Permutation& q);

std::string to_string(const Permutation& p);

}  // namespace finperm
