#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finperm/perm_expr.hpp"

namespace finperm {

/// An orbit segment, split into its head and the remaining tail; the full
/// sequence is head : tail. Structural invariants (no duplicates, minimum
/// length) are validated dynamically where an operation needs them rather
/// than enforced by construction.
class Cycle {
public:
  Cycle(Atom head, std::vector<Atom> tail);
  static Cycle from_sequence(std::span<const Atom> atoms);  // contract_error on empty

  Atom head() const { return head_; }
  const std::vector<Atom>& tail() const { return tail_; }
  std::vector<Atom> full() const;  // head : tail
  std::size_t length() const { return 1 + tail_.size(); }

  bool contains(Atom a) const;
  bool duplicate_free() const;

  /// The same orbit written with its minimum atom first.
  Cycle rotated_min_first() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

private:
  Atom head_;
  std::vector<Atom> tail_;
};

using CycleList = std::vector<Cycle>;

std::string to_string(const Cycle& c);

/// Unfolds a cycle (a b1 ... bn) into [(a,b1), (b1,b2), ..., (bn-1,bn)].
TranspositionList cycle_to_transpositions(const Cycle& c);

/// Folds a transposition list into a permutation; the head of the list is
/// applied last, so [(a,b)] ++ rest denotes transposition(a,b) after rest.
Permutation transpositions_to_perm(const TranspositionList& ts);

/// head in supp(f), f maps each element of head:tail to the next, head does
/// not reoccur in the tail, and the tail is nonempty.
bool is_prefix(const Permutation& f, const Cycle& c);

/// A prefix whose last element maps back to the head.
bool is_closed_prefix(const Permutation& f, const Cycle& c);

/// Follows the orbit of a under f for at most fuel extension steps, i.e.
/// produces a prefix with head a of length at most fuel + 1. With
/// fuel >= |supp(f)| the result is closed. Requires a in supp(f)
/// (contract_error otherwise).
Cycle compute_prefix(const Permutation& f, std::size_t fuel, Atom a);

/// Extends compute_prefix over a list of atoms: atoms already covered by an
/// accumulated cycle are skipped, new cycles are prepended to acc. Every
/// atom must lie in supp(f) (contract_error otherwise).
CycleList compute_cycles(const Permutation& f, std::size_t fuel,
                         std::span<const Atom> atoms, CycleList acc);

/// The disjoint-cycle decomposition: compute_cycles over supp(f) in
/// ascending order with fuel |supp(f)|. The identity yields an empty list.
CycleList perm_to_cycles(const Permutation& f);

/// Rebuilds an expression from disjoint cycles: a right-nested composition
/// of right-nested swap chains. Each cycle must be duplicate-free with
/// length >= 2 and the cycles pairwise disjoint (validation_error otherwise,
/// naming the offending cycle).
PermExpr cycles_to_expr(const CycleList& cycles);

/// Unique form for a list of disjoint cycles: every cycle rotated so its
/// minimum atom leads, cycles sorted ascending by head. Semantics preserved.
CycleList canonical_cycles(const CycleList& cycles);

/// Canonical representative of an expression's equivalence class, built by
/// decomposing eval(e) into cycles and rebuilding. Structurally equal
/// results characterize extensionally equal inputs, and the result mentions
/// exactly the atoms the denoted permutation moves.
PermExpr normalize(const PermExpr& e);

/// Cycle notation, canonical order: "(0 2 4)(1 3 5)"; "id" for the empty
/// list.
std::string format_cycles(const CycleList& cycles);

/// Parses cycle notation. Groups may come in any order and rotation; each
/// needs >= 2 distinct atoms and the groups must be pairwise disjoint
/// (validation_error). "id" denotes the empty list.
CycleList parse_cycles(std::string_view text);

}  // namespace finperm
