#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finperm/perm.hpp"

namespace finperm {

/// Ordered sequence of swaps; denotes the permutation obtained by folding,
/// with the last pair applied first (see transpositions_to_perm).
using TranspositionList = std::vector<AtomPair>;

/// Syntax tree for permutations built from the identity, swaps and
/// composition. The tree is deliberately liberal: swap(a, a) and redundant
/// compositions are legal, so normalization has something to erase.
///
/// Immutable; copies share structure and are freely shareable across threads.
class PermExpr {
public:
  enum class Kind { id, swap, comp };

  static PermExpr id();
  static PermExpr swap(Atom a, Atom b);
  static PermExpr comp(PermExpr left, PermExpr right);

  Kind kind() const { return node_->kind; }
  bool is_id() const { return kind() == Kind::id; }
  bool is_swap() const { return kind() == Kind::swap; }
  bool is_comp() const { return kind() == Kind::comp; }

  Atom swap_first() const;   // contract_error unless kind() == swap
  Atom swap_second() const;  // contract_error unless kind() == swap
  PermExpr left() const;     // contract_error unless kind() == comp
  PermExpr right() const;    // contract_error unless kind() == comp

  /// Structural equality.
  friend bool operator==(const PermExpr& a, const PermExpr& b);

private:
  struct Node {
    Kind kind;
    Atom a, b;
    std::shared_ptr<const Node> left, right;
  };

  explicit PermExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The permutation an expression denotes. In comp(p, q) the right operand
/// acts first, matching compose.
Permutation eval(const PermExpr& e);

/// Atoms occurring syntactically, including both components of every swap.
AtomSet atoms_of(const PermExpr& e);

/// support(eval(e)): the syntactic atoms that the denoted permutation moves.
AtomSet semantic_support(const PermExpr& e);

/// True iff eval(q) agrees with eval(p) on every syntactic atom of p.
bool subsumes(const PermExpr& p, const PermExpr& q);

/// Decidable extensional equivalence: mutual subsumption, equivalent to
/// perm_eq(eval(p), eval(q)).
bool expr_equiv(const PermExpr& p, const PermExpr& q);

/// Parses the swap grammar:
///   expr := 'id' | '(' nat nat ')' | expr expr | expr ';' expr | '(' expr ')'
/// Juxtaposition and ';' both compose, left-associatively; the right operand
/// of a composition is the one applied first. Whitespace-insensitive.
/// Throws parse_error with offset and expected-token description.
PermExpr parse_expr(std::string_view text);

/// Inverse of parse_expr up to structure: the printed form reparses to a
/// structurally equal tree.
std::string format_expr(const PermExpr& e);

}  // namespace finperm
