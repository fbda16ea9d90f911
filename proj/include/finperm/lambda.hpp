#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "finperm/gset.hpp"

namespace finperm {

/// Untyped lambda-calculus term over atoms: Var(a) | App(t, t) | Lam(a, t).
/// Immutable shared tree; operator== is structural.
class LambdaTerm {
public:
  enum class Kind { var, app, lam };

  static LambdaTerm var(Atom a);
  static LambdaTerm app(LambdaTerm fn, LambdaTerm arg);
  static LambdaTerm lam(Atom binder, LambdaTerm body);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::var; }
  bool is_app() const { return kind() == Kind::app; }
  bool is_lam() const { return kind() == Kind::lam; }

  Atom atom() const;        // var: the variable; lam: the binder
  LambdaTerm fn() const;    // contract_error unless app
  LambdaTerm arg() const;   // contract_error unless app
  LambdaTerm body() const;  // contract_error unless lam

  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b);

private:
  struct Node {
    Kind kind;
    Atom atom;
    std::shared_ptr<const Node> first, second;
  };

  explicit LambdaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The nominal action: every atom in the term is renamed, binders included.
/// No capture-avoidance is involved; permutations are bijective renamings.
LambdaTerm lambda_act(const Permutation& p, const LambdaTerm& t);

/// Free variables; lam binds its atom within its body.
AtomSet free_vars(const LambdaTerm& t);

/// Every atom occurring in the term, binders included.
AtomSet term_atoms(const LambdaTerm& t);

/// Equality up to renaming of bound variables, decided by swapping both
/// binders to a common fresh atom.
bool alpha_eq(const LambdaTerm& a, const LambdaTerm& b);

/// Lambda terms with the nominal action, compared up to alpha. Alpha is the
/// equality under which a term is supported by its free variables.
GAction<LambdaTerm> lambda_term_action();

/// Concrete syntax: variables are `x3`, abstraction is `\x3. body` (the body
/// extends as far right as possible), application is juxtaposition and
/// associates left, parentheses group.
LambdaTerm parse_term(std::string_view text);
std::string format_term(const LambdaTerm& t);

}  // namespace finperm
