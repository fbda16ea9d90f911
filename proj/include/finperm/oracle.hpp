#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <random>
#include <span>

#include "finperm/lambda.hpp"
#include "finperm/perm_expr.hpp"

namespace finperm {

/// Lazily enumerates every bijection of a small atom universe, in
/// lexicographic order of the image tuple (the identity comes first).
/// Universes are capped at 8 atoms (40320 permutations).
class PermEnumeration {
public:
  explicit PermEnumeration(AtomSet universe);  // bound_error beyond 8 atoms

  class iterator {
  public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;  // end
    Permutation operator*() const;
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done() == b.done() && (a.done() || a.index_ == b.index_);
    }

  private:
    friend class PermEnumeration;
    explicit iterator(const std::vector<Atom>* domain);

    bool done() const { return domain_ == nullptr; }

    const std::vector<Atom>* domain_ = nullptr;
    std::vector<Atom> image_;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return iterator(&domain_); }
  iterator end() const { return iterator(); }

  /// Number of permutations yielded: |universe|!
  std::uint64_t size() const;

  const AtomSet& universe() const { return universe_; }

private:
  AtomSet universe_;
  std::vector<Atom> domain_;  // == universe_.atoms(), kept stable for iterators
};

/// Every bijection of the universe. |universe| <= 8 (bound_error).
PermEnumeration enumerate_perms(const AtomSet& universe);

/// Every bijection of the universe fixing each atom of `fixed` pointwise,
/// i.e. the permutations of universe \ fixed. Requires fixed to be a subset
/// of the universe (contract_error) and |universe \ fixed| <= 8 (bound_error).
PermEnumeration enumerate_fixing(const AtomSet& universe, const AtomSet& fixed);

/// Deterministic seeded expression generator: node kinds id/swap/comp drawn
/// with weights 1/4/4, atoms uniform in [0, atom_bound), subtree depth
/// bounded by max_depth (a depth budget of 0 forces a leaf).
PermExpr random_expr(std::uint64_t seed, std::uint64_t atom_bound,
                     std::size_t max_depth);

/// The generator behind random_expr, exposed so callers can draw several
/// expressions from one seeded stream.
PermExpr random_expr(std::mt19937_64& rng, std::uint64_t atom_bound,
                     std::size_t max_depth);

/// Deterministic seeded lambda-term generator: var/app/lam with weights
/// 2/3/3, always a variable once the depth budget is spent.
LambdaTerm random_term(std::mt19937_64& rng, std::uint64_t atom_bound,
                       std::size_t max_depth);

/// Every expression over the given atoms of height at most max_height
/// (a leaf has height 1). Swaps range over all ordered atom pairs,
/// including the degenerate (a, a).
std::vector<PermExpr> enumerate_exprs(std::span<const Atom> atoms,
                                      std::size_t max_height);

/// Every lambda term over the given atoms of height at most max_height
/// (a variable has height 1).
std::vector<LambdaTerm> enumerate_terms(std::span<const Atom> atoms,
                                        std::size_t max_height);

}  // namespace finperm
