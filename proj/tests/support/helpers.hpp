#pragma once

#include <random>
#include <vector>

#include "finperm/cycles.hpp"
#include "finperm/oracle.hpp"

namespace testsupport {

inline finperm::Atom A(std::uint64_t n) { return finperm::Atom{n}; }

/// The running example: x -> (x + 2) mod 6 on 0..5, identity elsewhere.
inline finperm::Permutation example1_perm() {
  std::vector<finperm::AtomPair> pairs;
  for (std::uint64_t x = 0; x <= 5; ++x) pairs.emplace_back(A(x), A((x + 2) % 6));
  return finperm::Permutation::from_pairs(pairs);
}

/// The same permutation as four swaps: (1 3)(3 5) then (0 2)(2 4).
inline finperm::PermExpr f_swaps_expr() {
  using finperm::PermExpr;
  return PermExpr::comp(
      PermExpr::comp(PermExpr::swap(A(1), A(3)), PermExpr::swap(A(3), A(5))),
      PermExpr::comp(PermExpr::swap(A(0), A(2)), PermExpr::swap(A(2), A(4))));
}

inline finperm::Permutation random_perm(std::mt19937_64& rng,
                                        std::uint64_t atom_bound = 10,
                                        std::size_t depth = 5) {
  return eval(finperm::random_expr(rng, atom_bound, depth));
}

inline std::vector<finperm::Atom> atom_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<finperm::Atom> out;
  for (std::uint64_t i = lo; i <= hi; ++i) out.push_back(A(i));
  return out;
}

}  // namespace testsupport
