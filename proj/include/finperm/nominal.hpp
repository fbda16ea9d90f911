#pragma once

#include <algorithm>

#include "finperm/errors.hpp"
#include "finperm/gset.hpp"
#include "finperm/lambda.hpp"
#include "finperm/oracle.hpp"

namespace finperm {

/// Witness that an element is finitely supported: the (some, not least)
/// supporting atom set.
struct FiniteSupport {
  AtomSet atoms;

  friend bool operator==(const FiniteSupport&, const FiniteSupport&) = default;
};

/// Builds the probe set for supports_check: every atom relevant to the
/// element, minus the candidate support, plus two deterministically fresh
/// atoms (max + 1 and max + 2 over everything mentioned).
AtomSet make_probe(const AtomSet& relevant, const AtomSet& support_candidate);

/// The swap-based support check: true iff every transposition of two probe
/// atoms fixes x. The probe stands in for the atoms outside the candidate
/// support, so it must not intersect it (contract_error); to be conclusive
/// it should cover the atoms relevant to x plus two fresh ones (make_probe).
template <typename C>
bool supports_check(const GAction<C>& g, const C& x, const AtomSet& support_candidate,
                    const AtomSet& probe) {
  if (probe.intersects(support_candidate))
    throw contract_error("supports_check: probe intersects the candidate support");
  const auto& atoms = probe.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (!g.equal(g.act(transposition(atoms[i], atoms[j]), x), x)) return false;
  return true;
}

/// The quantifier-based support check, with the permutations ranging over a
/// finite universe: true iff every permutation of the universe fixing the
/// candidate pointwise fixes x. Requires the candidate to be inside the
/// universe (contract_error) and |universe| <= 8 (bound_error).
///
/// The universe must contain every atom relevant to x plus two atoms fresh
/// for x and the candidate for the verdict to be meaningful; with fewer
/// there may be no permutation left to witness a failure.
template <typename C>
bool is_supp_check(const GAction<C>& g, const C& x, const AtomSet& support_candidate,
                   const AtomSet& universe) {
  if (!support_candidate.subset_of(universe))
    throw contract_error("is_supp_check: candidate support must lie in the universe");
  if (universe.size() > 8)
    throw bound_error("is_supp_check: universe has " + std::to_string(universe.size()) +
                      " atoms; the factorial bound allows at most 8");
  for (const Permutation& p : enumerate_fixing(universe, support_candidate))
    if (!g.equal(g.act(p, x), x)) return false;
  return true;
}

/// Freshness relative to a known (verified or trusted) support of x.
template <typename C>
bool is_fresh(const GAction<C>&, Atom a, const AtomSet& supp_of_x) {
  return !supp_of_x.contains(a);
}

/// The free variables of a term, packaged as its supporting set.
FiniteSupport lambda_support(const LambdaTerm& t);

/// Smallest subset of the universe (by size, then lexicographically) passing
/// is_supp_check. Test oracle only: least supports are a classical notion.
/// |universe| <= 6 (bound_error).
template <typename C>
AtomSet min_support_search(const GAction<C>& g, const C& x, const AtomSet& universe) {
  if (universe.size() > 6)
    throw bound_error("min_support_search: universe has " +
                      std::to_string(universe.size()) +
                      " atoms; the subset search allows at most 6");
  const auto& atoms = universe.atoms();
  std::size_t n = atoms.size();
  std::vector<std::vector<Atom>> subsets(1ull << n);
  for (std::size_t mask = 0; mask < subsets.size(); ++mask)
    for (std::size_t bit = 0; bit < n; ++bit)
      if (mask & (1ull << bit)) subsets[mask].push_back(atoms[bit]);
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<Atom>& a, const std::vector<Atom>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& subset : subsets) {
    AtomSet candidate(subset);
    if (is_supp_check(g, x, candidate, universe)) return candidate;
  }
  // The full universe always supports x within its own enumeration
  // (is_supp_check quantifies over the identity alone), so this is
  // unreachable; kept for the compiler.
  return universe;
}

}  // namespace finperm
