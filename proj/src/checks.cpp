#include "finperm/checks.hpp"

#include "finperm/cycles.hpp"
#include "finperm/nominal.hpp"
#include "finperm/oracle.hpp"

namespace finperm {

SuiteResult check_group_laws(std::uint64_t seed, std::size_t count) {
  SuiteResult result;
  result.name = "group-laws";
  std::mt19937_64 rng(seed);
  Permutation e = identity();
  for (std::size_t i = 0; i < count; ++i) {
    Permutation p = eval(random_expr(rng, 10, 5));
    Permutation q = eval(random_expr(rng, 10, 5));
    Permutation r = eval(random_expr(rng, 10, 5));
    ++result.checks;
    auto fail = [&](const char* law) {
      result.failures.push_back("triple #" + std::to_string(i) + ": " + law);
    };
    if (!perm_eq(compose(p, compose(q, r)), compose(compose(p, q), r)))
      fail("associativity");
    if (!perm_eq(compose(e, p), p) || !perm_eq(compose(p, e), p))
      fail("identity element");
    if (!perm_eq(compose(p, p.inverse()), e) || !perm_eq(compose(p.inverse(), p), e))
      fail("inverse element");
  }
  return result;
}

SuiteResult check_normalization_roundtrip(std::uint64_t seed, std::size_t count,
                                          std::uint64_t atom_bound,
                                          std::size_t max_depth) {
  SuiteResult result;
  result.name = "normalization-roundtrip";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    PermExpr e = random_expr(rng, atom_bound, max_depth);
    PermExpr n = normalize(e);
    ++result.checks;
    if (!expr_equiv(e, n))
      result.failures.push_back("expression #" + std::to_string(i) +
                                " is not equivalent to its normal form");
    if (atoms_of(n) != support(eval(e)))
      result.failures.push_back("normal form of expression #" + std::to_string(i) +
                                " mentions atoms outside the support");
  }
  return result;
}

SuiteResult check_support_equivalence() {
  SuiteResult result;
  result.name = "support-equivalence";
  GAction<LambdaTerm> action = lambda_term_action();

  std::vector<Atom> alphabet{Atom{0}, Atom{1}, Atom{2}, Atom{3}};
  std::vector<LambdaTerm> terms = enumerate_terms(alphabet, 3);
  AtomSet universe{Atom{0}, Atom{1}, Atom{2}, Atom{3}, Atom{4}};
  AtomSet pool = universe.set_union(AtomSet{Atom{5}, Atom{6}});

  const auto& candidates = universe.atoms();
  for (std::size_t mask = 0; mask < (1u << candidates.size()); ++mask) {
    std::vector<Atom> chosen;
    for (std::size_t bit = 0; bit < candidates.size(); ++bit)
      if (mask & (1u << bit)) chosen.push_back(candidates[bit]);
    AtomSet a_set(chosen);
    AtomSet probe = pool.set_minus(a_set);  // == (universe \ A) + the fresh pair

    // Permutations fixing A, with their transposition decompositions.
    std::vector<std::pair<Permutation, TranspositionList>> fixing;
    for (const Permutation& p : enumerate_fixing(pool, a_set)) {
      TranspositionList ts;
      for (const Cycle& c : perm_to_cycles(p))
        for (const AtomPair& t : cycle_to_transpositions(c)) ts.push_back(t);
      fixing.emplace_back(p, std::move(ts));
    }

    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
      const LambdaTerm& x = terms[ti];
      ++result.checks;
      bool swap_based = supports_check(action, x, a_set, probe);
      bool quantified = true;
      for (const auto& [p, ts] : fixing) {
        if (!action.equal(action.act(p, x), x)) {
          quantified = false;
          break;
        }
      }
      if (swap_based != quantified) {
        result.failures.push_back("term #" + std::to_string(ti) + " with A = " +
                                  to_string(a_set) + ": swap-based says " +
                                  (swap_based ? "yes" : "no") +
                                  ", quantified says " + (quantified ? "yes" : "no"));
        continue;
      }
      if (!swap_based) continue;
      // Replay the accepting case through each permutation's decomposition:
      // every transposition lies outside A, so the swaps must fix x one by
      // one, carrying the quantified check.
      for (const auto& [p, ts] : fixing) {
        LambdaTerm y = x;
        for (auto it = ts.rbegin(); it != ts.rend(); ++it)
          y = action.act(transposition(it->first, it->second), y);
        if (!action.equal(y, x)) {
          result.failures.push_back("term #" + std::to_string(ti) + " with A = " +
                                    to_string(a_set) +
                                    ": transposition replay of " + to_string(p) +
                                    " moves the term");
          break;
        }
      }
    }
  }
  return result;
}

}  // namespace finperm
