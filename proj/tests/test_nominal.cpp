#include <doctest.h>

#include "finperm/checks.hpp"
#include "finperm/errors.hpp"
#include "finperm/nominal.hpp"
#include "support/helpers.hpp"

using namespace finperm;
using testsupport::A;

TEST_CASE("supports_check probes all swap pairs outside the candidate") {
  GAction<LambdaTerm> lambda = lambda_term_action();

  // closed term: supported by the empty set
  LambdaTerm closed = LambdaTerm::lam(A(1), LambdaTerm::var(A(1)));
  CHECK(supports_check(lambda, closed, AtomSet{}, AtomSet{A(1), A(2), A(3)}));

  CHECK(supports_check(lambda, LambdaTerm::var(A(5)), AtomSet{A(5)},
                       AtomSet{A(6), A(7), A(8)}));
  CHECK_FALSE(supports_check(lambda, LambdaTerm::var(A(5)), AtomSet{},
                             AtomSet{A(5), A(6)}));

  CHECK_THROWS_AS(supports_check(lambda, LambdaTerm::var(A(5)), AtomSet{A(5)},
                                 AtomSet{A(5), A(6)}),
                  contract_error);
}

TEST_CASE("is_supp_check quantifies over a finite universe") {
  GAction<LambdaTerm> lambda = lambda_term_action();

  CHECK(is_supp_check(lambda, LambdaTerm::var(A(5)), AtomSet{A(5)},
                      AtomSet{A(4), A(5), A(6), A(7)}));
  CHECK_FALSE(is_supp_check(lambda, LambdaTerm::var(A(5)), AtomSet{},
                            AtomSet{A(4), A(5), A(6)}));

  // only the identity fixes the whole universe
  AtomSet universe{A(0), A(1), A(2)};
  CHECK(is_supp_check(lambda, LambdaTerm::var(A(0)), universe, universe));

  CHECK_THROWS_AS(is_supp_check(lambda, LambdaTerm::var(A(0)), AtomSet{A(9)},
                                AtomSet{A(0), A(1)}),
                  contract_error);
  AtomSet big{A(0), A(1), A(2), A(3), A(4), A(5), A(6), A(7), A(8)};
  CHECK_THROWS_AS(is_supp_check(lambda, LambdaTerm::var(A(0)), AtomSet{}, big),
                  bound_error);
}

TEST_CASE("is_fresh is membership in the complement of a support") {
  GAction<LambdaTerm> lambda = lambda_term_action();
  CHECK(is_fresh(lambda, A(7), AtomSet{A(5)}));
  CHECK_FALSE(is_fresh(lambda, A(5), AtomSet{A(5)}));
  for (std::uint64_t a = 0; a < 20; ++a) CHECK(is_fresh(lambda, A(a), AtomSet{}));
}

TEST_CASE("make_probe is disjoint from the candidate and adds two fresh atoms") {
  AtomSet probe = make_probe(AtomSet{A(0), A(1), A(4)}, AtomSet{A(1)});
  CHECK_FALSE(probe.intersects(AtomSet{A(1)}));
  CHECK(probe == AtomSet{A(0), A(4), A(5), A(6)});
  CHECK(make_probe(AtomSet{}, AtomSet{}) == AtomSet{A(0), A(1)});
}

TEST_CASE("free variables support a term") {
  CHECK(lambda_support(LambdaTerm::lam(A(1), LambdaTerm::var(A(1)))).atoms == AtomSet{});
  CHECK(lambda_support(LambdaTerm::app(LambdaTerm::var(A(1)), LambdaTerm::var(A(2)))).atoms ==
        AtomSet{A(1), A(2)});

  GAction<LambdaTerm> lambda = lambda_term_action();
  std::mt19937_64 rng(50);
  for (int i = 0; i < 200; ++i) {
    LambdaTerm t = random_term(rng, 5, 4);
    AtomSet fv = lambda_support(t).atoms;
    CHECK(supports_check(lambda, t, fv, make_probe(term_atoms(t), fv)));
  }
}

TEST_CASE("every shipped nominal instance is supported by its declared set") {
  // discrete elements: empty support
  GAction<int> ints = discrete_action<int>();
  CHECK(supports_check(ints, 42, AtomSet{}, AtomSet{A(0), A(1), A(2)}));

  // an atom: its singleton
  CHECK(supports_check(atom_action(), A(5), AtomSet{A(5)}, make_probe(AtomSet{A(5)}, AtomSet{A(5)})));

  // an atom set: itself (under the image action)
  AtomSet s{A(1), A(4)};
  CHECK(supports_check(atom_set_action(), s, s, make_probe(s, s)));
}

TEST_CASE("min_support_search finds the least supporting subset") {
  CHECK(min_support_search(atom_action(), A(5), AtomSet{A(4), A(5), A(6)}) ==
        AtomSet{A(5)});
  CHECK(min_support_search(discrete_action<int>(), 9, AtomSet{A(0), A(1), A(2)}) ==
        AtomSet{});
  GAction<LambdaTerm> lambda = lambda_term_action();
  CHECK(min_support_search(lambda,
                           LambdaTerm::app(LambdaTerm::var(A(1)), LambdaTerm::var(A(2))),
                           AtomSet{A(1), A(2), A(3)}) == AtomSet{A(1), A(2)});
  CHECK(min_support_search(lambda, LambdaTerm::lam(A(1), LambdaTerm::var(A(1))),
                           AtomSet{A(1), A(2), A(3)}) == AtomSet{});

  AtomSet seven{A(0), A(1), A(2), A(3), A(4), A(5), A(6)};
  CHECK_THROWS_AS(min_support_search(lambda, LambdaTerm::var(A(0)), seven), bound_error);
}

TEST_CASE("the two support definitions agree on the fixed grid") {
  SuiteResult grid = check_support_equivalence();
  CHECK(grid.checks == 46208);  // 1444 terms x 32 candidate sets
  CHECK(grid.failures.empty());
}

TEST_CASE("support is monotone under enlargement") {
  GAction<LambdaTerm> lambda = lambda_term_action();
  std::vector<Atom> alphabet{A(0), A(1), A(2), A(3)};
  AtomSet universe{A(0), A(1), A(2), A(3), A(4)};
  AtomSet pool = universe.set_union(AtomSet{A(5), A(6)});
  std::vector<LambdaTerm> terms = enumerate_terms(alphabet, 2);

  const auto& atoms = universe.atoms();
  for (const LambdaTerm& t : terms) {
    for (std::size_t mask = 0; mask < 32; ++mask) {
      std::vector<Atom> chosen;
      for (std::size_t bit = 0; bit < atoms.size(); ++bit)
        if (mask & (1u << bit)) chosen.push_back(atoms[bit]);
      AtomSet small(chosen);
      if (!is_supp_check(lambda, t, small, pool)) continue;
      for (std::size_t larger = 0; larger < 32; ++larger) {
        if ((larger & mask) != mask) continue;
        std::vector<Atom> grown;
        for (std::size_t bit = 0; bit < atoms.size(); ++bit)
          if (larger & (1u << bit)) grown.push_back(atoms[bit]);
        CHECK(is_supp_check(lambda, t, AtomSet(grown), pool));
      }
    }
  }
}
