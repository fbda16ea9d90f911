#include <doctest.h>

#include <set>

#include "finperm/errors.hpp"
#include "finperm/oracle.hpp"
#include "support/helpers.hpp"

using namespace finperm;
using testsupport::A;

TEST_CASE("enumerate_perms lists the symmetric group in lexicographic order") {
  std::vector<Permutation> s2;
  for (const Permutation& p : enumerate_perms(AtomSet{A(1), A(2)})) s2.push_back(p);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == identity());
  CHECK(s2[1] == transposition(A(1), A(2)));

  std::size_t count = 0;
  for ([[maybe_unused]] const Permutation& p : enumerate_perms(AtomSet{A(1), A(2), A(3)}))
    ++count;
  CHECK(count == 6);
  CHECK(enumerate_perms(AtomSet{A(1), A(2), A(3)}).size() == 6);

  std::vector<Permutation> s0;
  for (const Permutation& p : enumerate_perms(AtomSet{})) s0.push_back(p);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0] == identity());
}

TEST_CASE("enumeration is deterministic and free of repeats") {
  AtomSet universe{A(0), A(1), A(2), A(3)};
  std::vector<Permutation> first, second;
  for (const Permutation& p : enumerate_perms(universe)) first.push_back(p);
  for (const Permutation& p : enumerate_perms(universe)) second.push_back(p);
  CHECK(first == second);
  CHECK(first.size() == 24);

  std::set<std::string> keys;
  for (const Permutation& p : first) keys.insert(to_string(p));
  CHECK(keys.size() == first.size());

  // the image tuples come out in strictly increasing lexicographic order
  std::vector<std::vector<Atom>> images;
  for (const Permutation& p : first) {
    std::vector<Atom> image;
    for (Atom a : universe) image.push_back(apply(p, a));
    images.push_back(image);
  }
  for (std::size_t i = 1; i < images.size(); ++i) CHECK(images[i - 1] < images[i]);
}

TEST_CASE("enumerated permutations satisfy the representation invariants") {
  for (const Permutation& p : enumerate_perms(AtomSet{A(0), A(1), A(2), A(3), A(4)})) {
    AtomSet keys, values;
    for (const auto& [from, to] : p.mapping()) {
      CHECK(from != to);
      keys.insert(from);
      values.insert(to);
    }
    CHECK(keys == values);
    CHECK(keys.subset_of(AtomSet{A(0), A(1), A(2), A(3), A(4)}));
  }
}

TEST_CASE("composition stays inside the enumerated group") {
  AtomSet universe{A(1), A(2), A(3), A(4)};
  std::vector<Permutation> all;
  for (const Permutation& p : enumerate_perms(universe)) all.push_back(p);
  for (const Permutation& p : all)
    for (const Permutation& q : all) {
      Permutation c = compose(p, q);
      bool found = false;
      for (const Permutation& r : all)
        if (perm_eq(c, r)) found = true;
      CHECK(found);
    }
}

TEST_CASE("enumerate_fixing keeps the fixed atoms fixed") {
  std::vector<Permutation> fixing;
  for (const Permutation& p :
       enumerate_fixing(AtomSet{A(4), A(5), A(6), A(7)}, AtomSet{A(5)}))
    fixing.push_back(p);
  CHECK(fixing.size() == 6);
  for (const Permutation& p : fixing) CHECK(apply(p, A(5)) == A(5));

  std::vector<Permutation> only_id;
  AtomSet universe{A(1), A(2)};
  for (const Permutation& p : enumerate_fixing(universe, universe)) only_id.push_back(p);
  REQUIRE(only_id.size() == 1);
  CHECK(only_id[0] == identity());

  std::vector<Permutation> unconstrained, plain;
  for (const Permutation& p : enumerate_fixing(universe, AtomSet{})) unconstrained.push_back(p);
  for (const Permutation& p : enumerate_perms(universe)) plain.push_back(p);
  CHECK(unconstrained == plain);

  CHECK_THROWS_AS(enumerate_fixing(AtomSet{A(1)}, AtomSet{A(2)}), contract_error);
}

TEST_CASE("enumeration bounds guard against factorial blow-up") {
  std::vector<Atom> nine = testsupport::atom_range(0, 8);
  CHECK_THROWS_AS(enumerate_perms(AtomSet(nine)), bound_error);
  CHECK_THROWS_AS(enumerate_fixing(AtomSet(nine), AtomSet{}), bound_error);
  // a large universe is fine as long as the moving part is small
  std::vector<Atom> fixed = testsupport::atom_range(0, 7);
  CHECK(enumerate_fixing(AtomSet(nine), AtomSet(fixed)).size() == 1);
}

TEST_CASE("random_expr is deterministic in its seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(random_expr(seed, 6, 4) == random_expr(seed, 6, 4));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PermExpr leaf = random_expr(seed, 6, 0);
    CHECK((leaf.is_id() || leaf.is_swap()));
  }
}

TEST_CASE("random_expr reaches both cancelling and non-cancelling shapes") {
  std::mt19937_64 rng(60);
  std::set<std::string> distinct;
  std::size_t identities = 0;
  for (int i = 0; i < 1000; ++i) {
    PermExpr e = random_expr(rng, 6, 4);
    Permutation p = eval(e);
    distinct.insert(to_string(p));
    bool has_comp = e.is_comp();
    if (has_comp && p.is_identity()) ++identities;  // composition that cancels away
  }
  CHECK(distinct.size() > 20);
  CHECK(identities > 0);
}

TEST_CASE("expression and term enumeration hit the expected counts") {
  std::vector<Atom> three{A(0), A(1), A(2)};
  CHECK(enumerate_exprs(three, 1).size() == 10);   // id + 9 ordered swaps
  CHECK(enumerate_exprs(three, 2).size() == 110);  // + 100 compositions

  std::vector<Atom> four{A(0), A(1), A(2), A(3)};
  CHECK(enumerate_terms(four, 1).size() == 4);
  CHECK(enumerate_terms(four, 2).size() == 36);
  CHECK(enumerate_terms(four, 3).size() == 1444);

  std::set<std::string> shapes;
  for (const PermExpr& e : enumerate_exprs(three, 2)) shapes.insert(format_expr(e));
  CHECK(shapes.size() == 110);  // enumeration yields no duplicates
}
