#include <doctest.h>

#include "finperm/errors.hpp"
#include "finperm/perm.hpp"
#include "support/helpers.hpp"

using namespace finperm;
using testsupport::A;
using testsupport::example1_perm;
using testsupport::random_perm;

TEST_CASE("identity fixes everything and has empty support") {
  CHECK(apply(identity(), A(7)) == A(7));
  CHECK(support(identity()).empty());

  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Permutation p = random_perm(rng);
    CHECK(perm_eq(compose(identity(), p), p));
    CHECK(perm_eq(compose(p, identity()), p));
  }
}

TEST_CASE("transposition swaps its pair and fixes the rest") {
  Permutation t = transposition(A(1), A(3));
  CHECK(apply(t, A(1)) == A(3));
  CHECK(apply(t, A(3)) == A(1));
  CHECK(apply(t, A(5)) == A(5));

  CHECK(transposition(A(4), A(4)) == identity());
  CHECK(support(transposition(A(0), A(2))) == AtomSet{A(0), A(2)});
}

TEST_CASE("apply follows the stored map and is the identity outside it") {
  CHECK(apply(transposition(A(1), A(3)), A(1)) == A(3));
  CHECK(apply(example1_perm(), A(4)) == A(0));

  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    Permutation p = random_perm(rng);
    Atom outside{p.support().empty() ? 100 : p.support().max().id + 1};
    CHECK(apply(p, outside) == outside);
  }
}

TEST_CASE("compose applies the right operand first") {
  Permutation c = compose(transposition(A(1), A(3)), transposition(A(3), A(5)));
  CHECK(apply(c, A(1)) == A(3));
  CHECK(apply(c, A(3)) == A(5));
  CHECK(apply(c, A(5)) == A(1));

  Permutation t = transposition(A(2), A(9));
  CHECK(compose(t, t) == identity());

  // the composition order is observable: flipping it sends 1 elsewhere
  CHECK(apply(compose(transposition(A(3), A(5)), transposition(A(1), A(3))), A(1)) == A(5));

  // Disjoint transpositions: counting moved atoms over the support union
  // must give all four.
  Permutation d = compose(transposition(A(1), A(2)), transposition(A(3), A(4)));
  std::size_t moved = 0;
  for (Atom a : AtomSet{A(1), A(2), A(3), A(4)})
    if (apply(d, a) != a) ++moved;
  CHECK(moved == 4);
  CHECK(support(d).size() == 4);
}

TEST_CASE("inverse undoes a permutation") {
  CHECK(inverse(transposition(A(4), A(9))) == transposition(A(4), A(9)));
  CHECK(inverse(identity()) == identity());

  // Invert the running example by brute-force table search.
  Permutation f = example1_perm();
  Permutation f_inv = inverse(f);
  for (std::uint64_t y = 0; y <= 5; ++y) {
    Atom preimage{99};
    for (std::uint64_t x = 0; x <= 5; ++x)
      if (apply(f, A(x)) == A(y)) preimage = A(x);
    CHECK(apply(f_inv, A(y)) == preimage);
  }
  CHECK(apply(f_inv, A(3)) == A(1));
  CHECK(support(f_inv) == support(f));
}

TEST_CASE("support holds exactly the moved atoms") {
  CHECK(support(example1_perm()) == AtomSet{A(0), A(1), A(2), A(3), A(4), A(5)});
  CHECK(support(identity()) == AtomSet{});
  CHECK(support(compose(transposition(A(1), A(2)), transposition(A(2), A(1)))) ==
        AtomSet{});
}

TEST_CASE("perm_eq is extensional equality") {
  Permutation via_swaps = compose(transposition(A(1), A(3)), transposition(A(3), A(5)));
  Permutation three_cycle =
      Permutation::from_pairs({{A(1), A(3)}, {A(3), A(5)}, {A(5), A(1)}});
  CHECK(perm_eq(via_swaps, three_cycle));

  CHECK(perm_eq(identity(), transposition(A(2), A(2))));
  CHECK_FALSE(perm_eq(transposition(A(1), A(2)), transposition(A(1), A(3))));
}

TEST_CASE("group laws hold on random permutations") {
  std::mt19937_64 rng(3);
  Permutation e = identity();
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_perm(rng);
    Permutation q = random_perm(rng);
    Permutation r = random_perm(rng);
    CHECK(perm_eq(compose(p, compose(q, r)), compose(compose(p, q), r)));
    CHECK(perm_eq(compose(e, p), p));
    CHECK(perm_eq(compose(p, e), p));
    CHECK(perm_eq(compose(p, inverse(p)), e));
    CHECK(perm_eq(compose(inverse(p), p), e));
  }
}

TEST_CASE("no constructed permutation stores a fixed point") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_perm(rng);
    for (const auto& [from, to] : p.mapping()) CHECK(from != to);
    for (const auto& [from, to] : inverse(p).mapping()) CHECK(from != to);
  }
}

TEST_CASE("backward map inverts the forward map on support and fresh atoms") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_perm(rng);
    AtomSet probe = support(p);
    std::uint64_t fresh = probe.empty() ? 0 : probe.max().id + 1;
    probe.insert(Atom{fresh});
    probe.insert(Atom{fresh + 1});
    probe.insert(Atom{fresh + 2});
    for (Atom a : probe) {
      CHECK(apply(inverse(p), apply(p, a)) == a);
      CHECK(p.apply_inverse(p.apply(a)) == a);
    }
  }
}

TEST_CASE("support of a composition is inside the union of supports") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_perm(rng);
    Permutation q = random_perm(rng);
    CHECK(support(compose(p, q)).subset_of(support(p).set_union(support(q))));
  }
}

TEST_CASE("canonical storage makes structural equality extensional") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Permutation p = random_perm(rng, 6, 4);
    Permutation q = random_perm(rng, 6, 4);
    CHECK((p == q) == perm_eq(p, q));
  }
}

TEST_CASE("from_pairs validates its input") {
  CHECK_THROWS_AS(Permutation::from_pairs({{A(3), A(3)}}), validation_error);
  CHECK_THROWS_AS(Permutation::from_pairs({{A(1), A(2)}, {A(1), A(3)}}),
                  validation_error);
  // {1->2, 3->1} maps onto {2, 1} but reads from {1, 3}: not a bijection on
  // its own domain.
  CHECK_THROWS_AS(Permutation::from_pairs({{A(1), A(2)}, {A(3), A(1)}}),
                  validation_error);
  CHECK_THROWS_AS(Permutation::from_pairs({{A(1), A(2)}, {A(3), A(2)}}),
                  validation_error);
  CHECK(Permutation::from_pairs({{A(1), A(2)}, {A(2), A(1)}}) ==
        transposition(A(1), A(2)));
}
