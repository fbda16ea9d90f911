#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace finperm {

/// Outcome of one packaged validation suite.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Group axioms (associativity, two-sided unit, two-sided inverse) on
/// random permutation triples over atoms [0, 10).
SuiteResult check_group_laws(std::uint64_t seed, std::size_t count);

/// Round-trip of normalization on random expressions: the normal form is
/// equivalent to its input and mentions exactly the atoms the denoted
/// permutation moves.
SuiteResult check_normalization_roundtrip(std::uint64_t seed, std::size_t count,
                                          std::uint64_t atom_bound,
                                          std::size_t max_depth);

/// The two support definitions decided against each other on a fixed grid:
/// lambda terms over atoms {0..3} of height <= 3, candidate sets A over
/// {0..4}, permutations drawn from the universe {0..4} extended with two
/// fresh atoms {5, 6} so that a failure always has a witness. Whenever the
/// swap-based check accepts, the quantifier side is additionally replayed
/// through the cycle decomposition of each permutation, one transposition
/// at a time.
SuiteResult check_support_equivalence();

}  // namespace finperm
