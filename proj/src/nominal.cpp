#include "finperm/nominal.hpp"

namespace finperm {

AtomSet make_probe(const AtomSet& relevant, const AtomSet& support_candidate) {
  AtomSet mentioned = relevant.set_union(support_candidate);
  std::uint64_t next = mentioned.empty() ? 0 : mentioned.max().id + 1;
  AtomSet probe = relevant.set_minus(support_candidate);
  probe.insert(Atom{next});
  probe.insert(Atom{next + 1});
  return probe;
}

FiniteSupport lambda_support(const LambdaTerm& t) {
  return FiniteSupport{free_vars(t)};
}

}  // namespace finperm
