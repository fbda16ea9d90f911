#include "finperm/perm.hpp"

#include <algorithm>

#include "finperm/errors.hpp"

namespace finperm {

namespace {

Atom lookup(const std::vector<AtomPair>& table, Atom a) {
  auto it = std::lower_bound(
      table.begin(), table.end(), a,
      [](const AtomPair& entry, Atom key) { return entry.first < key; });
  if (it != table.end() && it->first == a) return it->second;
  return a;
}

std::vector<AtomPair> flipped_sorted(const std::vector<AtomPair>& table) {
  std::vector<AtomPair> out;
  out.reserve(table.size());
  for (const auto& [from, to] : table) out.emplace_back(to, from);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Permutation Permutation::from_canonical(std::vector<AtomPair> forward) {
  Permutation p;
  p.backward_ = flipped_sorted(forward);
  p.forward_ = std::move(forward);
  return p;
}

Permutation Permutation::from_pairs(const std::vector<AtomPair>& pairs) {
  std::vector<AtomPair> forward = pairs;
  std::sort(forward.begin(), forward.end());
  std::vector<Atom> keys, values;
  keys.reserve(forward.size());
  values.reserve(forward.size());
  for (const auto& [from, to] : forward) {
    if (from == to)
      throw validation_error("fixed-point entry [" + to_string(from) + ", " +
                             to_string(to) + "] is not allowed");
    if (!keys.empty() && keys.back() == from)
      throw validation_error("duplicate source atom " + to_string(from));
    keys.push_back(from);
    values.push_back(to);
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw validation_error("map is not injective: duplicate target atom");
  if (keys != values)
    throw validation_error(
        "map is not a bijection on its own domain: "
        "source and target atom sets differ");
  return from_canonical(std::move(forward));
}

Atom Permutation::apply(Atom a) const { return lookup(forward_, a); }

Atom Permutation::apply_inverse(Atom a) const { return lookup(backward_, a); }

Permutation Permutation::inverse() const {
  Permutation p;
  p.forward_ = backward_;
  p.backward_ = forward_;
  return p;
}

AtomSet Permutation::support() const {
  std::vector<Atom> atoms;
  atoms.reserve(forward_.size());
  for (const auto& [from, to] : forward_) atoms.push_back(from);
  return AtomSet(std::move(atoms));  // already sorted and unique
}

Permutation identity() { return Permutation{}; }

Permutation transposition(Atom a, Atom b) {
  if (a == b) return identity();
  std::vector<AtomPair> forward{{std::min(a, b), std::max(a, b)},
                                {std::max(a, b), std::min(a, b)}};
  std::sort(forward.begin(), forward.end());
  return Permutation::from_canonical(std::move(forward));
}

Atom apply(const Permutation& p, Atom a) { return p.apply(a); }

Permutation compose(const Permutation& p, const Permutation& q) {
  AtomSet domain = p.support().set_union(q.support());
  std::vector<AtomPair> forward;
  forward.reserve(domain.size());
  for (Atom a : domain) {
    Atom b = p.apply(q.apply(a));
    if (b != a) forward.emplace_back(a, b);  // cancelled entries are dropped
  }
  return Permutation::from_canonical(std::move(forward));
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

AtomSet support(const Permutation& p) { return p.support(); }

bool perm_eq(const Permutation& p, const Permutation& q) {
  AtomSet probe = p.support().set_union(q.support());
  for (Atom a : probe)
    if (p.apply(a) != q.apply(a)) return false;
  return true;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  bool first = true;
  for (const auto& [from, to] : p.mapping()) {
    if (!first) out += ' ';
    out += to_string(from) + "->" + to_string(to);
    first = false;
  }
  out += ']';
  return out;
}

}  // namespace finperm
