#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace finperm {

/// A name from the countable atom universe. Atoms carry no structure beyond
/// their identity; equality is integer equality.
struct Atom {
  std::uint64_t id = 0;

  friend constexpr auto operator<=>(Atom, Atom) = default;
};

std::string to_string(Atom a);

/// Finite set of atoms with sorted-ascending iteration order.
class AtomSet {
public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms);
  explicit AtomSet(std::vector<Atom> atoms);  // sorts and deduplicates

  bool contains(Atom a) const;
  void insert(Atom a);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  Atom max() const;  // contract_error on empty set

  AtomSet set_union(const AtomSet& other) const;
  AtomSet set_minus(const AtomSet& other) const;
  bool subset_of(const AtomSet& other) const;
  bool intersects(const AtomSet& other) const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

private:
  std::vector<Atom> atoms_;  // sorted, no duplicates
};

std::string to_string(const AtomSet& s);

}  // namespace finperm
