#include "finperm/atom.hpp"

#include <algorithm>

#include "finperm/errors.hpp"

namespace finperm {

std::string to_string(Atom a) { return std::to_string(a.id); }

AtomSet::AtomSet(std::initializer_list<Atom> atoms)
    : AtomSet(std::vector<Atom>(atoms)) {}

AtomSet::AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool AtomSet::contains(Atom a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

void AtomSet::insert(Atom a) {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) atoms_.insert(it, a);
}

Atom AtomSet::max() const {
  if (atoms_.empty()) throw contract_error("max() of empty atom set");
  return atoms_.back();
}

AtomSet AtomSet::set_union(const AtomSet& other) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size() + other.atoms_.size());
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                 other.atoms_.end(), std::back_inserter(out));
  AtomSet result;
  result.atoms_ = std::move(out);  // inputs sorted and unique, so is the union
  return result;
}

AtomSet AtomSet::set_minus(const AtomSet& other) const {
  std::vector<Atom> out;
  std::set_difference(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                      other.atoms_.end(), std::back_inserter(out));
  AtomSet result;
  result.atoms_ = std::move(out);
  return result;
}

bool AtomSet::subset_of(const AtomSet& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(),
                       atoms_.begin(), atoms_.end());
}

bool AtomSet::intersects(const AtomSet& other) const {
  auto a = atoms_.begin();
  auto b = other.atoms_.begin();
  while (a != atoms_.end() && b != other.atoms_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

std::string to_string(const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (Atom a : s) {
    if (!first) out += ' ';
    out += to_string(a);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace finperm
