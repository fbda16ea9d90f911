#include "finperm/oracle.hpp"

#include <algorithm>

#include "finperm/errors.hpp"

namespace finperm {

namespace {
constexpr std::size_t kMaxEnumeratedAtoms = 8;
}

PermEnumeration::PermEnumeration(AtomSet universe)
    : universe_(std::move(universe)), domain_(universe_.atoms()) {
  if (domain_.size() > kMaxEnumeratedAtoms)
    throw bound_error("enumeration universe has " +
                      std::to_string(domain_.size()) +
                      " atoms; the factorial bound allows at most 8");
}

PermEnumeration::iterator::iterator(const std::vector<Atom>* domain)
    : domain_(domain), image_(*domain) {}

Permutation PermEnumeration::iterator::operator*() const {
  std::vector<AtomPair> moving;
  for (std::size_t i = 0; i < domain_->size(); ++i)
    if ((*domain_)[i] != image_[i]) moving.emplace_back((*domain_)[i], image_[i]);
  return Permutation::from_pairs(moving);
}

PermEnumeration::iterator& PermEnumeration::iterator::operator++() {
  ++index_;
  if (!std::next_permutation(image_.begin(), image_.end())) domain_ = nullptr;
  return *this;
}

std::uint64_t PermEnumeration::size() const {
  std::uint64_t n = 1;
  for (std::size_t k = 2; k <= domain_.size(); ++k) n *= k;
  return n;
}

PermEnumeration enumerate_perms(const AtomSet& universe) {
  return PermEnumeration(universe);
}

PermEnumeration enumerate_fixing(const AtomSet& universe, const AtomSet& fixed) {
  if (!fixed.subset_of(universe))
    throw contract_error("enumerate_fixing: fixed atoms must lie in the universe");
  return PermEnumeration(universe.set_minus(fixed));
}

PermExpr random_expr(std::mt19937_64& rng, std::uint64_t atom_bound,
                     std::size_t max_depth) {
  // Raw engine output with modulo keeps draws identical across platforms,
  // unlike std::uniform_int_distribution.
  auto draw = [&rng](std::uint64_t n) { return rng() % n; };
  auto atom = [&] {
    return Atom{atom_bound == 0 ? 0 : draw(atom_bound)};
  };
  if (atom_bound == 0) return PermExpr::id();  // no atoms to swap

  if (max_depth == 0) {
    // leaf: id vs swap with weights 1/4
    if (draw(5) == 0) return PermExpr::id();
    Atom a = atom();
    Atom b = atom();
    return PermExpr::swap(a, b);
  }
  std::uint64_t k = draw(9);  // id/swap/comp with weights 1/4/4
  if (k == 0) return PermExpr::id();
  if (k <= 4) {
    Atom a = atom();
    Atom b = atom();
    return PermExpr::swap(a, b);
  }
  PermExpr left = random_expr(rng, atom_bound, max_depth - 1);
  PermExpr right = random_expr(rng, atom_bound, max_depth - 1);
  return PermExpr::comp(left, right);
}

PermExpr random_expr(std::uint64_t seed, std::uint64_t atom_bound,
                     std::size_t max_depth) {
  std::mt19937_64 rng(seed);
  return random_expr(rng, atom_bound, max_depth);
}

LambdaTerm random_term(std::mt19937_64& rng, std::uint64_t atom_bound,
                       std::size_t max_depth) {
  auto draw = [&rng](std::uint64_t n) { return rng() % n; };
  auto atom = [&] { return Atom{atom_bound == 0 ? 0 : draw(atom_bound)}; };
  if (max_depth == 0 || draw(8) < 2) return LambdaTerm::var(atom());
  if (draw(2) == 0) {
    LambdaTerm fn = random_term(rng, atom_bound, max_depth - 1);
    LambdaTerm arg = random_term(rng, atom_bound, max_depth - 1);
    return LambdaTerm::app(fn, arg);
  }
  Atom binder = atom();
  return LambdaTerm::lam(binder, random_term(rng, atom_bound, max_depth - 1));
}

std::vector<PermExpr> enumerate_exprs(std::span<const Atom> atoms,
                                      std::size_t max_height) {
  std::vector<PermExpr> exprs;
  if (max_height == 0) return exprs;
  exprs.push_back(PermExpr::id());
  for (Atom a : atoms)
    for (Atom b : atoms) exprs.push_back(PermExpr::swap(a, b));
  std::size_t level_start = 0;  // exprs below the current height bound
  for (std::size_t h = 2; h <= max_height; ++h) {
    std::size_t level_end = exprs.size();
    // children of a height-h node may be anything strictly shorter
    for (std::size_t i = 0; i < level_end; ++i)
      for (std::size_t j = 0; j < level_end; ++j)
        if (i >= level_start || j >= level_start)  // at least one child of height h-1
          exprs.push_back(PermExpr::comp(exprs[i], exprs[j]));
    level_start = level_end;
  }
  return exprs;
}

std::vector<LambdaTerm> enumerate_terms(std::span<const Atom> atoms,
                                        std::size_t max_height) {
  std::vector<LambdaTerm> terms;
  if (max_height == 0) return terms;
  for (Atom a : atoms) terms.push_back(LambdaTerm::var(a));
  std::size_t level_start = 0;
  for (std::size_t h = 2; h <= max_height; ++h) {
    std::size_t level_end = terms.size();
    for (std::size_t i = 0; i < level_end; ++i)
      for (std::size_t j = 0; j < level_end; ++j)
        if (i >= level_start || j >= level_start)
          terms.push_back(LambdaTerm::app(terms[i], terms[j]));
    for (Atom a : atoms)
      for (std::size_t i = level_start; i < level_end; ++i)
        terms.push_back(LambdaTerm::lam(a, terms[i]));
    level_start = level_end;
  }
  return terms;
}

}  // namespace finperm
