#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "finperm/perm.hpp"

namespace finperm {

/// An action of the finite-permutation group on a carrier, packaged as a
/// first-class value so actions can be assembled at runtime. `act` must be
/// pure and satisfy the identity and compatibility laws with respect to
/// `equal`; check_action_laws probes both on a sample grid.
template <typename C>
struct GAction {
  using Carrier = C;

  std::function<C(const Permutation&, const C&)> act;
  std::function<bool(const C&, const C&)> equal;
};

/// Trivial action: every permutation fixes every element.
template <typename C>
GAction<C> discrete_action(std::function<bool(const C&, const C&)> eq) {
  return GAction<C>{
      [](const Permutation&, const C& x) { return x; },
      std::move(eq),
  };
}

template <typename C>
GAction<C> discrete_action() {
  return discrete_action<C>([](const C& a, const C& b) { return a == b; });
}

/// Atoms acted on by application.
inline GAction<Atom> atom_action() {
  return GAction<Atom>{
      [](const Permutation& g, const Atom& a) { return g.apply(a); },
      [](const Atom& a, const Atom& b) { return a == b; },
  };
}

/// Atom sets acted on pointwise (the image of the set).
inline GAction<AtomSet> atom_set_action() {
  return GAction<AtomSet>{
      [](const Permutation& g, const AtomSet& s) {
        std::vector<Atom> image;
        image.reserve(s.size());
        for (Atom a : s) image.push_back(g.apply(a));
        return AtomSet(std::move(image));
      },
      [](const AtomSet& a, const AtomSet& b) { return a == b; },
  };
}

/// Componentwise action on pairs.
template <typename A, typename B>
GAction<std::pair<A, B>> product_action(GAction<A> ga, GAction<B> gb) {
  return GAction<std::pair<A, B>>{
      [ga, gb](const Permutation& g, const std::pair<A, B>& p) {
        return std::pair<A, B>(ga.act(g, p.first), gb.act(g, p.second));
      },
      [ga, gb](const std::pair<A, B>& p, const std::pair<A, B>& q) {
        return ga.equal(p.first, q.first) && gb.equal(p.second, q.second);
      },
  };
}

/// Action on a tagged union; the tag is never changed.
template <typename A, typename B>
GAction<std::variant<A, B>> coproduct_action(GAction<A> ga, GAction<B> gb) {
  using E = std::variant<A, B>;
  return GAction<E>{
      [ga, gb](const Permutation& g, const E& e) -> E {
        if (e.index() == 0) return E(std::in_place_index<0>, ga.act(g, std::get<0>(e)));
        return E(std::in_place_index<1>, gb.act(g, std::get<1>(e)));
      },
      [ga, gb](const E& x, const E& y) {
        if (x.index() != y.index()) return false;
        if (x.index() == 0) return ga.equal(std::get<0>(x), std::get<0>(y));
        return gb.equal(std::get<1>(x), std::get<1>(y));
      },
  };
}

/// Conjugate action on functions: (g . F) x = g . F(g^-1 . x). Function
/// values can only be compared pointwise, so equality is sampled over the
/// given probe points.
template <typename A, typename B>
GAction<std::function<B(const A&)>> conjugate_action(GAction<A> ga, GAction<B> gb,
                                                     std::vector<A> probe) {
  using F = std::function<B(const A&)>;
  return GAction<F>{
      [ga, gb](const Permutation& g, const F& f) -> F {
        Permutation g_inv = g.inverse();
        return [ga, gb, g, g_inv, f](const A& x) {
          return gb.act(g, f(ga.act(g_inv, x)));
        };
      },
      [gb, probe](const F& f, const F& h) {
        for (const A& x : probe)
          if (!gb.equal(f(x), h(x))) return false;
        return true;
      },
  };
}

/// Outcome of a law check: every violation found on the grid, not just the
/// first.
struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Verifies the identity law on every sample and the compatibility law on
/// every (perm, perm, sample) triple.
template <typename C>
CheckReport check_action_laws(const GAction<C>& g, const std::vector<C>& samples,
                              const std::vector<Permutation>& perms) {
  CheckReport report;
  Permutation e = identity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ++report.checks;
    if (!g.equal(g.act(e, samples[i]), samples[i]))
      report.violations.push_back("identity law fails on sample #" + std::to_string(i));
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      Permutation composed = compose(perms[i], perms[j]);
      for (std::size_t k = 0; k < samples.size(); ++k) {
        ++report.checks;
        C stepwise = g.act(perms[i], g.act(perms[j], samples[k]));
        if (!g.equal(stepwise, g.act(composed, samples[k])))
          report.violations.push_back("compatibility law fails on perms #" +
                                      std::to_string(i) + ",#" + std::to_string(j) +
                                      ", sample #" + std::to_string(k));
      }
    }
  }
  return report;
}

/// Verifies F(g . x) = g . F(x) over the sample grid.
template <typename A, typename B, typename Fn>
CheckReport check_equivariant(Fn&& f, const GAction<A>& ga, const GAction<B>& gb,
                              const std::vector<A>& samples,
                              const std::vector<Permutation>& perms) {
  CheckReport report;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      ++report.checks;
      if (!gb.equal(f(ga.act(perms[i], samples[k])), gb.act(perms[i], f(samples[k]))))
        report.violations.push_back("equivariance fails on perm #" + std::to_string(i) +
                                    ", sample #" + std::to_string(k));
    }
  }
  return report;
}

}  // namespace finperm
