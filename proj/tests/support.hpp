#pragma once

// Shared helpers for the unit tests: shorthand constructors, a seeded
// generator of small random ideals, and brute-force reference
// implementations that do not share code with the library.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "regclosure/exponent.hpp"
#include "regclosure/ideal.hpp"
#include "regclosure/ideal_io.hpp"

namespace testing {

using regclosure::Exponent;
using regclosure::ExponentVector;
using regclosure::MonomialIdeal;

inline MonomialIdeal I(const std::string &text) { return regclosure::parse_ideal(text); }
inline MonomialIdeal I(const std::string &text, std::size_t n) {
  return regclosure::parse_ideal(text, n);
}
inline ExponentVector E(std::initializer_list<Exponent> entries) { return ExponentVector(entries); }

struct RandomIdeals {
  explicit RandomIdeals(std::uint64_t seed) : rng(seed) {}

  /// Minimalized ideal from 1..max_gens monomials of degree 1..max_degree.
  MonomialIdeal next(std::size_t n, Exponent max_degree, std::size_t max_gens) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<Exponent> degree(1, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::vector<ExponentVector> gens;
    for (std::size_t k = count(rng); k > 0; --k) {
      ExponentVector v(n);
      for (Exponent d = degree(rng); d > 0; --d) {
        std::size_t i = var(rng);
        v.set(i, v[i] + 1);
      }
      gens.push_back(v);
    }
    return regclosure::minimalize(gens, n);
  }

  std::mt19937_64 rng;
};

/// Calls visit on every lattice point of the box [0, bound].
inline void for_each_in_box(const ExponentVector &bound,
                            const std::function<void(const ExponentVector &)> &visit) {
  ExponentVector b(bound.size());
  while (true) {
    visit(b);
    std::size_t i = 0;
    while (i < bound.size() && b[i] == bound[i]) {
      b.set(i, 0);
      ++i;
    }
    if (i == bound.size())
      return;
    b.set(i, b[i] + 1);
  }
}

inline bool brute_divides(const ExponentVector &a, const ExponentVector &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline bool brute_member(const ExponentVector &b, const MonomialIdeal &ideal) {
  for (const auto &g : ideal.generators())
    if (brute_divides(g, b))
      return true;
  return false;
}

/// Smallest hitting set of the generator supports by branching on the
/// variables of the first uncovered generator.
inline std::size_t brute_height(const std::vector<ExponentVector> &gens, std::set<std::size_t> chosen,
                                std::size_t best) {
  if (chosen.size() >= best)
    return best;
  for (const auto &g : gens) {
    bool hit = false;
    for (std::size_t i : chosen)
      hit = hit || g[i] > 0;
    if (hit)
      continue;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0)
        continue;
      auto next = chosen;
      next.insert(i);
      best = std::min(best, brute_height(gens, next, best));
    }
    return best;
  }
  return chosen.size();
}

inline std::size_t brute_height(const MonomialIdeal &ideal) {
  std::vector<ExponentVector> gens(ideal.generators().begin(), ideal.generators().end());
  return brute_height(gens, {}, ideal.dimension() + 1);
}

} // namespace testing
