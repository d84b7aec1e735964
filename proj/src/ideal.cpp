#include "regclosure/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "regclosure/errors.hpp"

namespace regclosure {

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize({ExponentVector(n)}, n);
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_zero();
}

Exponent MonomialIdeal::max_generator_degree() const {
  Exponent best = 0;
  for (const auto &g : gens_)
    best = std::max(best, g.degree());
  return best;
}

bool MonomialIdeal::is_equigenerated() const {
  return std::ranges::all_of(gens_, [&](const ExponentVector &g) {
    return g.degree() == gens_.front().degree();
  });
}

MonomialIdeal minimalize(std::vector<ExponentVector> raw_gens, std::size_t n) {
  for (const auto &g : raw_gens)
    if (g.size() != n)
      throw DimensionError("generator of length " + std::to_string(g.size()) +
                           " in an ideal of k[x_1..x_" + std::to_string(n) + "]");
  std::ranges::sort(raw_gens);
  auto dup = std::ranges::unique(raw_gens);
  raw_gens.erase(dup.begin(), dup.end());

  MonomialIdeal out(n);
  // A proper divisor has strictly smaller degree, so it was already kept.
  for (auto &g : raw_gens) {
    bool redundant = std::ranges::any_of(
        out.gens_, [&](const ExponentVector &kept) { return divides(kept, g); });
    if (!redundant)
      out.gens_.push_back(std::move(g));
  }
  return out;
}

ExponentVector lcm_exponent(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInputError("lcm of the zero ideal's generators is undefined");
  ExponentVector out(ideal.dimension());
  for (const auto &g : ideal.generators())
    out = componentwise_max(out, g);
  return out;
}

bool membership(const ExponentVector &b, const MonomialIdeal &ideal) {
  return std::ranges::any_of(ideal.generators(),
                             [&](const ExponentVector &g) { return divides(g, b); });
}

MonomialIdeal ideal_product(const MonomialIdeal &lhs, const MonomialIdeal &rhs) {
  if (lhs.dimension() != rhs.dimension())
    throw DimensionError("product of ideals in different rings");
  std::vector<ExponentVector> raw;
  raw.reserve(lhs.size() * rhs.size());
  for (const auto &a : lhs.generators())
    for (const auto &b : rhs.generators())
      raw.push_back(a + b);
  return minimalize(std::move(raw), lhs.dimension());
}

MonomialIdeal ideal_power(const MonomialIdeal &ideal, unsigned m) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.dimension());
  MonomialIdeal base = ideal;
  // Square-and-multiply; minimalizing at every step keeps the lists small.
  while (m > 0) {
    if (m & 1U)
      result = ideal_product(result, base);
    m >>= 1U;
    if (m > 0)
      base = ideal_product(base, base);
  }
  return result;
}

namespace {

bool power_search(const ExponentVector &target, std::span<const ExponentVector> gens,
                  std::size_t first, unsigned remaining, std::vector<Exponent> &partial) {
  if (remaining == 0)
    return true;
  const std::size_t n = target.size();
  for (std::size_t k = first; k < gens.size(); ++k) {
    const auto &g = gens[k];
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (partial[i] + g[i] > target[i]) {
        fits = false;
        break;
      }
    }
    if (!fits)
      continue;
    for (std::size_t i = 0; i < n; ++i)
      partial[i] += g[i];
    bool found = power_search(target, gens, k, remaining - 1, partial);
    for (std::size_t i = 0; i < n; ++i)
      partial[i] -= g[i];
    if (found)
      return true;
  }
  return false;
}

} // namespace

bool power_membership(const ExponentVector &c, const MonomialIdeal &ideal, unsigned r) {
  if (c.size() != ideal.dimension())
    throw DimensionError("point and ideal live in different rings");
  if (r == 0)
    return true;
  std::vector<Exponent> partial(c.size(), 0);
  return power_search(c, ideal.generators(), 0, r, partial);
}

std::size_t height(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInputError("height of the zero ideal is undefined here");
  if (ideal.is_unit())
    throw UndefinedInputError("height of the unit ideal is undefined");
  const std::size_t n = ideal.dimension();
  if (n > 63)
    throw ValidationError("height search supports at most 63 variables");

  std::vector<std::uint64_t> supports;
  for (const auto &g : ideal.generators()) {
    std::uint64_t mask = 0;
    for (std::size_t i : g.support())
      mask |= std::uint64_t{1} << i;
    supports.push_back(mask);
  }
  auto hits_all = [&](std::uint64_t cover) {
    return std::ranges::all_of(supports,
                               [&](std::uint64_t s) { return (s & cover) != 0; });
  };

  // Subsets of each cardinality in increasing order (Gosper's hack).
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t set = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (set < limit) {
      if (hits_all(set))
        return k;
      std::uint64_t low = set & -set;
      std::uint64_t ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
  return n;
}

HeightOneFactorization factor_out_height_one(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInputError("cannot factor the zero ideal");
  auto gens = ideal.generators();
  ExponentVector prefix = gens.front();
  for (const auto &g : gens)
    prefix = componentwise_min(prefix, g);
  std::vector<ExponentVector> reduced;
  reduced.reserve(gens.size());
  for (const auto &g : gens)
    reduced.push_back(g - prefix);
  return {prefix, minimalize(std::move(reduced), ideal.dimension())};
}

MonomialIdeal shift_ideal(const MonomialIdeal &ideal, const ExponentVector &shift) {
  std::vector<ExponentVector> raw;
  raw.reserve(ideal.size());
  for (const auto &g : ideal.generators())
    raw.push_back(g + shift);
  return minimalize(std::move(raw), ideal.dimension());
}

bool is_m_primary(const MonomialIdeal &ideal) {
  const std::size_t n = ideal.dimension();
  std::vector<bool> has_pure_power(n, false);
  for (const auto &g : ideal.generators()) {
    auto supp = g.support();
    if (supp.empty())
      return true; // unit ideal
    if (supp.size() == 1)
      has_pure_power[supp.front()] = true;
  }
  return std::ranges::all_of(has_pure_power, [](bool b) { return b; });
}

MonomialIdeal permute_variables(const MonomialIdeal &ideal,
                                std::span<const std::size_t> perm) {
  const std::size_t n = ideal.dimension();
  if (perm.size() != n)
    throw DimensionError("permutation length differs from ring dimension");
  std::vector<ExponentVector> raw;
  for (const auto &g : ideal.generators()) {
    ExponentVector moved(n);
    for (std::size_t i = 0; i < n; ++i)
      moved.set(perm[i], g[i]);
    raw.push_back(std::move(moved));
  }
  return minimalize(std::move(raw), n);
}

} // namespace regclosure
