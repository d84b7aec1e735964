#include "regclosure/classify.hpp"

#include <algorithm>
#include <string>

#include "regclosure/errors.hpp"

namespace regclosure {

bool is_complete_intersection(const MonomialIdeal &ideal) {
  auto gens = ideal.generators();
  std::vector<bool> used(ideal.dimension(), false);
  for (const auto &g : gens) {
    for (std::size_t i : g.support()) {
      if (used[i])
        return false;
      used[i] = true;
    }
  }
  return true;
}

std::size_t m_of(const ExponentVector &u) {
  for (std::size_t i = u.size(); i > 0; --i)
    if (u[i - 1] > 0)
      return i;
  throw UndefinedInputError("m(u) is undefined for the constant monomial");
}

namespace {

ExponentVector exchange(const ExponentVector &u, std::size_t from, std::size_t to) {
  ExponentVector v = u;
  v.set(from, u[from] - 1);
  v.set(to, u[to] + 1);
  return v;
}

/// Every exchange move from a minimal generator stays in I.
template <typename Moves>
bool closed_under(const MonomialIdeal &ideal, Moves &&moves) {
  for (const auto &u : ideal.generators()) {
    if (u.is_zero())
      continue;
    bool ok = true;
    moves(u, [&](const ExponentVector &v) {
      if (ok && !membership(v, ideal))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

template <typename Emit>
void stable_moves(const ExponentVector &u, Emit &&emit) {
  std::size_t m = m_of(u) - 1;
  for (std::size_t i = 0; i < m; ++i)
    emit(exchange(u, m, i));
}

template <typename Emit>
void strong_moves(const ExponentVector &u, Emit &&emit) {
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j] > 0)
      for (std::size_t i = 0; i < j; ++i)
        emit(exchange(u, j, i));
}

template <typename Moves>
MonomialIdeal saturate(std::vector<ExponentVector> raw, std::size_t n, Moves &&moves) {
  MonomialIdeal current = minimalize(std::move(raw), n);
  while (true) {
    std::vector<ExponentVector> added;
    for (const auto &u : current.generators()) {
      if (u.is_zero())
        continue;
      moves(u, [&](const ExponentVector &v) {
        if (!membership(v, current))
          added.push_back(v);
      });
    }
    if (added.empty())
      return current;
    std::vector<ExponentVector> all(current.generators().begin(), current.generators().end());
    all.insert(all.end(), added.begin(), added.end());
    current = minimalize(std::move(all), n);
  }
}

} // namespace

bool is_stable(const MonomialIdeal &ideal) {
  return closed_under(ideal, [](const ExponentVector &u, auto &&emit) { stable_moves(u, emit); });
}

bool is_strongly_stable(const MonomialIdeal &ideal) {
  return closed_under(ideal, [](const ExponentVector &u, auto &&emit) { strong_moves(u, emit); });
}

MonomialIdeal stable_closure(std::vector<ExponentVector> raw, std::size_t n) {
  return saturate(std::move(raw), n,
                  [](const ExponentVector &u, auto &&emit) { stable_moves(u, emit); });
}

MonomialIdeal strongly_stable_closure(std::vector<ExponentVector> raw, std::size_t n) {
  return saturate(std::move(raw), n,
                  [](const ExponentVector &u, auto &&emit) { strong_moves(u, emit); });
}

bool is_gorenstein(const MonomialIdeal &ideal, const BettiTable &quotient_betti) {
  if (quotient_betti.convention() != BettiConvention::Quotient)
    throw PreconditionError("is_gorenstein expects the Betti table of S/I");
  if (ideal.is_zero() || ideal.is_unit())
    return false;
  auto totals = quotient_betti.totals();
  auto pdim = static_cast<std::size_t>(quotient_betti.projective_dimension());
  return pdim == height(ideal) && totals.back() == 1;
}

bool has_linear_resolution(const MonomialIdeal &ideal, const BettiTable &betti) {
  if (ideal.is_zero() || !ideal.is_equigenerated())
    throw PreconditionError("linear resolutions are defined here for equigenerated ideals");
  const Exponent d = ideal.generators().front().degree();
  BettiTable of_ideal = betti.to_ideal_convention();
  return std::ranges::all_of(of_ideal.entries(), [&](const auto &entry) {
    return entry.first.second.degree() == d + entry.first.first;
  });
}

KamoiBlocks::KamoiBlocks(std::size_t n, std::vector<ExponentVector> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (blocks_.size() % 2 == 0)
    throw ValidationError("Kamoi form needs an odd number of blocks, got " +
                          std::to_string(blocks_.size()));
  std::vector<bool> used(n_, false);
  for (const auto &b : blocks_) {
    if (b.size() != n_)
      throw DimensionError("Kamoi block has the wrong length");
    if (b.is_zero())
      throw ValidationError("Kamoi blocks must be nonconstant monomials");
    for (std::size_t i : b.support()) {
      if (used[i])
        throw ValidationError("Kamoi blocks must be pairwise coprime");
      used[i] = true;
    }
  }
}

MonomialIdeal kamoi_gorenstein(const KamoiBlocks &blocks) {
  const std::size_t m = blocks.m();
  const std::size_t n = blocks.dimension();
  std::vector<ExponentVector> gens;
  // Generator i (1-based) is the product of blocks nu(i+1) .. nu(i+s-1),
  // where nu(j) = 1 + ((j - 1) mod m).
  for (std::size_t i = 1; i <= m; ++i) {
    ExponentVector product(n);
    for (std::size_t k = 1; k + 1 <= blocks.s(); ++k)
      product = product + blocks.blocks()[(i + k - 1) % m];
    gens.push_back(std::move(product));
  }
  MonomialIdeal ideal = minimalize(gens, n);
  if (ideal.size() != m)
    throw ConsistencyError("Kamoi generators are not minimal");
  return ideal;
}

} // namespace regclosure
