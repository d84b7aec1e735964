#include "regclosure/betti.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "regclosure/classify.hpp"
#include "regclosure/errors.hpp"
#include "regclosure/ideal_io.hpp"

namespace regclosure {

void GradedBetti::add(int i, Exponent degree, BettiCount rank) {
  if (rank == 0)
    return;
  entries_[{i, degree}] += rank;
}

std::vector<BettiCount> GradedBetti::totals() const {
  std::vector<BettiCount> out;
  for (const auto &[key, rank] : entries_) {
    auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i)
      out.resize(i + 1, 0);
    out[i] += rank;
  }
  return out;
}

Exponent GradedBetti::regularity() const {
  if (entries_.empty())
    throw UndefinedInputError("regularity of an empty Betti table");
  Exponent best = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto &[key, rank] : entries_)
    best = std::max(best, key.second - key.first);
  return best;
}

int GradedBetti::projective_dimension() const {
  if (entries_.empty())
    throw UndefinedInputError("projective dimension of an empty Betti table");
  return entries_.rbegin()->first.first;
}

GradedBetti GradedBetti::to_ideal_convention() const {
  if (convention_ == BettiConvention::Ideal)
    return *this;
  GradedBetti out(BettiConvention::Ideal);
  for (const auto &[key, rank] : entries_)
    if (key.first >= 1)
      out.add(key.first - 1, key.second, rank);
  return out;
}

void BettiTable::add(int i, const ExponentVector &multidegree, BettiCount rank) {
  if (multidegree.size() != n_)
    throw DimensionError("Betti multidegree has the wrong length");
  if (rank == 0)
    return;
  entries_[{i, multidegree}] += rank;
}

GradedBetti BettiTable::graded() const {
  GradedBetti out(convention_);
  for (const auto &[key, rank] : entries_)
    out.add(key.first, key.second.degree(), rank);
  return out;
}

BettiTable BettiTable::to_ideal_convention() const {
  if (convention_ == BettiConvention::Ideal)
    return *this;
  BettiTable out(n_, BettiConvention::Ideal);
  for (const auto &[key, rank] : entries_)
    if (key.first >= 1)
      out.add(key.first - 1, key.second, rank);
  return out;
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal &ideal) {
  auto gens = ideal.generators();
  std::unordered_set<ExponentVector, ExponentVectorHash> seen(gens.begin(), gens.end());
  std::vector<ExponentVector> frontier(gens.begin(), gens.end());
  // Every subset lcm is reached by joining generators one at a time.
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto &l : frontier) {
      for (const auto &g : gens) {
        ExponentVector joined = componentwise_max(l, g);
        if (seen.insert(joined).second)
          next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ExponentVector> out(seen.begin(), seen.end());
  std::ranges::sort(out);
  return out;
}

namespace {

SimplicialComplex upper_koszul_from(std::span<const ExponentVector> divisors,
                                    const ExponentVector &b) {
  const std::size_t n = b.size();
  std::uint64_t support_mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (b[i] > 0)
      support_mask |= std::uint64_t{1} << i;

  std::vector<std::uint64_t> faces;
  // Enumerate submasks of the support of b.
  for (std::uint64_t t = support_mask;; t = (t - 1) & support_mask) {
    bool in_ideal = std::ranges::any_of(divisors, [&](const ExponentVector &g) {
      for (std::size_t i = 0; i < n; ++i) {
        Exponent entry = b[i] - static_cast<Exponent>((t >> i) & 1U);
        if (g[i] > entry)
          return false;
      }
      return true;
    });
    if (in_ideal)
      faces.push_back(t);
    if (t == 0)
      break;
  }
  return SimplicialComplex(n, std::move(faces));
}

std::vector<ExponentVector> divisors_of(const MonomialIdeal &ideal, const ExponentVector &b) {
  std::vector<ExponentVector> out;
  for (const auto &g : ideal.generators())
    if (divides(g, b))
      out.push_back(g);
  return out;
}

} // namespace

SimplicialComplex upper_koszul(const MonomialIdeal &ideal, const ExponentVector &b) {
  if (b.size() != ideal.dimension())
    throw DimensionError("multidegree and ideal live in different rings");
  return upper_koszul_from(divisors_of(ideal, b), b);
}

BettiTable multigraded_betti(const MonomialIdeal &ideal, const Field &field,
                             const Deadline &deadline) {
  if (ideal.is_unit())
    throw UndefinedInputError("S/I vanishes for the unit ideal");
  const std::size_t n = ideal.dimension();
  BettiTable table(n, BettiConvention::Quotient);
  table.add(0, ExponentVector(n), 1);
  for (const auto &b : lcm_lattice(ideal)) {
    deadline.poll();
    auto ranks = homology_ranks(upper_koszul_from(divisors_of(ideal, b), b), field);
    for (std::size_t k = 0; k < ranks.size(); ++k)
      table.add(static_cast<int>(k) + 1, b, ranks[k]);
  }
  return table;
}

Exponent quotient_regularity(const BettiTable &quotient_table) {
  if (quotient_table.convention() != BettiConvention::Quotient)
    throw PreconditionError("expected a Betti table of S/I");
  return quotient_table.regularity();
}

Exponent ideal_regularity(const BettiTable &quotient_table) {
  if (quotient_table.convention() != BettiConvention::Quotient)
    throw PreconditionError("expected a Betti table of S/I");
  BettiTable ideal_table = quotient_table.to_ideal_convention();
  if (ideal_table.entries().empty())
    throw UndefinedInputError("regularity of the zero ideal");
  return ideal_table.regularity();
}

BettiCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BettiCount out = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    out = out * static_cast<BettiCount>(n - k + i) / static_cast<BettiCount>(i);
  return out;
}

GradedBetti ek_betti(const MonomialIdeal &ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("Eliahou-Kervaire formulas need a proper nonzero ideal");
  if (!is_stable(ideal))
    throw PreconditionError("ideal is not stable: " + ideal_to_text(ideal));
  GradedBetti out(BettiConvention::Ideal);
  for (const auto &u : ideal.generators()) {
    auto m = static_cast<std::int64_t>(m_of(u));
    for (std::int64_t i = 0; i <= m - 1; ++i)
      out.add(static_cast<int>(i), i + u.degree(), binomial(m - 1, i));
  }
  return out;
}

BettiTable koszul_betti(const MonomialIdeal &ideal) {
  if (ideal.is_unit())
    throw PreconditionError("the unit ideal has no Koszul resolution of S/I");
  if (!is_complete_intersection(ideal))
    throw PreconditionError("generators are not pairwise coprime: " + ideal_to_text(ideal));
  auto gens = ideal.generators();
  const std::size_t c = gens.size();
  if (c > 30)
    throw ValidationError("too many generators for the Koszul table");
  BettiTable table(ideal.dimension(), BettiConvention::Quotient);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << c); ++subset) {
    ExponentVector shift(ideal.dimension());
    for (std::size_t j = 0; j < c; ++j)
      if ((subset >> j) & 1U)
        shift = shift + gens[j];
    table.add(std::popcount(subset), shift, 1);
  }
  return table;
}

} // namespace regclosure
