#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "regclosure/deadline.hpp"
#include "regclosure/ideal.hpp"
#include "regclosure/simplicial.hpp"

namespace regclosure {

/// Whether homological index i counts syzygies of S/I or of I.
/// beta_i(I) = beta_{i+1}(S/I).
enum class BettiConvention { Quotient, Ideal };

using BettiCount = std::uint64_t;

/// Graded Betti numbers beta_{i,j}: (i, total degree j) -> rank.
class GradedBetti {
public:
  explicit GradedBetti(BettiConvention convention) : convention_(convention) {}

  void add(int i, Exponent degree, BettiCount rank);

  [[nodiscard]] BettiConvention convention() const { return convention_; }
  [[nodiscard]] const std::map<std::pair<int, Exponent>, BettiCount> &entries() const {
    return entries_;
  }
  /// Total Betti numbers beta_0, beta_1, ..., beta_pdim.
  [[nodiscard]] std::vector<BettiCount> totals() const;
  /// max (j - i) over nonzero entries.
  [[nodiscard]] Exponent regularity() const;
  [[nodiscard]] int projective_dimension() const;
  [[nodiscard]] GradedBetti to_ideal_convention() const;

  friend bool operator==(const GradedBetti &, const GradedBetti &) = default;

private:
  BettiConvention convention_;
  std::map<std::pair<int, Exponent>, BettiCount> entries_;
};

/// Multigraded Betti numbers beta_{i,C}. Zero entries are never stored.
class BettiTable {
public:
  using Entries = std::map<std::pair<int, ExponentVector>, BettiCount>;

  BettiTable(std::size_t n, BettiConvention convention) : n_(n), convention_(convention) {}

  void add(int i, const ExponentVector &multidegree, BettiCount rank);

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] BettiConvention convention() const { return convention_; }
  [[nodiscard]] const Entries &entries() const { return entries_; }
  [[nodiscard]] GradedBetti graded() const;
  [[nodiscard]] std::vector<BettiCount> totals() const { return graded().totals(); }
  [[nodiscard]] Exponent regularity() const { return graded().regularity(); }
  [[nodiscard]] int projective_dimension() const { return graded().projective_dimension(); }
  /// Drop beta_0(S/I) and shift indices down by one.
  [[nodiscard]] BettiTable to_ideal_convention() const;

  friend bool operator==(const BettiTable &, const BettiTable &) = default;

private:
  std::size_t n_;
  BettiConvention convention_;
  Entries entries_;
};

/// All lcms of nonempty subsets of G(I), sorted canonically.
[[nodiscard]] std::vector<ExponentVector> lcm_lattice(const MonomialIdeal &ideal);

/// Faces T with b - e_T >= 0 and x^{b - e_T} in I.
[[nodiscard]] SimplicialComplex upper_koszul(const MonomialIdeal &ideal, const ExponentVector &b);

/// Betti table of S/I from reduced homology of upper Koszul complexes:
/// beta_{i,b}(S/I) = dim H~_{i-2}(K^b(I)) for b in the lcm lattice.
/// Throws UndefinedInputError on the unit ideal.
[[nodiscard]] BettiTable multigraded_betti(const MonomialIdeal &ideal,
                                           const Field &field = Field::rationals(),
                                           const Deadline &deadline = {});

/// reg(S/I) and reg(I) = reg(S/I) + 1 for proper nonzero I.
[[nodiscard]] Exponent quotient_regularity(const BettiTable &quotient_table);
[[nodiscard]] Exponent ideal_regularity(const BettiTable &quotient_table);

/// Eliahou-Kervaire graded Betti numbers of a stable ideal I (ideal convention).
/// Throws PreconditionError when I is not stable.
[[nodiscard]] GradedBetti ek_betti(const MonomialIdeal &ideal);

/// Koszul complex Betti table of S/I for a complete intersection.
/// Throws PreconditionError when generators are not pairwise coprime.
[[nodiscard]] BettiTable koszul_betti(const MonomialIdeal &ideal);

/// Binomial coefficient as an exact 64-bit count.
[[nodiscard]] BettiCount binomial(std::int64_t n, std::int64_t k);

} // namespace regclosure
