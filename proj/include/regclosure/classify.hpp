#pragma once

#include <cstddef>
#include <vector>

#include "regclosure/betti.hpp"
#include "regclosure/ideal.hpp"

namespace regclosure {

/// Generators have pairwise disjoint supports. (A single generator counts.)
[[nodiscard]] bool is_complete_intersection(const MonomialIdeal &ideal);

/// Largest index i (1-based) with x_i | x^u. Throws on the zero vector.
[[nodiscard]] std::size_t m_of(const ExponentVector &u);

/// x_i u / x_{m(u)} in I for every u in G(I) and every i < m(u).
[[nodiscard]] bool is_stable(const MonomialIdeal &ideal);

/// x_i u / x_j in I for every u in G(I), every j with x_j | u, every i < j.
[[nodiscard]] bool is_strongly_stable(const MonomialIdeal &ideal);

/// Cohen-Macaulay of type one: pdim(S/I) = ht(I) and the last total Betti
/// number is 1. `quotient_betti` must be the table of S/I.
[[nodiscard]] bool is_gorenstein(const MonomialIdeal &ideal, const BettiTable &quotient_betti);

/// Equigenerated in degree d with every beta_{i,C}(I) in total degree d + i.
/// Accepts a table in either convention. Throws PreconditionError when I is
/// not equigenerated.
[[nodiscard]] bool has_linear_resolution(const MonomialIdeal &ideal, const BettiTable &betti);

/// Pairwise coprime monomials B_1..B_m, m odd.
class KamoiBlocks {
public:
  /// Throws ValidationError for even m, zero blocks or overlapping supports.
  KamoiBlocks(std::size_t n, std::vector<ExponentVector> blocks);

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] const std::vector<ExponentVector> &blocks() const { return blocks_; }
  [[nodiscard]] std::size_t m() const { return blocks_.size(); }
  [[nodiscard]] std::size_t s() const { return (blocks_.size() + 1) / 2; }

private:
  std::size_t n_;
  std::vector<ExponentVector> blocks_;
};

/// Height-three Gorenstein ideal generated by the m products of s-1
/// cyclically consecutive blocks, the i-th starting at block i+1.
[[nodiscard]] MonomialIdeal kamoi_gorenstein(const KamoiBlocks &blocks);

/// Smallest stable ideal containing the given monomials.
[[nodiscard]] MonomialIdeal stable_closure(std::vector<ExponentVector> raw, std::size_t n);

/// Smallest strongly stable ideal containing the given monomials.
[[nodiscard]] MonomialIdeal strongly_stable_closure(std::vector<ExponentVector> raw,
                                                    std::size_t n);

} // namespace regclosure
