#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "regclosure/exponent.hpp"

namespace regclosure {

/// A monomial ideal of k[x_1, ..., x_n], stored as its minimal generating set.
///
/// Generators are kept sorted by (total degree, lexicographic), so two ideals
/// are equal exactly when their generator lists are equal. An empty list is
/// the zero ideal; the single generator 0 is the unit ideal.
class MonomialIdeal {
public:
  /// Zero ideal of k[x_1..x_n].
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] std::span<const ExponentVector> generators() const { return gens_; }
  /// Number of minimal generators, mu(I).
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] bool is_zero() const { return gens_.empty(); }
  [[nodiscard]] bool is_unit() const;
  /// Largest generator degree; 0 for the zero ideal.
  [[nodiscard]] Exponent max_generator_degree() const;
  [[nodiscard]] bool is_equigenerated() const;

  friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
  friend MonomialIdeal minimalize(std::vector<ExponentVector> raw_gens, std::size_t n);
  std::size_t n_;
  std::vector<ExponentVector> gens_;
};

/// Canonical ideal generated by `raw_gens`: the divisibility-minimal elements,
/// deduplicated and sorted.
[[nodiscard]] MonomialIdeal minimalize(std::vector<ExponentVector> raw_gens,
                                       std::size_t n);

/// Componentwise maximum of G(I). Throws UndefinedInputError on the zero ideal.
[[nodiscard]] ExponentVector lcm_exponent(const MonomialIdeal &ideal);

/// x^b in I.
[[nodiscard]] bool membership(const ExponentVector &b, const MonomialIdeal &ideal);

/// I^m. m = 0 gives the unit ideal.
[[nodiscard]] MonomialIdeal ideal_power(const MonomialIdeal &ideal, unsigned m);

/// Product ideal I*J.
[[nodiscard]] MonomialIdeal ideal_product(const MonomialIdeal &lhs,
                                          const MonomialIdeal &rhs);

/// x^c in I^r, by depth-r search over generator multisets pruned by
/// divisibility of the running sum.
[[nodiscard]] bool power_membership(const ExponentVector &c, const MonomialIdeal &ideal,
                                    unsigned r);

/// ht(I): size of a smallest variable set meeting every generator support.
/// Throws UndefinedInputError on zero or unit ideals.
[[nodiscard]] std::size_t height(const MonomialIdeal &ideal);

/// I = x^prefix * J with prefix the gcd of all generators.
struct HeightOneFactorization {
  ExponentVector prefix;
  MonomialIdeal reduced;
};
[[nodiscard]] HeightOneFactorization factor_out_height_one(const MonomialIdeal &ideal);

/// x^shift * I.
[[nodiscard]] MonomialIdeal shift_ideal(const MonomialIdeal &ideal,
                                        const ExponentVector &shift);

/// sqrt(I) = <x_1, ..., x_n>: every variable has a pure power among G(I).
[[nodiscard]] bool is_m_primary(const MonomialIdeal &ideal);

/// Permute variables: variable i of the input becomes variable perm[i].
[[nodiscard]] MonomialIdeal permute_variables(const MonomialIdeal &ideal,
                                              std::span<const std::size_t> perm);

} // namespace regclosure
