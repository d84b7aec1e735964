#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regclosure/deadline.hpp"
#include "regclosure/ideal.hpp"
#include "regclosure/rational_lp.hpp"

namespace regclosure {

/// Weights lambda_i >= 0, sum lambda_i = 1, aligned with G(I), such that
/// sum lambda_i A_i <= b componentwise. Witnesses b in NP(I).
struct NewtonCertificate {
  std::vector<Rational> weights;

  /// Check every invariant exactly against the queried point.
  [[nodiscard]] bool certifies(const ExponentVector &b, const MonomialIdeal &ideal) const;
  /// lcm of the weight denominators: the r for which x^{rb} in I^r follows.
  [[nodiscard]] BigInt denominator_lcm() const;
  /// "1/2 0 1/2"
  [[nodiscard]] std::string to_string() const;
};

/// b in NP(I) = conv(G(I)) + R^n_{>=0}, decided by exact LP feasibility.
/// Throws UndefinedInputError on the zero ideal.
[[nodiscard]] std::optional<NewtonCertificate> np_membership(const ExponentVector &b,
                                                             const MonomialIdeal &ideal);

struct ClosureOptions {
  /// Skip box points already divisible by a known member. Off means one LP
  /// per box point against all of G(I).
  bool staircase_pruning = true;
  Deadline deadline{};
};

/// Integral closure: minimal lattice points of NP(I) inside [0, lcm_exponent(I)].
[[nodiscard]] MonomialIdeal integral_closure(const MonomialIdeal &ideal,
                                             const ClosureOptions &options = {});

[[nodiscard]] bool is_integrally_closed(const MonomialIdeal &ideal);

/// V(I): generators not in the Newton polyhedron of the remaining generators.
[[nodiscard]] std::vector<ExponentVector> corner_points(const MonomialIdeal &ideal);

/// delta(I): largest degree of a corner point.
[[nodiscard]] Exponent delta(const MonomialIdeal &ideal);

/// x^{rb} in I^r for some 1 <= r <= r_max. True implies b in the closure;
/// false is conclusive only for r_max at least the denominator lcm of some
/// certificate.
[[nodiscard]] bool closure_membership_oracle(const ExponentVector &b,
                                             const MonomialIdeal &ideal, unsigned r_max);

inline constexpr unsigned kDefaultOracleRMax = 8;

} // namespace regclosure
