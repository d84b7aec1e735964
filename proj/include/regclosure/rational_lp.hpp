#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace regclosure {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class Relation { LessEqual, Equal, GreaterEqual };

/// Linear constraints  sum_j coeffs[j] * x_j (relation) rhs  over x >= 0.
class LinearSystem {
public:
  explicit LinearSystem(std::size_t num_variables) : num_variables_(num_variables) {}

  void add_constraint(std::vector<Rational> coeffs, Relation relation, Rational rhs);

  [[nodiscard]] std::size_t num_variables() const { return num_variables_; }
  [[nodiscard]] std::size_t num_constraints() const { return rows_.size(); }

  /// Does x satisfy x >= 0 and every constraint exactly?
  [[nodiscard]] bool satisfied_by(const std::vector<Rational> &x) const;

  struct Row {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
  };
  [[nodiscard]] const std::vector<Row> &rows() const { return rows_; }

private:
  std::size_t num_variables_;
  std::vector<Row> rows_;
};

/// Exact phase-one simplex with Bland's rule. Returns a basic feasible point
/// of the system, or nullopt when the system is infeasible.
[[nodiscard]] std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem &system);

} // namespace regclosure
