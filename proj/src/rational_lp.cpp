#include "regclosure/rational_lp.hpp"

#include <string>

#include "regclosure/errors.hpp"

namespace regclosure {

void LinearSystem::add_constraint(std::vector<Rational> coeffs, Relation relation,
                                  Rational rhs) {
  if (coeffs.size() != num_variables_)
    throw DimensionError("constraint has " + std::to_string(coeffs.size()) +
                         " coefficients, expected " + std::to_string(num_variables_));
  rows_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

bool LinearSystem::satisfied_by(const std::vector<Rational> &x) const {
  if (x.size() != num_variables_)
    return false;
  for (const auto &v : x)
    if (v < 0)
      return false;
  for (const auto &row : rows_) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < num_variables_; ++j)
      lhs += row.coeffs[j] * x[j];
    bool ok = row.relation == Relation::LessEqual  ? lhs <= row.rhs
              : row.relation == Relation::Equal     ? lhs == row.rhs
                                                    : lhs >= row.rhs;
    if (!ok)
      return false;
  }
  return true;
}

namespace {

class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1)) {}

  Rational &at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  Rational &rhs(std::size_t r) { return at(r, cols_); }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
};

} // namespace

std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem &system) {
  const std::size_t nv = system.num_variables();
  const auto &rows = system.rows();
  const std::size_t m = rows.size();

  // Normalize to nonnegative right-hand sides.
  struct Normalized {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
  };
  std::vector<Normalized> norm;
  norm.reserve(m);
  std::size_t num_aux = 0;
  std::size_t num_artificial = 0;
  for (const auto &row : rows) {
    Normalized n{row.coeffs, row.relation, row.rhs};
    if (n.rhs < 0) {
      for (auto &c : n.coeffs)
        c = -c;
      n.rhs = -n.rhs;
      if (n.relation == Relation::LessEqual)
        n.relation = Relation::GreaterEqual;
      else if (n.relation == Relation::GreaterEqual)
        n.relation = Relation::LessEqual;
    }
    if (n.relation != Relation::Equal)
      ++num_aux;
    if (n.relation != Relation::LessEqual)
      ++num_artificial;
    norm.push_back(std::move(n));
  }

  const std::size_t first_aux = nv;
  const std::size_t first_artificial = nv + num_aux;
  const std::size_t cols = first_artificial + num_artificial;
  Tableau t(m, cols);
  std::vector<std::size_t> basis(m);

  std::size_t aux = first_aux;
  std::size_t art = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < nv; ++j)
      t.at(r, j) = norm[r].coeffs[j];
    t.rhs(r) = norm[r].rhs;
    switch (norm[r].relation) {
    case Relation::LessEqual:
      t.at(r, aux) = 1;
      basis[r] = aux++;
      break;
    case Relation::GreaterEqual:
      t.at(r, aux++) = -1;
      t.at(r, art) = 1;
      basis[r] = art++;
      break;
    case Relation::Equal:
      t.at(r, art) = 1;
      basis[r] = art++;
      break;
    }
  }

  // Reduced costs of the phase-one objective (sum of artificials); the last
  // entry holds minus the objective value.
  std::vector<Rational> reduced(cols + 1);
  for (std::size_t j = first_artificial; j < cols; ++j)
    reduced[j] = 1;
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < first_artificial)
      continue;
    for (std::size_t j = 0; j <= cols; ++j)
      reduced[j] -= t.at(r, j);
  }

  Rational ratio;
  Rational best_ratio;
  while (true) {
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols)
      break;

    std::size_t leaving = m;
    for (std::size_t r = 0; r < m; ++r) {
      const Rational &a = t.at(r, entering);
      if (a <= 0)
        continue;
      ratio = t.rhs(r) / a;
      if (leaving == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == m)
      throw ConsistencyError("phase-one objective unbounded below");

    Rational pivot = t.at(leaving, entering);
    for (std::size_t j = 0; j <= cols; ++j)
      if (t.at(leaving, j) != 0)
        t.at(leaving, j) /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leaving)
        continue;
      Rational factor = t.at(r, entering);
      if (factor == 0)
        continue;
      for (std::size_t j = 0; j <= cols; ++j)
        if (t.at(leaving, j) != 0)
          t.at(r, j) -= factor * t.at(leaving, j);
    }
    Rational factor = reduced[entering];
    for (std::size_t j = 0; j <= cols; ++j)
      if (t.at(leaving, j) != 0)
        reduced[j] -= factor * t.at(leaving, j);
    basis[leaving] = entering;
  }

  if (reduced[cols] != 0)
    return std::nullopt;

  std::vector<Rational> x(nv);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < nv)
      x[basis[r]] = t.rhs(r);
  if (!system.satisfied_by(x))
    throw ConsistencyError("simplex returned a point violating its own constraints");
  return x;
}

} // namespace regclosure
