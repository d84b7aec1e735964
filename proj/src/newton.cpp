#include "regclosure/newton.hpp"

#include <algorithm>
#include <span>

#include "regclosure/errors.hpp"

namespace regclosure {

namespace {

/// Feasibility of {lambda >= 0, sum lambda = 1, sum lambda_i A_i <= b}.
std::optional<std::vector<Rational>> convex_combination_below(
    std::span<const ExponentVector> points, const ExponentVector &b) {
  const std::size_t k = points.size();
  const std::size_t n = b.size();
  LinearSystem system(k);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> coeffs(k);
    for (std::size_t i = 0; i < k; ++i)
      coeffs[i] = points[i][j];
    system.add_constraint(std::move(coeffs), Relation::LessEqual, Rational(b[j]));
  }
  system.add_constraint(std::vector<Rational>(k, Rational(1)), Relation::Equal, Rational(1));
  return find_feasible_point(system);
}

std::optional<std::size_t> first_divisor(std::span<const ExponentVector> gens,
                                         const ExponentVector &b) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (divides(gens[i], b))
      return i;
  return std::nullopt;
}

/// Calls visit(b) for every b in [0, upper], lexicographically increasing.
/// Every proper divisor of b is visited before b.
template <typename Visit>
void for_each_in_box(const ExponentVector &upper, Visit &&visit) {
  const std::size_t n = upper.size();
  ExponentVector b(n);
  while (true) {
    visit(b);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (b[i] < upper[i]) {
        b.set(i, b[i] + 1);
        break;
      }
      b.set(i, 0);
      if (i == 0)
        return;
    }
    if (n == 0)
      return;
  }
}

} // namespace

bool NewtonCertificate::certifies(const ExponentVector &b,
                                  const MonomialIdeal &ideal) const {
  auto gens = ideal.generators();
  if (weights.size() != gens.size() || b.size() != ideal.dimension())
    return false;
  Rational total = 0;
  for (const auto &w : weights) {
    if (w < 0)
      return false;
    total += w;
  }
  if (total != 1)
    return false;
  for (std::size_t j = 0; j < b.size(); ++j) {
    Rational coordinate = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      coordinate += weights[i] * gens[i][j];
    if (coordinate > b[j])
      return false;
  }
  return true;
}

BigInt NewtonCertificate::denominator_lcm() const {
  BigInt out = 1;
  for (const auto &w : weights)
    out = boost::multiprecision::lcm(out, BigInt(boost::multiprecision::denominator(w)));
  return out;
}

std::string NewtonCertificate::to_string() const {
  std::string out;
  for (const auto &w : weights) {
    if (!out.empty())
      out += ' ';
    out += w.str();
  }
  return out;
}

std::optional<NewtonCertificate> np_membership(const ExponentVector &b,
                                               const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInputError("Newton polyhedron of the zero ideal is empty");
  if (b.size() != ideal.dimension())
    throw DimensionError("point and ideal live in different rings");
  auto gens = ideal.generators();
  if (auto i = first_divisor(gens, b)) {
    NewtonCertificate cert{std::vector<Rational>(gens.size())};
    cert.weights[*i] = 1;
    return cert;
  }
  auto weights = convex_combination_below(gens, b);
  if (!weights)
    return std::nullopt;
  return NewtonCertificate{std::move(*weights)};
}

std::vector<ExponentVector> corner_points(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInputError("corner points of the zero ideal are undefined");
  auto gens = ideal.generators();
  std::vector<ExponentVector> corners;
  std::vector<ExponentVector> others;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    others.assign(gens.begin(), gens.end());
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (others.empty() || !convex_combination_below(others, gens[i]))
      corners.push_back(gens[i]);
  }
  return corners;
}

Exponent delta(const MonomialIdeal &ideal) {
  Exponent best = 0;
  for (const auto &v : corner_points(ideal))
    best = std::max(best, v.degree());
  return best;
}

MonomialIdeal integral_closure(const MonomialIdeal &ideal, const ClosureOptions &options) {
  if (ideal.is_zero())
    throw UndefinedInputError("integral closure of the zero ideal is not computed");
  if (ideal.is_unit() || ideal.size() == 1)
    return ideal;

  const ExponentVector upper = lcm_exponent(ideal);
  double box = 1;
  for (Exponent e : upper)
    box *= static_cast<double>(e) + 1;
  if (box > 4e9)
    throw ValidationError("lcm box too large to enumerate");

  auto gens = ideal.generators();
  std::vector<ExponentVector> members;

  if (!options.staircase_pruning) {
    for_each_in_box(upper, [&](const ExponentVector &b) {
      options.deadline.poll();
      if (convex_combination_below(gens, b))
        members.push_back(b);
    });
    return minimalize(std::move(members), ideal.dimension());
  }

  // NP(I) = conv(V(I)) + orthant, so the corner points carry all the LP work.
  const std::vector<ExponentVector> corners = corner_points(ideal);
  for_each_in_box(upper, [&](const ExponentVector &b) {
    options.deadline.poll();
    if (first_divisor(gens, b) || first_divisor(members, b))
      return;
    if (convex_combination_below(corners, b))
      members.push_back(b);
  });
  for (const auto &g : gens)
    members.push_back(g);
  return minimalize(std::move(members), ideal.dimension());
}

bool is_integrally_closed(const MonomialIdeal &ideal) {
  return integral_closure(ideal) == ideal;
}

bool closure_membership_oracle(const ExponentVector &b, const MonomialIdeal &ideal,
                               unsigned r_max) {
  if (r_max == 0)
    throw ValidationError("r_max must be positive");
  for (unsigned r = 1; r <= r_max; ++r)
    if (power_membership(scaled(b, r), ideal, r))
      return true;
  return false;
}

} // namespace regclosure
