#include "regclosure/verify.hpp"

#include <algorithm>

#include "regclosure/classify.hpp"
#include "regclosure/errors.hpp"
#include "regclosure/ideal_io.hpp"
#include "regclosure/newton.hpp"
#include "regclosure/sample.hpp"

namespace regclosure {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

bool multidegrees_below(const BettiTable &table, const ExponentVector &bound) {
  return std::ranges::all_of(table.entries(), [&](const auto &entry) {
    return divides(entry.first.second, bound);
  });
}

/// i -> max degree of beta_{i,C}(S/I) is strictly increasing on 0..height.
bool shifts_increase_to_height(const BettiTable &table, std::size_t ht) {
  std::vector<std::optional<Exponent>> top(ht + 1);
  for (const auto &[key, rank] : table.entries()) {
    auto i = static_cast<std::size_t>(key.first);
    if (i > ht)
      continue;
    Exponent d = key.second.degree();
    if (!top[i] || *top[i] < d)
      top[i] = d;
  }
  for (std::size_t i = 0; i <= ht; ++i) {
    if (!top[i])
      return false;
    if (i > 0 && *top[i] <= *top[i - 1])
      return false;
  }
  return true;
}

bool totals_at_least_binomial(const std::vector<BettiCount> &totals, std::size_t ht) {
  for (std::size_t i = 0; i <= ht; ++i) {
    BettiCount have = i < totals.size() ? totals[i] : 0;
    if (have < binomial(static_cast<std::int64_t>(ht), static_cast<std::int64_t>(i)))
      return false;
  }
  return true;
}

bool totals_dominated(const std::vector<BettiCount> &lower, const std::vector<BettiCount> &upper) {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    BettiCount have = i < upper.size() ? upper[i] : 0;
    if (lower[i] > have)
      return false;
  }
  return true;
}

bool generators_contained(const MonomialIdeal &small, const MonomialIdeal &large) {
  auto big = large.generators();
  return std::ranges::all_of(small.generators(), [&](const ExponentVector &g) {
    return std::ranges::find(big, g) != big.end();
  });
}

std::string describe(const MonomialIdeal &ideal) {
  return to_canonical_json(ideal) + " (" + ideal_to_text(ideal) + ")";
}

/// Runs every closed-form Betti computation the classifier allows and
/// compares it with the homology table. Returns a JSON summary.
nlohmann::json cross_check_fast_paths(const MonomialIdeal &ideal, const BettiTable &table) {
  nlohmann::json out = nlohmann::json::object();
  if (is_stable(ideal)) {
    GradedBetti closed = ek_betti(ideal);
    if (closed != table.graded().to_ideal_convention())
      throw ConsistencyError("Eliahou-Kervaire table disagrees with homology for " +
                             describe(ideal));
    out["ek"] = {{"reg", closed.regularity()}, {"pdim_quotient", closed.projective_dimension() + 1}};
  }
  if (is_complete_intersection(ideal)) {
    BettiTable closed = koszul_betti(ideal);
    if (closed != table)
      throw ConsistencyError("Koszul table disagrees with homology for " + describe(ideal));
    out["koszul"] = {{"reg", quotient_regularity(closed) + 1}};
  }
  return out;
}

std::vector<std::string> proved_classes(const MonomialIdeal &ideal, const BettiTable &table) {
  std::vector<std::string> out;
  if (is_complete_intersection(ideal))
    out.emplace_back("ci");
  if (is_stable(ideal))
    out.emplace_back("stable");
  if (is_gorenstein(ideal, table) && height(ideal) <= 3)
    out.emplace_back("gorenstein3");
  if (ideal.dimension() <= 2)
    out.emplace_back("n<=2");
  if (is_m_primary(ideal))
    out.emplace_back("m-primary");
  return out;
}

std::vector<HoaBound> hoa_bounds(const MonomialIdeal &ideal, unsigned m_max, Exponent delta_value,
                                 std::size_t dim, const Field &field, const Deadline &deadline,
                                 std::optional<Exponent> reg_closure_m1) {
  std::vector<HoaBound> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    HoaBound bound;
    bound.m = m;
    bound.lower = checked_mul(delta_value, m);
    bound.upper = checked_add(bound.lower, static_cast<Exponent>(dim));
    if (m == 1 && reg_closure_m1) {
      bound.regularity = *reg_closure_m1;
    } else {
      ClosureOptions closure_options;
      closure_options.deadline = deadline;
      MonomialIdeal closed = integral_closure(ideal_power(ideal, m), closure_options);
      bound.regularity = ideal_regularity(multigraded_betti(closed, field, deadline));
    }
    out.push_back(bound);
  }
  return out;
}

void require_proper_nonzero(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    throw UndefinedInputError("the zero ideal has no regularity to compare");
  if (ideal.is_unit())
    throw UndefinedInputError("the unit ideal has no regularity to compare");
}

} // namespace

std::vector<HoaBound> verify_hoa_bounds(const MonomialIdeal &ideal, unsigned m_max,
                                        const Field &field, const Deadline &deadline) {
  require_proper_nonzero(ideal);
  std::size_t dim = ideal.dimension() - height(ideal);
  return hoa_bounds(ideal, m_max, delta(ideal), dim, field, deadline, std::nullopt);
}

MPrimaryCheck verify_mprimary_case(const MonomialIdeal &ideal, const Field &field) {
  require_proper_nonzero(ideal);
  if (!is_m_primary(ideal))
    throw PreconditionError("ideal is not primary to the maximal ideal: " + ideal_to_text(ideal));
  MPrimaryCheck out;
  out.delta = delta(ideal);
  out.reg_ideal = ideal_regularity(multigraded_betti(ideal, field));
  out.reg_closure = ideal_regularity(multigraded_betti(integral_closure(ideal), field));
  return out;
}

std::vector<std::string> VerificationRecord::proved_violations() const {
  std::vector<std::string> out;
  for (const auto &[name, ok] : checks)
    if (!ok)
      out.push_back(name);
  if (status == "ok" && in_proved_class() && !conjecture_holds)
    out.emplace_back("conjecture");
  return out;
}

nlohmann::json VerificationRecord::to_json() const {
  nlohmann::json j;
  j["format_version"] = kRecordFormatVersion;
  j["ideal"] = ideal_to_json(ideal);
  j["family"] = family;
  j["field"] = field;
  j["seed"] = {{"derived", seed}};
  if (master_seed)
    j["seed"]["master"] = *master_seed;
  if (index)
    j["index"] = *index;
  j["status"] = status;
  if (!error.empty())
    j["error"] = error;
  j["timings_ms"] = timings_ms;
  if (status != "ok")
    return j;

  j["flags"] = flags;
  j["n"] = n;
  j["height"] = height;
  j["dim"] = dim;
  j["mu_ideal"] = mu_ideal;
  j["mu_closure"] = mu_closure;
  j["delta"] = delta;
  if (closure)
    j["closure"] = ideal_to_json(*closure);
  j["reg_ideal"] = reg_ideal;
  j["reg_closure"] = reg_closure;
  j["betti_ideal"] = betti_ideal;
  j["betti_closure"] = betti_closure;
  j["fast_path"] = fast_path;
  nlohmann::json hoa_json = nlohmann::json::array();
  for (const auto &b : hoa)
    hoa_json.push_back({{"m", b.m}, {"lower", b.lower}, {"reg", b.regularity}, {"upper", b.upper},
                        {"holds", b.holds()}});
  j["hoa"] = std::move(hoa_json);
  j["proved_by"] = proved_by;
  j["conjecture_holds"] = conjecture_holds;
  j["checks"] = checks;
  j["observations"] = observations;
  return j;
}

VerificationRecord verify_conjecture(const MonomialIdeal &ideal, const VerifyOptions &options) {
  require_proper_nonzero(ideal);
  const auto started = Clock::now();
  const Deadline deadline =
      options.budget.count() > 0 ? Deadline(options.budget) : Deadline();

  VerificationRecord rec;
  rec.ideal = ideal;
  rec.family = options.family;
  rec.field = options.field.name();
  rec.seed = options.seed;
  rec.master_seed = options.master_seed;
  rec.index = options.index;

  try {
    const std::size_t n = ideal.dimension();
    rec.n = n;
    rec.height = height(ideal);
    rec.dim = n - rec.height;
    rec.mu_ideal = ideal.size();

    auto t = Clock::now();
    ClosureOptions closure_options;
    closure_options.deadline = deadline;
    MonomialIdeal closed = integral_closure(ideal, closure_options);
    rec.timings_ms["closure"] = elapsed_ms(t);
    rec.closure = closed;
    rec.mu_closure = closed.size();

    t = Clock::now();
    BettiTable table = multigraded_betti(ideal, options.field, deadline);
    rec.timings_ms["betti_ideal"] = elapsed_ms(t);
    t = Clock::now();
    BettiTable closed_table = multigraded_betti(closed, options.field, deadline);
    rec.timings_ms["betti_closure"] = elapsed_ms(t);

    rec.reg_ideal = ideal_regularity(table);
    rec.reg_closure = ideal_regularity(closed_table);
    rec.betti_ideal = table.totals();
    rec.betti_closure = closed_table.totals();
    rec.conjecture_holds = rec.reg_closure <= rec.reg_ideal;

    rec.fast_path["ideal"] = cross_check_fast_paths(ideal, table);
    rec.fast_path["closure"] = cross_check_fast_paths(closed, closed_table);

    const bool ci = is_complete_intersection(ideal);
    const bool stable = is_stable(ideal);
    const bool strongly = is_strongly_stable(ideal);
    const bool gorenstein = is_gorenstein(ideal, table);
    const bool gorenstein3 = gorenstein && rec.height <= 3;
    const bool m_primary = is_m_primary(ideal);
    rec.flags = {{"ci", ci},
                 {"stable", stable},
                 {"strongly_stable", strongly},
                 {"m_primary", m_primary},
                 {"gorenstein", gorenstein},
                 {"integrally_closed", closed == ideal},
                 {"equigenerated", ideal.is_equigenerated()}};

    rec.delta = delta(ideal);
    t = Clock::now();
    rec.hoa = hoa_bounds(ideal, std::max(1U, options.hoa_max), rec.delta, rec.dim, options.field,
                         deadline, rec.reg_closure);
    rec.timings_ms["hoa"] = elapsed_ms(t);

    rec.proved_by = proved_classes(ideal, table);

    // Statements proved for every monomial ideal.
    auto &checks = rec.checks;
    checks["closure_contains_ideal"] =
        std::ranges::all_of(ideal.generators(), [&](const auto &g) { return membership(g, closed); });
    checks["height_preserved"] = height(closed) == rec.height;
    checks["betti_lcm_bound_ideal"] = multidegrees_below(table, lcm_exponent(ideal));
    checks["betti_lcm_bound_closure"] = multidegrees_below(closed_table, lcm_exponent(closed));
    checks["codim_shift_increasing_ideal"] = shifts_increase_to_height(table, rec.height);
    checks["codim_shift_increasing_closure"] = shifts_increase_to_height(closed_table, rec.height);
    checks["betti_binomial_ideal"] = totals_at_least_binomial(rec.betti_ideal, rec.height);
    checks["betti_binomial_closure"] = totals_at_least_binomial(rec.betti_closure, rec.height);
    checks["pdim_at_most_n"] = table.projective_dimension() <= static_cast<int>(n) &&
                               closed_table.projective_dimension() <= static_cast<int>(n);
    for (const auto &b : rec.hoa)
      checks["hoa_m" + std::to_string(b.m)] = b.holds();
    {
      auto corners = corner_points(ideal);
      checks["corners_in_closure_generators"] = std::ranges::all_of(corners, [&](const auto &v) {
        return std::ranges::find(closed.generators(), v) != closed.generators().end();
      });
    }
    if (options.check_idempotence) {
      t = Clock::now();
      checks["closure_idempotent"] = integral_closure(closed, closure_options) == closed;
      rec.timings_ms["idempotence"] = elapsed_ms(t);
    }

    // Reduction of height-one ideals: I = x^p J, closure(I) = x^p closure(J).
    auto factored = factor_out_height_one(ideal);
    if (!factored.prefix.is_zero()) {
      const Exponent shift = factored.prefix.degree();
      const MonomialIdeal &reduced = factored.reduced;
      if (reduced.is_unit()) {
        checks["factoring_consistent"] = closed == ideal;
        checks["height_one_regularity_shift"] = rec.reg_ideal == shift && rec.reg_closure == shift;
      } else {
        MonomialIdeal reduced_closure = integral_closure(reduced, closure_options);
        checks["factoring_consistent"] = shift_ideal(reduced_closure, factored.prefix) == closed;
        BettiTable reduced_table = multigraded_betti(reduced, options.field, deadline);
        Exponent reg_reduced = ideal_regularity(reduced_table);
        Exponent reg_reduced_closure =
            ideal_regularity(multigraded_betti(reduced_closure, options.field, deadline));
        checks["height_one_regularity_shift"] = rec.reg_ideal == shift + reg_reduced &&
                                                rec.reg_closure == shift + reg_reduced_closure;
        for (auto &cls : proved_classes(reduced, reduced_table))
          if (std::ranges::find(rec.proved_by, cls) == rec.proved_by.end())
            rec.proved_by.push_back("reduced:" + cls);
      }
    }

    if (m_primary) {
      checks["mprimary_closure_reg_is_delta"] = rec.reg_closure == rec.delta;
      checks["mprimary_delta_at_most_reg"] = rec.delta <= rec.reg_ideal;
    }
    if (ci || gorenstein3 || n <= 2) {
      checks["mu_monotone"] = rec.mu_ideal <= rec.mu_closure;
      checks["betti_dominated"] = totals_dominated(rec.betti_ideal, rec.betti_closure);
    }
    if (ci || gorenstein3)
      checks["generators_in_closure_generators"] = generators_contained(ideal, closed);
    if (stable) {
      checks["closure_stable"] = is_stable(closed);
      checks["stable_degree_bound"] = closed.max_generator_degree() <= ideal.max_generator_degree();
    }
    if (strongly)
      checks["closure_strongly_stable"] = is_strongly_stable(closed);
    if (gorenstein3 && rec.height == 3) {
      const auto m = static_cast<BettiCount>(rec.mu_ideal);
      checks["gorenstein_betti_shape"] = rec.betti_ideal == std::vector<BettiCount>{1, m, m, 1};
      // A sandwiched ideal I <= J <= closure(I) built from a random subset of
      // the new closure generators.
      SampleRng rng(options.seed ^ 0x5a4d5749434845ULL);
      std::vector<ExponentVector> raw(ideal.generators().begin(), ideal.generators().end());
      for (const auto &g : closed.generators())
        if (!membership(g, ideal) && rng.uniform(0, 1) == 1)
          raw.push_back(g);
      MonomialIdeal sandwiched = minimalize(std::move(raw), n);
      auto sandwiched_totals = multigraded_betti(sandwiched, options.field, deadline).totals();
      checks["sandwich_betti_dominated"] = totals_dominated(rec.betti_ideal, sandwiched_totals);
      rec.observations["sandwich_mu"] = sandwiched.size();
      // The reverse comparison against the closure does not hold in general.
      rec.observations["sandwich_below_closure"] =
          totals_dominated(sandwiched_totals, rec.betti_closure);
    }

    // Exploratory data.
    rec.observations["mu_monotone"] = rec.mu_ideal <= rec.mu_closure;
    rec.observations["betti_dominated"] = totals_dominated(rec.betti_ideal, rec.betti_closure);
    if (ideal.is_equigenerated()) {
      rec.observations["linear_resolution_ideal"] = has_linear_resolution(ideal, table);
      rec.observations["linear_resolution_closure"] =
          closed.is_equigenerated() ? nlohmann::json(has_linear_resolution(closed, closed_table))
                                    : nlohmann::json(nullptr);
    }
  } catch (const TimeoutError &e) {
    rec.status = "timeout";
    rec.error = e.what();
    rec.checks.clear();
  }
  rec.timings_ms["total"] = elapsed_ms(started);
  return rec;
}

} // namespace regclosure
