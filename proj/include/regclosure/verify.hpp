#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regclosure/betti.hpp"
#include "regclosure/deadline.hpp"
#include "regclosure/ideal.hpp"
#include "regclosure/simplicial.hpp"

namespace regclosure {

/// Version tag written into every record.
inline constexpr int kRecordFormatVersion = 1;

struct HoaBound {
  unsigned m = 0;
  Exponent lower = 0;      // delta(I) * m
  Exponent regularity = 0; // reg of the closure of I^m
  Exponent upper = 0;      // delta(I) * m + dim(S/I)
  [[nodiscard]] bool holds() const { return lower <= regularity && regularity <= upper; }
};

/// delta(I) m <= reg(closure(I^m)) <= delta(I) m + dim(S/I) for m = 1..m_max.
[[nodiscard]] std::vector<HoaBound> verify_hoa_bounds(const MonomialIdeal &ideal, unsigned m_max,
                                                      const Field &field = Field::rationals(),
                                                      const Deadline &deadline = {});

struct MPrimaryCheck {
  Exponent delta = 0;
  Exponent reg_ideal = 0;
  Exponent reg_closure = 0;
  [[nodiscard]] bool closure_regularity_is_delta() const { return reg_closure == delta; }
  [[nodiscard]] bool delta_at_most_regularity() const { return delta <= reg_ideal; }
};

/// For an m-primary ideal: reg(closure) = delta(I) <= reg(I).
/// Throws PreconditionError when I is not m-primary.
[[nodiscard]] MPrimaryCheck verify_mprimary_case(const MonomialIdeal &ideal,
                                                 const Field &field = Field::rationals());

struct VerifyOptions {
  Field field = Field::rationals();
  /// Hoa bounds are checked for m = 1..hoa_max.
  unsigned hoa_max = 1;
  /// 0 disables the wall-clock budget.
  std::chrono::milliseconds budget{30000};
  bool check_idempotence = true;
  std::string family = "manual";
  /// Drives the choice of the sandwiched ideal I <= J <= closure(I).
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> master_seed;
  std::optional<std::uint64_t> index;
};

/// One harness result. Numeric fields are empty when status != "ok".
struct VerificationRecord {
  MonomialIdeal ideal{1};
  std::string family;
  std::string field;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> master_seed;
  std::optional<std::uint64_t> index;
  std::string status = "ok"; // ok | timeout | error
  std::string error;

  std::map<std::string, bool> flags;
  std::size_t n = 0;
  std::size_t height = 0;
  std::size_t dim = 0;
  std::size_t mu_ideal = 0;
  std::size_t mu_closure = 0;
  Exponent delta = 0;
  std::optional<MonomialIdeal> closure;
  Exponent reg_ideal = 0;
  Exponent reg_closure = 0;
  std::vector<BettiCount> betti_ideal;   // totals of S/I
  std::vector<BettiCount> betti_closure; // totals of S/closure
  nlohmann::json fast_path = nlohmann::json::object();
  std::vector<HoaBound> hoa;

  std::vector<std::string> proved_by; // classes whose theorem covers reg(closure) <= reg(I)
  bool conjecture_holds = true;
  /// Named verdicts of statements proved for this ideal's class.
  std::map<std::string, bool> checks;
  /// Exploratory data with no assertion attached.
  nlohmann::json observations = nlohmann::json::object();
  std::map<std::string, double> timings_ms;

  [[nodiscard]] bool in_proved_class() const { return !proved_by.empty(); }
  /// Failed checks, plus the conjecture itself when the class is proved.
  [[nodiscard]] std::vector<std::string> proved_violations() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Compute closure, both Betti tables and regularities, and every check
/// applicable to the ideal's class. Fast-path and homology disagreement
/// throws ConsistencyError; a spent budget yields status "timeout".
/// Throws UndefinedInputError on zero or unit ideals.
[[nodiscard]] VerificationRecord verify_conjecture(const MonomialIdeal &ideal,
                                                   const VerifyOptions &options = {});

} // namespace regclosure
