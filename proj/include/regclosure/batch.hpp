#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "regclosure/sample.hpp"
#include "regclosure/verify.hpp"

namespace regclosure {

struct BatchOptions {
  std::uint64_t master_seed = 0;
  std::size_t count = 10;
  /// Record i samples from families[i % families.size()].
  std::vector<Family> families = all_families();
  /// Template for every sample; family and seed are overwritten per record.
  FamilySpec spec;
  VerifyOptions verify;
  std::size_t jobs = 1;
};

/// Per-family aggregate over the records of one batch.
struct FamilySummary {
  std::size_t count = 0;
  std::size_t ok = 0;
  std::size_t timeouts = 0;
  std::size_t errors = 0;
  std::size_t proved_class = 0;
  /// reg(closure) > reg(I), any class.
  std::size_t conjecture_violations = 0;
  /// Failed proved checks, including the conjecture on proved classes.
  std::size_t proved_violations = 0;
  /// max and min of reg(closure) - reg(I) over ok records.
  std::optional<Exponent> max_reg_gap;
  std::optional<Exponent> min_reg_gap;
  double p50_ms = 0;
  double p90_ms = 0;
  double max_ms = 0;
};

/// 2x2 table of (linear resolution of I, linear resolution of closure) over
/// equigenerated height-two ideals in three variables.
struct LinearResolutionTable {
  std::size_t counts[2][2] = {{0, 0}, {0, 0}};
  [[nodiscard]] std::size_t total() const {
    return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
  }
};

struct BatchSummary {
  std::map<std::string, FamilySummary> families;
  LinearResolutionTable linear_resolution;
  std::vector<std::string> proved_failures; // "index family: check" lines
  std::size_t total = 0;

  [[nodiscard]] bool any_proved_violation() const { return !proved_failures.empty(); }
  [[nodiscard]] bool any_error() const;
  [[nodiscard]] bool any_conjecture_violation() const;
  /// 0 clean, 1 proved violation or error, 2 only unproved conjecture violations.
  [[nodiscard]] int exit_code() const;
};

/// Samples and verifies `count` ideals on a worker pool. Each record is
/// written to `out` as one JSON line, in index order. A fast-path
/// disagreement stops the batch by rethrowing ConsistencyError.
BatchSummary run_batch(const BatchOptions &options, std::ostream &out);

/// Aggregates already serialized records (one JSON object per line).
[[nodiscard]] BatchSummary summarize_records(const std::vector<nlohmann::json> &records);
[[nodiscard]] std::vector<nlohmann::json> read_jsonl(std::istream &in);

void print_summary(const BatchSummary &summary, std::ostream &out);
void write_summary_csv(const BatchSummary &summary, std::ostream &out);

/// Removes every "timings_ms" member, recursively.
[[nodiscard]] nlohmann::json strip_timings(nlohmann::json record);

} // namespace regclosure
