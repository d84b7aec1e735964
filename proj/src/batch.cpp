#include "regclosure/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <iomanip>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "regclosure/errors.hpp"

namespace regclosure {

namespace {

VerificationRecord run_one(const BatchOptions &options, std::size_t index) {
  Family family = options.families[index % options.families.size()];
  FamilySpec spec = options.spec;
  spec.family = family;
  spec.seed = derive_seed(options.master_seed, family, index);

  VerifyOptions verify = options.verify;
  verify.family = std::string(family_name(family));
  verify.seed = spec.seed;
  verify.master_seed = options.master_seed;
  verify.index = index;

  std::optional<MonomialIdeal> ideal;
  try {
    ideal = sample(spec);
    return verify_conjecture(*ideal, verify);
  } catch (const ConsistencyError &) {
    throw;
  } catch (const std::exception &e) {
    VerificationRecord rec;
    if (ideal)
      rec.ideal = *ideal;
    rec.family = verify.family;
    rec.field = verify.field.name();
    rec.seed = spec.seed;
    rec.master_seed = options.master_seed;
    rec.index = index;
    rec.status = "error";
    rec.error = e.what();
    return rec;
  }
}

double percentile(std::vector<double> sorted, double q) {
  if (sorted.empty())
    return 0;
  std::ranges::sort(sorted);
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

} // namespace

bool BatchSummary::any_error() const {
  return std::ranges::any_of(families, [](const auto &f) { return f.second.errors > 0; });
}

bool BatchSummary::any_conjecture_violation() const {
  return std::ranges::any_of(families,
                             [](const auto &f) { return f.second.conjecture_violations > 0; });
}

int BatchSummary::exit_code() const {
  if (any_proved_violation() || any_error())
    return 1;
  if (any_conjecture_violation())
    return 2;
  return 0;
}

BatchSummary run_batch(const BatchOptions &options, std::ostream &out) {
  if (options.families.empty())
    throw ValidationError("batch needs at least one family");
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, options.count));

  std::vector<std::optional<nlohmann::json>> done(options.count);
  std::vector<nlohmann::json> records;
  records.reserve(options.count);
  std::size_t next_to_write = 0;
  std::atomic<std::size_t> next_index{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex mutex;

  auto worker = [&] {
    while (!abort) {
      std::size_t index = next_index++;
      if (index >= options.count)
        return;
      nlohmann::json line;
      try {
        line = run_one(options, index).to_json();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure)
          failure = std::current_exception();
        abort = true;
        return;
      }
      std::lock_guard lock(mutex);
      done[index] = std::move(line);
      while (next_to_write < options.count && done[next_to_write]) {
        out << done[next_to_write]->dump() << '\n';
        records.push_back(std::move(*done[next_to_write]));
        done[next_to_write].reset();
        ++next_to_write;
      }
      out.flush();
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);
  return summarize_records(records);
}

BatchSummary summarize_records(const std::vector<nlohmann::json> &input) {
  std::vector<const nlohmann::json *> records;
  for (const auto &r : input)
    records.push_back(&r);
  std::ranges::stable_sort(records, [](const nlohmann::json *a, const nlohmann::json *b) {
    return a->value("index", std::uint64_t{0}) < b->value("index", std::uint64_t{0});
  });

  BatchSummary summary;
  std::map<std::string, std::vector<double>> timings;
  for (const nlohmann::json *rp : records) {
    const nlohmann::json &r = *rp;
    ++summary.total;
    const std::string family = r.value("family", "manual");
    FamilySummary &fs = summary.families[family];
    ++fs.count;
    if (r.contains("timings_ms") && r["timings_ms"].contains("total"))
      timings[family].push_back(r["timings_ms"]["total"].get<double>());
    const std::string status = r.value("status", "error");
    if (status == "timeout") {
      ++fs.timeouts;
      continue;
    }
    if (status != "ok") {
      ++fs.errors;
      continue;
    }
    ++fs.ok;
    const auto reg_ideal = r["reg_ideal"].get<Exponent>();
    const auto reg_closure = r["reg_closure"].get<Exponent>();
    const Exponent gap = reg_closure - reg_ideal;
    fs.max_reg_gap = fs.max_reg_gap ? std::max(*fs.max_reg_gap, gap) : gap;
    fs.min_reg_gap = fs.min_reg_gap ? std::min(*fs.min_reg_gap, gap) : gap;
    const bool proved = !r["proved_by"].empty();
    if (proved)
      ++fs.proved_class;
    if (gap > 0)
      ++fs.conjecture_violations;

    std::vector<std::string> failed;
    for (const auto &[name, ok] : r["checks"].items())
      if (!ok.get<bool>())
        failed.push_back(name);
    if (proved && gap > 0)
      failed.emplace_back("conjecture");
    if (!failed.empty()) {
      ++fs.proved_violations;
      for (const auto &name : failed)
        summary.proved_failures.push_back(std::to_string(r.value("index", std::uint64_t{0})) + " " +
                                          family + ": " + name);
    }

    const auto &obs = r["observations"];
    if (r["n"].get<std::size_t>() == 3 && r["height"].get<std::size_t>() == 2 &&
        obs.contains("linear_resolution_ideal") && obs.contains("linear_resolution_closure") &&
        obs["linear_resolution_closure"].is_boolean()) {
      int a = obs["linear_resolution_ideal"].get<bool>() ? 1 : 0;
      int b = obs["linear_resolution_closure"].get<bool>() ? 1 : 0;
      ++summary.linear_resolution.counts[a][b];
    }
  }
  for (auto &[family, values] : timings) {
    FamilySummary &fs = summary.families[family];
    fs.p50_ms = percentile(values, 0.5);
    fs.p90_ms = percentile(values, 0.9);
    fs.max_ms = values.empty() ? 0 : *std::ranges::max_element(values);
  }
  return summary;
}

std::vector<nlohmann::json> read_jsonl(std::istream &in) {
  std::vector<nlohmann::json> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

namespace {

std::string gap_text(const std::optional<Exponent> &gap) {
  return gap ? std::to_string(*gap) : "-";
}

} // namespace

void print_summary(const BatchSummary &summary, std::ostream &out) {
  out << std::left << std::setw(16) << "family" << std::right << std::setw(7) << "count"
      << std::setw(6) << "ok" << std::setw(9) << "timeout" << std::setw(7) << "error"
      << std::setw(8) << "proved" << std::setw(11) << "conj-viol" << std::setw(12) << "proved-viol"
      << std::setw(9) << "max-gap" << std::setw(9) << "min-gap" << std::setw(10) << "p50-ms"
      << std::setw(10) << "p90-ms" << std::setw(10) << "max-ms" << '\n';
  out << std::fixed << std::setprecision(1);
  for (const auto &[family, fs] : summary.families) {
    out << std::left << std::setw(16) << family << std::right << std::setw(7) << fs.count
        << std::setw(6) << fs.ok << std::setw(9) << fs.timeouts << std::setw(7) << fs.errors
        << std::setw(8) << fs.proved_class << std::setw(11) << fs.conjecture_violations
        << std::setw(12) << fs.proved_violations << std::setw(9) << gap_text(fs.max_reg_gap)
        << std::setw(9) << gap_text(fs.min_reg_gap) << std::setw(10) << fs.p50_ms << std::setw(10)
        << fs.p90_ms << std::setw(10) << fs.max_ms << '\n';
  }
  const auto &lr = summary.linear_resolution;
  out << "\nlinear resolution, equigenerated height-2 ideals in 3 variables (" << lr.total()
      << " samples)\n"
      << "                 closure linear   closure not\n"
      << "  I linear       " << std::setw(14) << lr.counts[1][1] << std::setw(14) << lr.counts[1][0]
      << '\n'
      << "  I not linear   " << std::setw(14) << lr.counts[0][1] << std::setw(14) << lr.counts[0][0]
      << '\n';
  if (!summary.proved_failures.empty()) {
    out << "\nproved-statement failures:\n";
    for (const auto &line : summary.proved_failures)
      out << "  " << line << '\n';
  }
}

void write_summary_csv(const BatchSummary &summary, std::ostream &out) {
  out << "family,count,ok,timeouts,errors,proved_class,conjecture_violations,proved_violations,"
         "max_reg_gap,min_reg_gap,p50_ms,p90_ms,max_ms\n";
  out << std::fixed << std::setprecision(3);
  for (const auto &[family, fs] : summary.families) {
    out << family << ',' << fs.count << ',' << fs.ok << ',' << fs.timeouts << ',' << fs.errors
        << ',' << fs.proved_class << ',' << fs.conjecture_violations << ','
        << fs.proved_violations << ',' << (fs.max_reg_gap ? std::to_string(*fs.max_reg_gap) : "")
        << ',' << (fs.min_reg_gap ? std::to_string(*fs.min_reg_gap) : "") << ',' << fs.p50_ms
        << ',' << fs.p90_ms << ',' << fs.max_ms << '\n';
  }
}

nlohmann::json strip_timings(nlohmann::json record) {
  if (record.is_object()) {
    record.erase("timings_ms");
    for (auto &[key, value] : record.items())
      value = strip_timings(std::move(value));
  } else if (record.is_array()) {
    for (auto &value : record)
      value = strip_timings(std::move(value));
  }
  return record;
}

} // namespace regclosure
