#include <doctest.h>

#include <sstream>

#include "regclosure/batch.hpp"
#include "regclosure/errors.hpp"
#include "regclosure/newton.hpp"
#include "regclosure/verify.hpp"
#include "support.hpp"

using namespace regclosure;
using namespace testing;

TEST_CASE("single-ideal verification") {
  auto rec = verify_conjecture(I("x^2, y^3"));
  CHECK(rec.status == "ok");
  CHECK(rec.reg_ideal == 4);
  CHECK(rec.reg_closure == 3);
  CHECK(rec.closure == I("x^2, x*y^2, y^3"));
  CHECK(rec.conjecture_holds);
  CHECK(rec.fast_path["ideal"].contains("koszul"));
  CHECK(rec.fast_path["closure"].contains("ek"));
  CHECK(rec.proved_violations().empty());
  CHECK(rec.in_proved_class());

  rec = verify_conjecture(I("x^2, x*y, y^2"));
  CHECK(rec.closure == I("x^2, x*y, y^2"));
  CHECK(rec.reg_ideal == 2);
  CHECK(rec.reg_closure == 2);
  CHECK(rec.flags.at("integrally_closed"));
  CHECK(rec.conjecture_holds);

  auto record_json = rec.to_json();
  CHECK(record_json["format_version"] == kRecordFormatVersion);
  CHECK(record_json["ideal"] == nlohmann::json::parse(R"({"n":2,"gens":[[0,2],[1,1],[2,0]]})"));

  CHECK_THROWS_AS((void)verify_conjecture(MonomialIdeal::zero(2)), UndefinedInputError);
  CHECK_THROWS_AS((void)verify_conjecture(MonomialIdeal::unit(2)), UndefinedInputError);
}

TEST_CASE("height-one ideals reduce by the common factor") {
  auto rec = verify_conjecture(I("x^3*y, x*y^3, x^2*y^2*z", 3));
  CHECK(rec.checks.at("factoring_consistent"));
  CHECK(rec.checks.at("height_one_regularity_shift"));
  rec = verify_conjecture(I("x^2*y^3"));
  CHECK(rec.reg_ideal == 5);
  CHECK(rec.reg_closure == 5);
  CHECK(rec.checks.at("height_one_regularity_shift"));
}

TEST_CASE("Hoa bounds") {
  auto bounds = verify_hoa_bounds(I("x^2, y^3"), 2);
  REQUIRE(bounds.size() == 2);
  CHECK(bounds[0].lower == 3);
  CHECK(bounds[0].regularity == 3);
  CHECK(bounds[0].upper == 3);
  CHECK(bounds[1].lower == 6);
  CHECK(bounds[1].regularity == 6);
  CHECK(bounds[1].upper == 6);
  CHECK(integral_closure(I("x^4, x^2*y^3, y^6")) == integral_closure(ideal_power(I("x^2, y^3"), 2)));

  bounds = verify_hoa_bounds(I("x*y"), 1);
  CHECK(bounds[0].lower == 2);
  CHECK(bounds[0].regularity == 2);
  CHECK(bounds[0].upper == 3);
  CHECK(bounds[0].holds());
}

TEST_CASE("m-primary case") {
  auto check = verify_mprimary_case(I("x^2, y^3"));
  CHECK(check.delta == 3);
  CHECK(check.reg_closure == 3);
  CHECK(check.reg_ideal == 4);
  check = verify_mprimary_case(ideal_power(I("x, y, z"), 5));
  CHECK(check.delta == 5);
  CHECK(check.reg_closure == 5);
  CHECK(check.reg_ideal == 5);
  check = verify_mprimary_case(I("x, y"));
  CHECK(check.delta == 1);
  CHECK(check.reg_closure == 1);
  CHECK(check.reg_ideal == 1);
  CHECK_THROWS_AS((void)verify_mprimary_case(I("x*y")), PreconditionError);
}

TEST_CASE("records replay exactly") {
  RandomIdeals gen(51);
  for (int trial = 0; trial < 20; ++trial) {
    auto ideal = gen.next(3, 5, 5);
    if (ideal.is_unit())
      continue;
    VerifyOptions options;
    options.hoa_max = 2;
    options.seed = 99;
    auto first = strip_timings(verify_conjecture(ideal, options).to_json());
    auto stored = ideal_from_json(first["ideal"]);
    auto second = strip_timings(verify_conjecture(stored, options).to_json());
    CHECK(first.dump() == second.dump());
    CHECK(first["checks"].size() > 5);
  }
}

TEST_CASE("budget exhaustion yields a timeout record") {
  VerifyOptions options;
  options.budget = std::chrono::milliseconds(1);
  auto rec = verify_conjecture(I("x^12*y^5*z^3, y^13*z^2, z^11*x^4, x^5*y^6*z^4, x^2*y^2*z^9"),
                               options);
  CHECK(rec.status == "timeout");
  CHECK(rec.checks.empty());
  auto j = rec.to_json();
  CHECK_FALSE(j.contains("reg_ideal"));
}

TEST_CASE("batches") {
  BatchOptions options;
  options.master_seed = 3;
  options.count = 21;
  options.spec.n = 3;
  options.spec.max_degree = 5;

  std::ostringstream serial_out;
  auto serial = run_batch(options, serial_out);
  options.jobs = 3;
  std::ostringstream parallel_out;
  auto parallel = run_batch(options, parallel_out);

  std::istringstream serial_in(serial_out.str()), parallel_in(parallel_out.str());
  auto serial_records = read_jsonl(serial_in);
  auto parallel_records = read_jsonl(parallel_in);
  REQUIRE(serial_records.size() == 21);
  REQUIRE(parallel_records.size() == 21);
  for (std::size_t i = 0; i < 21; ++i) {
    CHECK(serial_records[i]["index"] == i);
    CHECK(strip_timings(serial_records[i]).dump() == strip_timings(parallel_records[i]).dump());
  }
  CHECK(serial.total == 21);
  CHECK(serial.families.size() == 7);
  CHECK(serial.families.at("ci").count == 3);
  CHECK(serial.exit_code() == 0);
  CHECK(serial.proved_failures.empty());

  auto again = summarize_records(serial_records);
  CHECK(again.families.at("stable").ok == serial.families.at("stable").ok);

  std::ostringstream table, csv;
  print_summary(serial, table);
  write_summary_csv(serial, csv);
  CHECK(table.str().find("random3") != std::string::npos);
  CHECK(csv.str().rfind("family,count,ok,", 0) == 0);

  std::istringstream broken("{\"a\":1}\nnot json\n");
  CHECK_THROWS_AS((void)read_jsonl(broken), ParseError);
}

TEST_CASE("summary verdicts") {
  auto ok = nlohmann::json::parse(R"({"index":0,"family":"random3","status":"ok","reg_ideal":3,
      "reg_closure":4,"proved_by":[],"checks":{"hoa_m1":true},"observations":{},"n":3,"height":2})");
  auto summary = summarize_records({ok});
  CHECK(summary.families.at("random3").conjecture_violations == 1);
  CHECK(summary.exit_code() == 2);

  auto proved = ok;
  proved["proved_by"] = {"stable"};
  summary = summarize_records({proved});
  CHECK(summary.exit_code() == 1);
  CHECK(summary.proved_failures.size() == 1);

  auto failed_check = ok;
  failed_check["reg_closure"] = 2;
  failed_check["checks"]["hoa_m1"] = false;
  summary = summarize_records({failed_check});
  CHECK(summary.exit_code() == 1);

  auto timeout = nlohmann::json::parse(R"({"index":1,"family":"ci","status":"timeout"})");
  summary = summarize_records({timeout});
  CHECK(summary.families.at("ci").timeouts == 1);
  CHECK(summary.exit_code() == 0);

  auto lr = ok;
  lr["reg_closure"] = 3;
  lr["observations"] = {{"linear_resolution_ideal", true}, {"linear_resolution_closure", false}};
  summary = summarize_records({lr});
  CHECK(summary.linear_resolution.counts[1][0] == 1);
  CHECK(summary.linear_resolution.total() == 1);

  auto nested = nlohmann::json::parse(R"({"timings_ms":{"a":1},"x":[{"timings_ms":2,"y":3}]})");
  CHECK(strip_timings(nested).dump() == R"({"x":[{"y":3}]})");
}

TEST_CASE("ideals between a height-three Gorenstein ideal and its closure") {
  auto ideal = ideal_from_json(nlohmann::json::parse(
      R"({"n":5,"gens":[[0,0,0,1,1],[0,0,2,0,1],[0,2,0,1,0],[2,0,2,0,0],[2,2,0,0,0]]})"));
  auto closed = integral_closure(ideal);
  CHECK(closed.size() == 8);
  auto table = multigraded_betti(ideal);
  CHECK(table.totals() == std::vector<BettiCount>{1, 5, 5, 1});
  CHECK(multigraded_betti(closed).totals() == std::vector<BettiCount>{1, 8, 12, 5});

  std::vector<ExponentVector> kept;
  for (const auto &g : closed.generators())
    if (g != E({2, 1, 1, 0, 0}))
      kept.push_back(g);
  auto between = minimalize(kept, 5);
  for (const auto &g : ideal.generators())
    CHECK(membership(g, between));
  for (const Field &field : {Field::rationals(), Field::prime(2)}) {
    auto totals = multigraded_betti(between, field).totals();
    // Lies above the ideal termwise but exceeds the closure in degrees 3 and 4.
    CHECK(totals == std::vector<BettiCount>{1, 7, 11, 6, 1});
  }
}
