// Command-line front end for the regclosure library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "regclosure/batch.hpp"
#include "regclosure/betti.hpp"
#include "regclosure/classify.hpp"
#include "regclosure/errors.hpp"
#include "regclosure/ideal_io.hpp"
#include "regclosure/newton.hpp"
#include "regclosure/sample.hpp"
#include "regclosure/verify.hpp"

using namespace regclosure;

namespace {

constexpr int kExitInputError = 3;

/// "-" reads stdin, "@path" reads a file, anything else is the ideal itself.
std::string read_source(const std::string &arg) {
  auto slurp = [](std::istream &in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  if (arg == "-")
    return slurp(std::cin);
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in)
      throw ValidationError("cannot open " + arg.substr(1));
    return slurp(in);
  }
  return arg;
}

struct IdealArg {
  std::string text;
  std::optional<std::size_t> n;

  void add_to(CLI::App *cmd) {
    cmd->add_option("ideal", text, "ideal as text (x^2*y, ...), JSON, @file or -")->required();
    cmd->add_option("--n", n, "number of variables for text input");
  }
  [[nodiscard]] MonomialIdeal get() const { return parse_ideal(read_source(text), n); }
};

std::size_t default_jobs() {
  if (const char *env = std::getenv("REGCLOSURE_JOBS")) {
    try {
      auto v = std::stoul(env);
      if (v > 0)
        return v;
    } catch (const std::exception &) {
    }
    throw ValidationError(std::string("REGCLOSURE_JOBS must be a positive integer, got ") + env);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Family> parse_families(const std::string &list) {
  if (list.empty() || list == "all")
    return all_families();
  std::vector<Family> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      out.push_back(parse_family(item));
  if (out.empty())
    throw ValidationError("empty family list");
  return out;
}

void print_betti(const BettiTable &table, std::ostream &out) {
  out << "i, C, degree, rank\n";
  for (const auto &[key, rank] : table.entries())
    out << key.first << ", " << exponent_to_json(key.second).dump() << ", " << key.second.degree()
        << ", " << rank << '\n';
}

void print_graded(const GradedBetti &graded, std::ostream &out) {
  // Macaulay-style matrix: row j holds beta_{i, i+j}.
  int top = graded.projective_dimension();
  Exponent reg = graded.regularity();
  Exponent low = reg;
  for (const auto &[key, rank] : graded.entries())
    low = std::min(low, key.second - key.first);
  out << "graded (row j, column i: beta_{i,i+j})\n      ";
  for (int i = 0; i <= top; ++i)
    out << std::setw(6) << i;
  out << '\n';
  for (Exponent j = low; j <= reg; ++j) {
    out << std::setw(4) << j << ": ";
    for (int i = 0; i <= top; ++i) {
      auto it = graded.entries().find({i, i + j});
      if (it == graded.entries().end())
        out << std::setw(6) << '-';
      else
        out << std::setw(6) << it->second;
    }
    out << '\n';
  }
  out << "total ";
  for (auto t : graded.totals())
    out << std::setw(6) << t;
  out << '\n';
}

std::ofstream open_append(const std::string &path) {
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw ValidationError("cannot open " + path + " for writing");
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Integral closure, Betti numbers and regularity of monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "regclosure record format " +
                                        std::to_string(kRecordFormatVersion));

  IdealArg parse_arg;
  auto *parse_cmd = app.add_subcommand("parse", "print the canonical JSON and text form");
  parse_arg.add_to(parse_cmd);

  IdealArg closure_arg;
  auto *closure_cmd = app.add_subcommand("closure", "integral closure as canonical JSON");
  closure_arg.add_to(closure_cmd);
  bool closure_text = false;
  closure_cmd->add_flag("--text", closure_text, "print generators as text instead");

  IdealArg delta_arg;
  auto *delta_cmd = app.add_subcommand("delta", "largest degree of a corner point");
  delta_arg.add_to(delta_cmd);

  IdealArg corners_arg;
  bool corners_cert = false;
  auto *corners_cmd = app.add_subcommand("corners", "corner points of the Newton polyhedron");
  corners_arg.add_to(corners_cmd);
  corners_cmd->add_flag("--certificate", corners_cert,
                        "for each non-corner generator print weights over the other generators");

  IdealArg member_arg;
  std::string member_point;
  unsigned member_rmax = kDefaultOracleRMax;
  bool member_cert = false;
  auto *member_cmd = app.add_subcommand("member", "Newton polyhedron membership of a lattice point");
  member_arg.add_to(member_cmd);
  member_cmd->add_option("--point", member_point, "exponent vector, e.g. 1,2,0")->required();
  member_cmd->add_option("--r-max", member_rmax, "largest power tried by the power-test oracle");
  member_cmd->add_flag("--certificate", member_cert, "print the weights as exact fractions");

  IdealArg betti_arg;
  std::string betti_field = "q";
  bool betti_fast = false;
  auto *betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers of S/I");
  betti_arg.add_to(betti_cmd);
  betti_cmd->add_option("--field", betti_field, "q or fP for a prime P");
  betti_cmd->add_flag("--fast", betti_fast, "use the closed form (stable or complete intersection)");

  IdealArg reg_arg;
  std::string reg_field = "q";
  bool reg_fast = false;
  auto *reg_cmd = app.add_subcommand("reg", "regularity of S/I and of I");
  reg_arg.add_to(reg_cmd);
  reg_cmd->add_option("--field", reg_field, "q or fP for a prime P");
  reg_cmd->add_flag("--fast", reg_fast, "use the closed form (stable or complete intersection)");

  IdealArg classify_arg;
  auto *classify_cmd = app.add_subcommand("classify", "structural flags of the ideal");
  classify_arg.add_to(classify_cmd);

  std::string sample_family = "random3";
  std::uint64_t sample_seed = 0;
  std::size_t sample_count = 1;
  FamilySpec sample_spec;
  auto *sample_cmd = app.add_subcommand("sample", "stream sampled ideals as JSON lines");
  sample_cmd->add_option("--family", sample_family, "family tag");
  sample_cmd->add_option("--seed", sample_seed, "master seed");
  sample_cmd->add_option("--count", sample_count, "number of ideals");
  sample_cmd->add_option("--n", sample_spec.n, "number of variables");
  sample_cmd->add_option("--max-deg", sample_spec.max_degree, "largest generator degree");

  IdealArg verify_arg;
  VerifyOptions verify_options;
  std::string verify_field = "q";
  unsigned verify_budget = 30000;
  auto *verify_cmd = app.add_subcommand("verify", "check the conjecture and every proved statement");
  verify_arg.add_to(verify_cmd);
  verify_cmd->add_option("--hoa", verify_options.hoa_max, "check the Hoa bounds for m = 1..M");
  verify_cmd->add_option("--field", verify_field, "q or fP for a prime P");
  verify_cmd->add_option("--budget-ms", verify_budget, "wall-clock budget, 0 for none");

  std::string fuzz_families = "all";
  std::string fuzz_out;
  std::string fuzz_csv;
  std::string fuzz_field = "q";
  unsigned fuzz_budget = 30000;
  BatchOptions batch;
  std::optional<std::size_t> fuzz_jobs;
  auto *fuzz_cmd = app.add_subcommand("fuzz", "sample and verify a batch, writing JSONL");
  fuzz_cmd->add_option("--family", fuzz_families, "comma-separated family tags or all");
  fuzz_cmd->add_option("--count", batch.count, "number of records");
  fuzz_cmd->add_option("--seed", batch.master_seed, "master seed");
  fuzz_cmd->add_option("--n", batch.spec.n, "number of variables");
  fuzz_cmd->add_option("--max-deg", batch.spec.max_degree, "largest generator degree");
  fuzz_cmd->add_option("--min-gens", batch.spec.min_gens, "fewest sampled monomials");
  fuzz_cmd->add_option("--max-gens", batch.spec.max_gens, "most sampled monomials");
  fuzz_cmd->add_option("--out", fuzz_out, "JSONL file to append to (default stdout)");
  fuzz_cmd->add_option("--csv", fuzz_csv, "also write the summary as CSV");
  fuzz_cmd->add_option("--jobs", fuzz_jobs, "worker threads (default $REGCLOSURE_JOBS)");
  fuzz_cmd->add_option("--hoa", batch.verify.hoa_max, "check the Hoa bounds for m = 1..M");
  fuzz_cmd->add_option("--field", fuzz_field, "q or fP for a prime P");
  fuzz_cmd->add_option("--budget-ms", fuzz_budget, "per-record budget, 0 for none");

  std::string report_path;
  std::string report_csv;
  auto *report_cmd = app.add_subcommand("report", "summarize a JSONL file");
  report_cmd->add_option("results", report_path, "JSONL file")->required();
  report_cmd->add_option("--csv", report_csv, "write the summary as CSV to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse_cmd) {
      auto ideal = parse_arg.get();
      std::cout << to_canonical_json(ideal) << '\n' << ideal_to_text(ideal) << '\n';
    } else if (*closure_cmd) {
      auto closed = integral_closure(closure_arg.get());
      std::cout << (closure_text ? ideal_to_text(closed) : to_canonical_json(closed)) << '\n';
    } else if (*delta_cmd) {
      std::cout << delta(delta_arg.get()) << '\n';
    } else if (*corners_cmd) {
      auto ideal = corners_arg.get();
      auto corners = corner_points(ideal);
      nlohmann::json j = nlohmann::json::array();
      for (const auto &v : corners)
        j.push_back(exponent_to_json(v));
      std::cout << j.dump() << '\n';
      if (corners_cert) {
        for (const auto &g : ideal.generators()) {
          if (std::ranges::find(corners, g) != corners.end())
            continue;
          std::vector<ExponentVector> others;
          for (const auto &h : ideal.generators())
            if (h != g)
              others.push_back(h);
          MonomialIdeal rest = minimalize(std::move(others), ideal.dimension());
          auto cert = np_membership(g, rest);
          if (!cert)
            throw ConsistencyError("non-corner generator without certificate");
          std::cout << monomial_to_text(g) << " over " << ideal_to_text(rest) << ": "
                    << cert->to_string() << '\n';
        }
      }
    } else if (*member_cmd) {
      auto ideal = member_arg.get();
      auto point = parse_exponent_list(member_point);
      if (point.size() != ideal.dimension())
        throw DimensionError("point has " + std::to_string(point.size()) + " entries, ideal has " +
                             std::to_string(ideal.dimension()) + " variables");
      auto cert = np_membership(point, ideal);
      bool oracle = closure_membership_oracle(point, ideal, member_rmax);
      std::cout << "newton: " << (cert ? "member" : "not member") << '\n'
                << "power test r<=" << member_rmax << ": " << (oracle ? "member" : "not found")
                << '\n';
      if (cert && member_cert)
        std::cout << "weights: " << cert->to_string() << '\n'
                  << "denominator lcm: " << cert->denominator_lcm() << '\n';
    } else if (*betti_cmd) {
      auto ideal = betti_arg.get();
      Field field = Field::parse(betti_field);
      if (betti_fast) {
        if (is_complete_intersection(ideal)) {
          auto table = koszul_betti(ideal);
          print_betti(table, std::cout);
          print_graded(table.graded(), std::cout);
        } else if (is_stable(ideal)) {
          std::cout << "graded Betti numbers of I (Eliahou-Kervaire)\n";
          print_graded(ek_betti(ideal), std::cout);
        } else {
          throw PreconditionError("--fast needs a stable ideal or a complete intersection");
        }
      } else {
        auto table = multigraded_betti(ideal, field);
        print_betti(table, std::cout);
        print_graded(table.graded(), std::cout);
      }
    } else if (*reg_cmd) {
      auto ideal = reg_arg.get();
      Exponent quotient_reg;
      if (reg_fast) {
        if (is_complete_intersection(ideal))
          quotient_reg = quotient_regularity(koszul_betti(ideal));
        else if (is_stable(ideal))
          quotient_reg = ek_betti(ideal).regularity() - 1;
        else
          throw PreconditionError("--fast needs a stable ideal or a complete intersection");
      } else {
        quotient_reg = quotient_regularity(multigraded_betti(ideal, Field::parse(reg_field)));
      }
      std::cout << "reg(S/I) = " << quotient_reg << "\nreg(I) = " << quotient_reg + 1 << '\n';
    } else if (*classify_cmd) {
      auto ideal = classify_arg.get();
      nlohmann::json j;
      j["ci"] = is_complete_intersection(ideal);
      j["stable"] = is_stable(ideal);
      j["strongly-stable"] = is_strongly_stable(ideal);
      j["m-primary"] = is_m_primary(ideal);
      j["integrally-closed"] = is_integrally_closed(ideal);
      if (!ideal.is_zero() && !ideal.is_unit()) {
        auto table = multigraded_betti(ideal, Field::rationals());
        j["gorenstein"] = is_gorenstein(ideal, table);
        if (ideal.is_equigenerated())
          j["linear-resolution"] = has_linear_resolution(ideal, table);
        j["height"] = height(ideal);
        j["dim"] = ideal.dimension() - height(ideal);
      }
      std::cout << j.dump() << '\n';
    } else if (*sample_cmd) {
      Family family = parse_family(sample_family);
      sample_spec.family = family;
      for (std::size_t i = 0; i < sample_count; ++i) {
        sample_spec.seed = derive_seed(sample_seed, family, i);
        std::cout << to_canonical_json(sample(sample_spec)) << '\n';
      }
    } else if (*verify_cmd) {
      auto ideal = verify_arg.get();
      verify_options.field = Field::parse(verify_field);
      verify_options.budget = std::chrono::milliseconds(verify_budget);
      auto rec = verify_conjecture(ideal, verify_options);
      std::cout << rec.to_json().dump(2) << '\n';
      if (rec.status != "ok")
        return 1;
      if (!rec.proved_violations().empty())
        return 1;
      return rec.conjecture_holds ? 0 : 2;
    } else if (*fuzz_cmd) {
      batch.families = parse_families(fuzz_families);
      batch.jobs = fuzz_jobs ? *fuzz_jobs : default_jobs();
      batch.verify.field = Field::parse(fuzz_field);
      batch.verify.budget = std::chrono::milliseconds(fuzz_budget);
      BatchSummary summary;
      if (fuzz_out.empty()) {
        summary = run_batch(batch, std::cout);
        print_summary(summary, std::cerr);
      } else {
        auto out = open_append(fuzz_out);
        summary = run_batch(batch, out);
        print_summary(summary, std::cout);
      }
      if (!fuzz_csv.empty()) {
        std::ofstream csv(fuzz_csv);
        write_summary_csv(summary, csv);
      }
      return summary.exit_code();
    } else if (*report_cmd) {
      std::ifstream in(report_path);
      if (!in)
        throw ValidationError("cannot open " + report_path);
      auto summary = summarize_records(read_jsonl(in));
      print_summary(summary, std::cout);
      if (!report_csv.empty()) {
        std::ofstream csv(report_csv);
        write_summary_csv(summary, csv);
      }
      return summary.exit_code();
    }
  } catch (const ConsistencyError &e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const TimeoutError &e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
