#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dimlab/alternating.hpp"
#include "dimlab/binary_arith.hpp"
#include "dimlab/core_tower.hpp"
#include "dimlab/dimension.hpp"
#include "dimlab/enumeration.hpp"
#include "dimlab/parents.hpp"
#include "dimlab/report.hpp"

namespace dimlab::cli {

namespace {

using nlohmann::json;

Format format_or(const CliConfig& config, Format fallback) {
  return config.format.value_or(fallback);
}

std::string quoted(const std::string& field) { return '"' + field + '"'; }

std::string sign_text(OdSign sign) { return sign.is_plus() ? "+1" : "-1"; }

// ---- counts / alt ----------------------------------------------------------

int run_counts(const CliConfig& config, std::ostream& out) {
  const CountReport report = count_report(static_cast<std::uint64_t>(config.n), config.oracle_bound);
  switch (format_or(config, Format::csv)) {
    case Format::csv:
      if (config.header) out << kCountsCsvHeader << '\n';
      out << csv_row(report) << '\n';
      break;
    case Format::json:
      out << json{{"n", report.n},         {"a", report.a},   {"a1", report.a1},
                  {"a2", report.a2},       {"a3", report.a3}, {"delta", report.delta},
                  {"m4", report.m4},       {"source", report.source_label()}}
                 .dump()
          << '\n';
      break;
    case Format::text:
      out << "n      = " << report.n << "\na      = " << report.a << "\na1     = " << report.a1
          << "\na2     = " << report.a2 << "\na3     = " << report.a3
          << "\ndelta  = " << report.delta << "\nm4     = " << report.m4
          << "\nsource = " << report.source_label() << '\n';
      break;
  }
  return kExitOk;
}

int run_alt(const CliConfig& config, std::ostream& out) {
  const AltReport report =
      alternating_report(static_cast<std::uint64_t>(config.n), config.oracle_bound);
  switch (format_or(config, Format::csv)) {
    case Format::csv:
      if (config.header) out << kAltCsvHeader << '\n';
      out << csv_row(report) << '\n';
      break;
    case Format::json:
      out << json{{"n", report.n},
                  {"a_circ", report.a_circ},
                  {"a1_circ", report.a1_circ},
                  {"a3_circ", report.a3_circ},
                  {"delta_circ", report.delta_circ},
                  {"m2_hat", report.m2_hat},
                  {"source", report.source_label()}}
                 .dump()
          << '\n';
      break;
    case Format::text:
      out << "n          = " << report.n << "\na_circ     = " << report.a_circ
          << "\na1_circ    = " << report.a1_circ << "\na3_circ    = " << report.a3_circ
          << "\ndelta_circ = " << report.delta_circ << "\nm2_hat     = " << report.m2_hat
          << "\nsource     = " << report.source_label() << '\n';
      break;
  }
  return kExitOk;
}

// ---- tower -----------------------------------------------------------------

std::string join_weights(const WeightVector& weights) {
  if (weights.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(weights[i]);
  }
  return out;
}

std::string join_row(const std::vector<Partition>& row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j > 0) out += " | ";
    out += to_string(row[j]);
  }
  return out;
}

int run_tower(const CliConfig& config, std::ostream& out) {
  const Partition lambda = parse_partition(config.partition);
  const CoreTower t = tower(lambda);
  const WeightVector weights = row_weights(t);
  const char* cls = to_string(classify_by_tower(lambda));
  switch (format_or(config, Format::text)) {
    case Format::text:
      out << "partition " << to_string(lambda) << " (n = " << lambda.size() << ")\n";
      for (std::size_t i = 0; i < t.depth(); ++i) {
        out << "row " << i << ": " << join_row(t.rows()[i]) << '\n';
      }
      out << "w = " << join_weights(weights) << '\n';
      out << "class = " << cls << '\n';
      break;
    case Format::csv:
      out << "row,weight,nodes\n";
      for (std::size_t i = 0; i < t.depth(); ++i) {
        out << i << ',' << weights[i] << ',' << quoted(join_row(t.rows()[i])) << '\n';
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& row : t.rows()) {
        json nodes = json::array();
        for (const auto& node : row) nodes.push_back(to_string(node));
        rows.push_back(std::move(nodes));
      }
      out << json{{"partition", to_string(lambda)},
                  {"n", lambda.size()},
                  {"rows", rows},
                  {"weights", weights},
                  {"class", cls}}
                 .dump()
          << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---- parents ---------------------------------------------------------------

struct ParentLine {
  std::string type;
  std::int64_t parameter;
  std::int64_t affected;
  int eta;
  std::string predicted;
  std::string actual;
  std::string parent;
};

int run_parents(const CliConfig& config, std::ostream& out) {
  const Partition core = parse_partition(config.partition);
  const DimClass core_class = dim_class(core);
  std::vector<ParentLine> lines;
  for (const auto& record : all_parents(core, config.r_power)) {
    const DimClass cls = dim_class(record.parent);
    std::string predicted = "n/a";
    if (core_class.is_odd() && record.parent.size() > 3) {
      predicted = sign_text(workhorse_predict(record, core_class.od));
    }
    lines.push_back({record.type == ParentType::type1 ? "I" : "II", record.parameter,
                     record.affected, eta(record), predicted,
                     cls.is_odd() ? sign_text(cls.od) : "even", to_string(record.parent)});
  }
  switch (format_or(config, Format::csv)) {
    case Format::csv:
      out << "type,parameter,affected,eta,predicted_od,actual_od,parent\n";
      for (const auto& l : lines) {
        out << l.type << ',' << l.parameter << ',' << l.affected << ',' << l.eta << ','
            << l.predicted << ',' << l.actual << ',' << quoted(l.parent) << '\n';
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& l : lines) {
        rows.push_back({{"type", l.type},
                        {"parameter", l.parameter},
                        {"affected", l.affected},
                        {"eta", l.eta},
                        {"predicted_od", l.predicted},
                        {"actual_od", l.actual},
                        {"parent", l.parent}});
      }
      out << json{{"core", to_string(core)}, {"r", config.r_power}, {"parents", rows}}.dump()
          << '\n';
      break;
    }
    case Format::text:
      out << "core " << to_string(core) << ", hook 2^" << config.r_power << ", "
          << lines.size() << " parents\n";
      for (const auto& l : lines) {
        out << "  " << l.type << " param=" << l.parameter << " h=" << l.affected
            << " eta=" << l.eta << " od predicted " << l.predicted << " actual " << l.actual
            << "  " << l.parent << '\n';
      }
      break;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct Check {
  std::int64_t n = 0;
  std::string name;
  std::string claim;  ///< the statement being tested, for the diff report
  bool ok = true;
  std::string formula;
  std::string oracle;
};

template <class A, class B>
Check compare(std::int64_t n, std::string name, std::string claim, const A& formula,
              const B& oracle) {
  return {n, std::move(name), std::move(claim), formula == oracle, std::to_string(formula),
          std::to_string(oracle)};
}

int top_bit(std::int64_t n) { return std::bit_width(static_cast<std::uint64_t>(n)) - 1; }

Check check_workhorse(std::int64_t n) {
  const int r = top_bit(n);
  const std::int64_t m = n - (std::int64_t{1} << r);
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  for (const Partition& core : enumerate_odd_partitions(static_cast<std::uint64_t>(m))) {
    const OdSign od_core = dim_class(core).od;
    for (const auto& record : all_parents(core, r)) {
      const DimClass actual = dim_class(record.parent);
      ++checked;
      if (!actual.is_odd() || actual.od != workhorse_predict(record, od_core)) {
        ++failures;
      }
    }
  }
  Check check = compare(n, "workhorse", "od(f) of a parent from od(f) of its core", failures,
                        std::int64_t{0});
  check.formula = std::to_string(checked - failures) + "/" + std::to_string(checked) + " agree";
  check.oracle = std::to_string(checked) + "/" + std::to_string(checked);
  return check;
}

Check check_tower_class(std::int64_t n) {
  std::int64_t total = 0;
  std::int64_t failures = 0;
  for (const Partition& lambda : enumerate_partitions(n)) {
    const int v2 = dim_class(lambda).v2;
    const TowerClass expected =
        v2 == 0 ? TowerClass::odd : v2 == 1 ? TowerClass::two_mod_4 : TowerClass::other;
    ++total;
    failures += classify_by_tower(lambda) != expected;
  }
  Check check = compare(n, "tower-class", "row weights of the 2-core tower determine v2(f) <= 1",
                        failures, std::int64_t{0});
  check.formula = std::to_string(total - failures) + "/" + std::to_string(total) + " agree";
  check.oracle = std::to_string(total) + "/" + std::to_string(total);
  return check;
}

std::vector<Check> verify_one(std::int64_t n, std::int64_t bound) {
  std::vector<Check> checks;
  const auto un = static_cast<std::uint64_t>(n);
  const CountReport oracle = oracle_counts(n, OracleOptions{bound, 1});

  checks.push_back(compare(n, "odd-count", "a(n) = 2^(sum of binary digit positions)",
                           count_odd(un), oracle.a));

  const DeltaResult d = delta(un, bound);
  if (d.status == DeltaStatus::exact_formula) {
    checks.push_back(compare(n, std::string("delta-") + to_string(d.rule),
                             "closed form for a1 - a3", d.value, oracle.delta));
  }

  const int r = top_bit(n);
  const std::int64_t m = n - (std::int64_t{1} << r);
  if (r >= 1 && m > 0 && m < (std::int64_t{1} << (r - 1))) {
    const std::int64_t inner = oracle_counts(m, OracleOptions{bound, 1}).delta;
    checks.push_back(compare(n, "delta-top-bit-recursion",
                             "delta(2^R + m) = (2 - 2(-1)^m) delta(m) for m < 2^(R-1)",
                             (m % 2 == 0 ? 0 : 4) * inner, oracle.delta));
  }
  if (auto split = a1_a3_by_top_bit(un, bound);
      split && split->status == DeltaStatus::exact_formula) {
    checks.push_back(compare(n, "a1-top-bit", "explicit a1 for n = 2^R + m, m < 2^(R-1)",
                             split->a1, oracle.a1));
    checks.push_back(compare(n, "a3-top-bit", "explicit a3 for n = 2^R + m, m < 2^(R-1)",
                             split->a3, oracle.a3));
  }

  checks.push_back(compare(n, "a2-recursion", "a2 recursion on the top binary digit", a2(un),
                           oracle.a2));
  if (is_sparse(un)) {
    checks.push_back(compare(n, "a2-sparse", "a2(n) = a(n)(n - 2 nu(n))/8 for sparse even n",
                             a2_sparse(un), oracle.a2));
  }
  checks.push_back(compare(n, "m4", "m4(n) = a(n) + a2(n)", m4(un), oracle.m4));

  if (n >= 4) {
    checks.push_back(check_workhorse(n));
  }
  checks.push_back(check_tower_class(n));

  if (n >= 3) {
    const AltReport alt = alternating_oracle(n, bound);
    checks.push_back(compare(n, "alt-hat-m2", "self-conjugate partitions with f = 2 mod 4",
                             hat_m2(un), alt.m2_hat));
    checks.push_back(compare(n, "alt-a-circ", "odd-degree irreducibles of A_n", a_circ(un),
                             alt.a_circ));
    const DeltaResult dc = delta_circ(un, bound);
    if (dc.status == DeltaStatus::exact_formula) {
      checks.push_back(compare(n, "alt-delta-circ", "a1 - a3 for A_n", dc.value, alt.delta_circ));
    }
  }
  return checks;
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.max_n > config.oracle_bound) {
    err << "verify: --max-n " << config.max_n << " exceeds the oracle bound "
        << config.oracle_bound << '\n';
    return kExitUsage;
  }
  const auto count = static_cast<std::size_t>(config.max_n);
  std::vector<std::vector<Check>> results(count);
  std::vector<std::exception_ptr> errors(count);
  unsigned threads = config.threads != 0 ? config.threads
                                         : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));

  // Largest n first: those dominate the runtime.
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k = cursor++; k < count; k = cursor++) {
      const std::size_t index = count - 1 - k;
      try {
        results[index] = verify_one(static_cast<std::int64_t>(index + 1), config.oracle_bound);
      } catch (...) {
        errors[index] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<const Check*> failed;
  std::size_t total = 0;
  for (const auto& per_n : results) {
    for (const auto& check : per_n) {
      ++total;
      if (!check.ok) failed.push_back(&check);
    }
  }

  switch (format_or(config, Format::csv)) {
    case Format::csv:
      out << "n,check,status,formula,oracle\n";
      for (const auto& per_n : results) {
        for (const auto& c : per_n) {
          out << c.n << ',' << c.name << ',' << (c.ok ? "ok" : "MISMATCH") << ','
              << quoted(c.formula) << ',' << quoted(c.oracle) << '\n';
        }
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& per_n : results) {
        for (const auto& c : per_n) {
          rows.push_back({{"n", c.n},
                          {"check", c.name},
                          {"status", c.ok ? "ok" : "MISMATCH"},
                          {"formula", c.formula},
                          {"oracle", c.oracle}});
        }
      }
      out << json{{"max_n", config.max_n}, {"checks", rows}, {"mismatches", failed.size()}}.dump()
          << '\n';
      break;
    }
    case Format::text:
      for (const auto& per_n : results) {
        const auto bad = std::count_if(per_n.begin(), per_n.end(), [](const Check& c) { return !c.ok; });
        out << "n = " << per_n.front().n << ": " << per_n.size() << " checks, "
            << (bad == 0 ? "ok" : std::to_string(bad) + " MISMATCH") << '\n';
      }
      out << total << " checks, " << failed.size() << " mismatches\n";
      break;
  }

  if (!failed.empty()) {
    err << "verification failed:\n";
    for (const Check* c : failed) {
      err << "  n = " << c->n << ": " << c->name << " (" << c->claim << "): formula "
          << c->formula << ", oracle " << c->oracle << '\n';
    }
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- bench -----------------------------------------------------------------

int run_bench(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.max_n > config.oracle_bound) {
    err << "bench: --max-n " << config.max_n << " exceeds the oracle bound "
        << config.oracle_bound << '\n';
    return kExitUsage;
  }
  using clock = std::chrono::steady_clock;
  struct Row {
    std::int64_t n;
    std::uint64_t odd;
    double odd_ms;
    std::uint64_t partitions;
    double all_ms;
  };
  std::vector<Row> rows;
  for (std::int64_t n = 1; n <= config.max_n; ++n) {
    const auto t0 = clock::now();
    std::uint64_t odd = 0;
    for (const Partition& lambda : enumerate_odd_partitions(static_cast<std::uint64_t>(n))) {
      odd += lambda.size() == n;
    }
    const auto t1 = clock::now();
    std::uint64_t partitions = 0;
    std::uint64_t odd_check = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      ++partitions;
      odd_check += dim_class(lambda).is_odd();
    }
    const auto t2 = clock::now();
    if (odd != odd_check) {
      err << "bench: odd stream and full classification disagree at n = " << n << '\n';
      return kExitMismatch;
    }
    rows.push_back({n, odd, std::chrono::duration<double, std::milli>(t1 - t0).count(), partitions,
                    std::chrono::duration<double, std::milli>(t2 - t1).count()});
  }
  auto rate = [](std::uint64_t items, double ms) { return ms > 0 ? items / (ms / 1000.0) : 0.0; };
  switch (format_or(config, Format::csv)) {
    case Format::csv:
      out << "n,odd,odd_ms,odd_per_s,partitions,oracle_ms,oracle_per_s\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.odd << ',' << r.odd_ms << ',' << rate(r.odd, r.odd_ms) << ','
            << r.partitions << ',' << r.all_ms << ',' << rate(r.partitions, r.all_ms) << '\n';
      }
      break;
    case Format::json: {
      json list = json::array();
      for (const auto& r : rows) {
        list.push_back({{"n", r.n},
                        {"odd", r.odd},
                        {"odd_ms", r.odd_ms},
                        {"odd_per_s", rate(r.odd, r.odd_ms)},
                        {"partitions", r.partitions},
                        {"oracle_ms", r.all_ms},
                        {"oracle_per_s", rate(r.partitions, r.all_ms)}});
      }
      out << list.dump() << '\n';
      break;
    }
    case Format::text:
      for (const auto& r : rows) {
        out << "n = " << r.n << ": " << r.odd << " odd in " << r.odd_ms << " ms, " << r.partitions
            << " classified in " << r.all_ms << " ms\n";
      }
      break;
  }
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::counts:
        return run_counts(config, out);
      case Command::alt:
        return run_alt(config, out);
      case Command::tower:
        return run_tower(config, out);
      case Command::parents:
        return run_parents(config, out);
      case Command::verify:
        return run_verify(config, out, err);
      case Command::bench:
        return run_bench(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residues of standard Young tableau counts modulo 4", "dimlab"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format;
  app.add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--oracle-bound", config.oracle_bound, "largest n counted exhaustively")
      ->envname("DIMLAB_ORACLE_BOUND")
      ->check(CLI::Range(std::int64_t{1}, kMaxEnumerable));
  app.add_option("--threads", config.threads, "worker threads for verify (0 = all cores)");

  auto* counts = app.add_subcommand("counts", "a, a1, a2, a3, delta, m4 for one n");
  counts->add_option("n", config.n)->required()->check(CLI::PositiveNumber);
  counts->add_flag("--header", config.header, "print the CSV header line");

  auto* verify = app.add_subcommand("verify", "compare every formula with exhaustive counts");
  verify->add_option("--max-n", config.max_n)->required()->check(CLI::PositiveNumber);

  auto* tower_cmd = app.add_subcommand("tower", "2-core tower and row weights of a partition");
  tower_cmd->add_option("partition", config.partition, "e.g. 6,5,4,2,1,1")->required();

  auto* parents_cmd = app.add_subcommand("parents", "all 2^R-parents of a core");
  parents_cmd->add_option("partition", config.partition, "the core, e.g. 2,1")->required();
  parents_cmd->add_option("--r", config.r_power, "hook length exponent R")
      ->required()
      ->check(CLI::Range(1, 62));

  auto* alt = app.add_subcommand("alt", "odd-degree counts for the alternating group");
  alt->add_option("n", config.n)->required()->check(CLI::PositiveNumber);
  alt->add_flag("--header", config.header, "print the CSV header line");

  auto* bench = app.add_subcommand("bench", "time odd-partition generation against the oracle");
  bench->add_option("--max-n", config.max_n)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!format.empty()) {
    config.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;
  }
  if (*counts) config.command = Command::counts;
  if (*verify) config.command = Command::verify;
  if (*tower_cmd) config.command = Command::tower;
  if (*parents_cmd) config.command = Command::parents;
  if (*alt) config.command = Command::alt;
  if (*bench) config.command = Command::bench;
  return run(config, out, err);
}

}  // namespace dimlab::cli
