// Command-line front end: exact per-sequence evaluation, annealing search,
// exhaustive oracles for tiny instances and the benchmark harness.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdd/anneal.hpp"
#include "cdd/bench.hpp"
#include "cdd/exact.hpp"
#include "cdd/oracle.hpp"
#include "cdd/parallel.hpp"

namespace {

constexpr int kExitUsage = 2;      // bad flags / bad permutation
constexpr int kExitParse = 3;      // unreadable or malformed instance file
constexpr int kExitMissing = 4;    // missing files or cells
constexpr int kExitOverCap = 5;    // oracle size cap exceeded

struct CommonOptions {
  std::string file;
  int instance_index = 1;  // 1-based position in the file
  std::string h_text = "0.2";
  int machines = 1;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->set_help_flag("--help", "print help");  // frees --h for the restrictive factor
  cmd->add_option("file", opts.file, "instance file (canonical whitespace layout)")->required();
  cmd->add_option("--instance,-k", opts.instance_index, "1-based instance index in the file")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--h", opts.h_text, "restrictive factor as a decimal, e.g. 0.4");
  cmd->add_option("--machines,-m", opts.machines, "machine count")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cdd::ParseError("cannot open file: " + path, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

cdd::Instance load_instance(const CommonOptions& opts) {
  const auto raws = cdd::parse_instances(read_file(opts.file));
  if (opts.instance_index < 1 || opts.instance_index > static_cast<int>(raws.size())) {
    throw cdd::ParseError("file holds " + std::to_string(raws.size()) +
                              " instances, requested index " + std::to_string(opts.instance_index),
                          0);
  }
  return cdd::make_instance(raws[static_cast<std::size_t>(opts.instance_index - 1)],
                            cdd::Ratio::parse_decimal(opts.h_text), opts.machines);
}

cdd::JobSequence parse_sequence(const std::string& text, int n) {
  if (text == "identity") return cdd::JobSequence::identity(n);
  std::vector<int> order;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    for (char& ch : token) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream inner(token);
    int value = 0;
    while (inner >> value) order.push_back(value);
  }
  cdd::JobSequence seq{std::move(order)};
  seq.validate(n);
  return seq;
}

nlohmann::json machine_json(const cdd::ScheduleState& state) {
  nlohmann::json entry;
  entry["jobs"] = state.jobs;
  entry["completion"] = state.completion;
  std::vector<cdd::Int> earliness, tardiness;
  for (std::size_t i = 0; i < state.jobs.size(); ++i) {
    earliness.push_back(state.earliness(i));
    tardiness.push_back(state.tardiness(i));
  }
  entry["earliness"] = earliness;
  entry["tardiness"] = tardiness;
  entry["penalty"] = state.penalty;
  return entry;
}

void print_schedule_text(std::ostream& out, const cdd::Instance& inst,
                         const std::vector<cdd::ScheduleState>& machines, cdd::Int penalty) {
  out << "n=" << inst.n << " m=" << inst.m << " h=" << inst.h.to_string()
      << " D=" << inst.due_date << "\n";
  for (std::size_t j = 0; j < machines.size(); ++j) {
    const cdd::ScheduleState& state = machines[j];
    out << "machine " << j + 1 << " penalty " << state.penalty << "\n";
    for (std::size_t i = 0; i < state.jobs.size(); ++i) {
      out << "  job " << state.jobs[i] << " C=" << state.completion[i]
          << " E=" << state.earliness(i) << " T=" << state.tardiness(i) << "\n";
    }
  }
  out << "total penalty " << penalty << "\n";
}

void print_schedule(const CommonOptions& opts, const cdd::Instance& inst,
                    const std::vector<cdd::ScheduleState>& machines, cdd::Int penalty) {
  if (opts.format == "json") {
    nlohmann::json doc;
    doc["n"] = inst.n;
    doc["m"] = inst.m;
    doc["h"] = inst.h.to_string();
    doc["due_date"] = inst.due_date;
    doc["penalty"] = penalty;
    doc["machines"] = nlohmann::json::array();
    for (const auto& state : machines) doc["machines"].push_back(machine_json(state));
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "machine,position,job,completion,earliness,tardiness\n";
    for (std::size_t j = 0; j < machines.size(); ++j) {
      const cdd::ScheduleState& state = machines[j];
      for (std::size_t i = 0; i < state.jobs.size(); ++i) {
        std::cout << j + 1 << "," << i + 1 << "," << state.jobs[i] << "," << state.completion[i]
                  << "," << state.earliness(i) << "," << state.tardiness(i) << "\n";
      }
    }
  } else {
    print_schedule_text(std::cout, inst, machines, penalty);
  }
}

void add_sa_flags(CLI::App* cmd, cdd::SAConfig& sa) {
  cmd->add_option("--seed", sa.seed, "RNG seed");
  cmd->add_option("--budget", sa.iteration_budget, "steps per chain (negative = 200*n)");
  cmd->add_option("--ensemble", sa.ensemble_size, "number of chains")->check(CLI::PositiveNumber);
  cmd->add_option("--cooling", sa.cooling_rate, "cooling rate in (0,1)");
  cmd->add_option("--accept-const", sa.constant_accept_p, "constant acceptance probability");
  cmd->add_option("--samples", sa.sample_count, "energy samples for the initial temperature");
  cmd->add_option("--perturb", sa.perturbation_size,
                  "positions perturbed per proposal (0 = 2+floor(sqrt(n/10)))");
  cmd->add_option("--sync", sa.sync_interval, "steps between elitism synchronizations");
  cmd->add_option("--threads", sa.threads, "worker threads (0 = hardware)");
}

int run_evaluate(const CommonOptions& opts, const std::string& sequence_text) {
  const cdd::Instance inst = load_instance(opts);
  cdd::JobSequence seq{{}};
  try {
    seq = parse_sequence(sequence_text, inst.n);
  } catch (const cdd::ContractViolation& e) {
    std::cerr << "invalid sequence: " << e.what() << "\n";
    return kExitUsage;
  }
  const cdd::ParallelOptimum got = cdd::optimize_parallel(seq, inst);
  print_schedule(opts, inst, got.machines, got.penalty);
  return 0;
}

int run_search(const CommonOptions& opts, const cdd::SAConfig& sa) {
  const cdd::Instance inst = load_instance(opts);
  const cdd::SearchResult result = cdd::anneal(inst, sa);
  std::cerr << "search took " << result.wall_time_seconds << "s\n";
  if (opts.format == "json") {
    nlohmann::json doc;
    doc["best_penalty"] = result.best_penalty;
    doc["best_sequence"] = result.best_sequence.order;
    doc["best_schedule"] = result.best_schedule;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (opts.format == "csv") {
    std::cout << "best_penalty\n" << result.best_penalty << "\n";
    return 0;
  }
  std::cout << "best penalty " << result.best_penalty << "\n";
  std::cout << "sequence";
  for (int id : result.best_sequence.order) std::cout << " " << id;
  std::cout << "\n";
  for (std::size_t j = 0; j < result.best_schedule.size(); ++j) {
    std::cout << "machine " << j + 1 << " completion";
    for (cdd::Int c : result.best_schedule[j]) std::cout << " " << c;
    std::cout << "\n";
  }
  return 0;
}

int run_oracle(const CommonOptions& opts, int job_cap, int machine_cap, bool verify,
               const cdd::SAConfig& sa) {
  const cdd::Instance inst = load_instance(opts);
  cdd::Int certified = 0;
  if (inst.m == 1) {
    const cdd::GlobalOptimum best = cdd::oracle_global_single(inst, job_cap);
    certified = best.penalty;
    std::cout << "oracle optimum " << certified << "\n";
    std::cout << "sequence";
    for (int id : best.sequence.order) std::cout << " " << id;
    std::cout << "\n";
  } else {
    certified = cdd::oracle_global_parallel(inst, job_cap, machine_cap);
    std::cout << "oracle optimum " << certified << "\n";
  }
  if (verify) {
    const cdd::SearchResult searched = cdd::anneal(inst, sa);
    std::cout << "search best " << searched.best_penalty << "\n";
    std::cout << "verdict "
              << (searched.best_penalty == certified ? "agree"
                                                     : searched.best_penalty > certified
                                                           ? "search-above-oracle"
                                                           : "search-below-oracle(BUG)")
              << "\n";
  }
  return 0;
}

struct BenchOptions {
  std::string dir;
  std::vector<int> jobs = {10};
  std::vector<int> ks = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<std::string> hs = {"0.2", "0.4", "0.6", "0.8"};
  std::vector<int> machines = {1};
  std::string mode = "sa";
  std::string out;
  std::string format = "text";
};

int run_bench(const BenchOptions& opts, const cdd::SAConfig& sa) {
  namespace fs = std::filesystem;
  std::map<int, std::vector<cdd::RawInstance>> by_n;
  std::vector<std::string> missing;
  for (int n : opts.jobs) {
    const fs::path path = fs::path(opts.dir) / ("sch" + std::to_string(n) + ".txt");
    if (!fs::exists(path)) {
      missing.push_back(path.string());
      continue;
    }
    by_n[n] = cdd::parse_instances(read_file(path.string()));
  }
  if (!missing.empty()) {
    for (const std::string& path : missing) std::cerr << "missing file: " << path << "\n";
    return kExitMissing;
  }

  std::vector<cdd::BenchCell> cells;
  for (int n : opts.jobs) {
    for (int k : opts.ks) {
      for (const std::string& h : opts.hs) {
        const cdd::Ratio ratio = cdd::Ratio::parse_decimal(h);
        if ((10 * ratio.num) % ratio.den != 0) {
          std::cerr << "bench h must be a multiple of 0.1, got " << h << "\n";
          return kExitUsage;
        }
        const int tenths = static_cast<int>(10 * ratio.num / ratio.den);
        for (int m : opts.machines) cells.push_back({n, k, tenths, m});
      }
    }
  }

  cdd::BenchmarkReport report;
  try {
    report = cdd::run_benchmark(by_n, cells,
                                opts.mode == "exact" ? cdd::BenchMode::exact_given_sequence
                                                     : cdd::BenchMode::sa_search,
                                sa);
  } catch (const cdd::InvalidParameter& e) {
    std::cerr << "bench cell error: " << e.what() << "\n";
    return kExitMissing;
  }

  if (!opts.out.empty()) {
    std::ofstream out(opts.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << opts.out << "\n";
      return kExitMissing;
    }
    out << cdd::report_csv(report);
  }
  if (opts.format == "csv") {
    std::cout << cdd::report_csv(report);  // timing column varies run to run
  } else if (opts.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
      nlohmann::json entry;
      entry["n"] = row.cell.n;
      entry["k"] = row.cell.k;
      entry["h"] = cdd::Ratio::of(row.cell.h_tenths, 10).to_string();
      entry["m"] = row.cell.machines;
      entry["mode"] = cdd::bench_mode_name(row.mode);
      entry["value"] = row.value;
      if (row.ref_apsa) entry["ref_apsa"] = *row.ref_apsa;
      if (row.ref_br) entry["ref_br"] = *row.ref_br;
      if (row.gap_apsa_pct) entry["gap_apsa_pct"] = *row.gap_apsa_pct;
      if (row.gap_br_pct) entry["gap_br_pct"] = *row.gap_br_pct;
      entry["no_ref"] = row.no_ref;
      rows.push_back(entry);
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << cdd::report_table(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common due-date scheduling: exact per-sequence optimization, annealing search,"
               " exhaustive oracles and benchmark reproduction"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  CommonOptions eval_opts;
  std::string sequence_text = "identity";
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "exact optimum of one processing sequence (machine assignment included)");
  add_common(evaluate, eval_opts);
  evaluate->add_option("--sequence", sequence_text,
                       "job order as space/comma separated ids, or 'identity'");

  CommonOptions search_opts;
  cdd::SAConfig search_sa;
  CLI::App* search = app.add_subcommand("search", "simulated-annealing search over sequences");
  add_common(search, search_opts);
  add_sa_flags(search, search_sa);

  CommonOptions oracle_opts;
  cdd::SAConfig oracle_sa;
  int job_cap = 10;
  int machine_cap = 3;
  bool verify = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "certified global optimum of a tiny instance by exhaustive enumeration");
  add_common(oracle, oracle_opts);
  oracle->add_option("--job-cap", job_cap, "refuse instances with more jobs than this");
  oracle->add_option("--machine-cap", machine_cap, "refuse parallel instances wider than this");
  oracle->add_flag("--verify", verify, "also run the search pipeline and report agreement");
  add_sa_flags(oracle, oracle_sa);

  BenchOptions bench_opts;
  cdd::SAConfig bench_sa;
  CLI::App* bench = app.add_subcommand("bench", "benchmark harness with reference gaps");
  bench->set_help_flag("--help", "print help");
  bench->add_option("--dir", bench_opts.dir, "directory holding sch<N>.txt files")->required();
  bench->add_option("--jobs", bench_opts.jobs, "job counts, e.g. 10,20")->delimiter(',');
  bench->add_option("--k", bench_opts.ks, "instance ids, e.g. 1,2,3")->delimiter(',');
  bench->add_option("--h", bench_opts.hs, "restrictive factors, e.g. 0.2,0.4")->delimiter(',');
  bench->add_option("--machines", bench_opts.machines, "machine counts, e.g. 1,2")
      ->delimiter(',');
  bench->add_option("--mode", bench_opts.mode, "exact or sa")
      ->check(CLI::IsMember({"exact", "sa"}));
  bench->add_option("--out", bench_opts.out, "CSV report path (includes timings)");
  bench->add_option("--format", bench_opts.format, "stdout format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  add_sa_flags(bench, bench_sa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (evaluate->parsed()) return run_evaluate(eval_opts, sequence_text);
    if (search->parsed()) return run_search(search_opts, search_sa);
    if (oracle->parsed()) return run_oracle(oracle_opts, job_cap, machine_cap, verify, oracle_sa);
    if (bench->parsed()) return run_bench(bench_opts, bench_sa);
  } catch (const cdd::SizeCapError& e) {
    std::cerr << "oracle cap: " << e.what() << "\n";
    return kExitOverCap;
  } catch (const cdd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cdd::ContractViolation& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cdd::InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
