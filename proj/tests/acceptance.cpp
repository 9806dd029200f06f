// Acceptance suite: runs every fixed criterion and prints one PASS/FAIL line
// per criterion. Exit code is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cdd/anneal.hpp"
#include "cdd/bench.hpp"
#include "cdd/exact.hpp"
#include "cdd/oracle.hpp"
#include "cdd/parallel.hpp"

using namespace cdd;
namespace fs = std::filesystem;

namespace {

struct Context {
  std::string cli_path;
  fs::path data_dir;
};

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::vector<RawInstance>> load_biskup(const Context& ctx, int n) {
  const fs::path path = ctx.data_dir / "biskup" / ("sch" + std::to_string(n) + ".txt");
  const auto text = read_file(path);
  if (!text) return std::nullopt;
  return parse_instances(*text);
}

Instance random_single(Rng& rng, int n_lo, int n_hi) {
  const int n = static_cast<int>(rng.range(n_lo, n_hi));
  const int h_tenths = 2 * static_cast<int>(rng.range(1, 4));
  return make_instance(generate_instance(n, rng), Ratio::of(h_tenths, 10), 1);
}

JobSequence random_sequence(int n, Rng& rng) {
  std::vector<int> order = JobSequence::identity(n).order;
  rng.shuffle(std::span<int>(order));
  return JobSequence{std::move(order)};
}

// --- criterion 1 + 2 -------------------------------------------------------

bool oracle_equivalence(const Context&, std::string& detail) {
  Rng rng(0xC0FFEE);
  for (int round = 0; round < 1000; ++round) {
    const Instance inst = random_single(rng, 2, 50);
    const JobSequence seq = random_sequence(inst.n, rng);
    const Int certified = oracle_best_shift(seq, inst);
    const Int quad = optimize_sequence_quadratic(seq, inst).schedule.penalty;
    const Int log = optimize_sequence_logarithmic(seq, inst).penalty;
    if (quad != certified || log != certified) {
      detail = "mismatch at round " + std::to_string(round) + ": oracle " +
               std::to_string(certified) + ", quadratic " + std::to_string(quad) +
               ", logarithmic " + std::to_string(log);
      return false;
    }
  }
  detail = "1000/1000 instances agree exactly";
  return true;
}

bool structural_optimality(const Context&, std::string& detail) {
  Rng rng(0xC0FFEE);  // same instance stream as criterion 1
  for (int round = 0; round < 1000; ++round) {
    const Instance inst = random_single(rng, 2, 50);
    const JobSequence seq = random_sequence(inst.n, rng);
    for (const ScheduleState& state : {optimize_sequence_quadratic(seq, inst).schedule,
                                       optimize_sequence_logarithmic(seq, inst)}) {
      const bool starts_at_zero = state.slack == 0;
      const bool touches_due = std::any_of(state.deviation.begin(), state.deviation.end(),
                                           [](Int d) { return d == 0; });
      if (!starts_at_zero && !touches_due) {
        detail = "round " + std::to_string(round) + ": no job starts at 0 or ends at D";
        return false;
      }
      for (std::size_t i = 1; i < state.completion.size(); ++i) {
        if (state.completion[i] - state.completion[i - 1] !=
            inst.processing[static_cast<std::size_t>(state.jobs[i] - 1)]) {
          detail = "round " + std::to_string(round) + ": idle time between jobs";
          return false;
        }
      }
    }
  }
  detail = "1000/1000 schedules start at 0 or touch D; all idle-free";
  return true;
}

// --- criterion 3 ------------------------------------------------------------

bool ten_job_optima(const Context& ctx, std::string& detail) {
  const auto instances = load_biskup(ctx, 10);
  if (!instances || instances->size() != 10) {
    detail = "benchmark data missing: data/biskup/sch10.txt";
    return false;
  }
  const std::array<int, 4> h_grid = {2, 4, 6, 8};
  int enumerated_ok = 0;
  int searched_ok = 0;
  for (int k = 1; k <= 10; ++k) {
    for (int h : h_grid) {
      const auto expected = reference_value(10, k, h, 1, RefSource::br);
      if (!expected) {
        detail = "missing reference for n=10 k=" + std::to_string(k);
        return false;
      }
      const Instance inst =
          make_instance((*instances)[static_cast<std::size_t>(k - 1)], Ratio::of(h, 10), 1);
      const Int certified = oracle_global_single(inst).penalty;
      if (certified != *expected) {
        detail = "enumeration got " + std::to_string(certified) + ", table says " +
                 std::to_string(*expected) + " at k=" + std::to_string(k) + " h=0." +
                 std::to_string(h);
        return false;
      }
      ++enumerated_ok;

      bool hit = false;
      for (std::uint64_t seed = 1; seed <= 5 && !hit; ++seed) {
        SAConfig sa;
        sa.seed = seed;
        hit = anneal(inst, sa).best_penalty == *expected;
      }
      if (!hit) {
        detail = "SA missed the optimum at k=" + std::to_string(k) + " h=0." + std::to_string(h);
        return false;
      }
      ++searched_ok;
    }
  }
  detail = "enumeration " + std::to_string(enumerated_ok) + "/40 exact, SA " +
           std::to_string(searched_ok) + "/40 exact";
  return true;
}

// --- criterion 4 ------------------------------------------------------------

bool twenty_job_competitiveness(const Context& ctx, std::string& detail) {
  const auto instances = load_biskup(ctx, 20);
  if (!instances || instances->size() != 10) {
    detail = "benchmark data missing: data/biskup/sch20.txt";
    return false;
  }
  const std::array<int, 4> h_grid = {2, 4, 6, 8};
  std::ostringstream summary;
  double worst_gap = -100.0;
  for (int h : h_grid) {
    int beat_br = 0;
    for (int k = 1; k <= 10; ++k) {
      const auto apsa = reference_value(20, k, h, 1, RefSource::apsa);
      const auto br = reference_value(20, k, h, 1, RefSource::br);
      if (!apsa || !br) {
        detail = "missing reference for n=20";
        return false;
      }
      const Instance inst =
          make_instance((*instances)[static_cast<std::size_t>(k - 1)], Ratio::of(h, 10), 1);
      Int best = std::numeric_limits<Int>::max();
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SAConfig sa;
        sa.seed = seed;
        best = std::min(best, anneal(inst, sa).best_penalty);
        if (best <= *br) break;  // already good enough for the BR count
      }
      if (best <= *br) ++beat_br;
      const double gap =
          100.0 * static_cast<double>(best - *apsa) / static_cast<double>(*apsa);
      worst_gap = std::max(worst_gap, gap);
      if (gap > 2.0) {
        detail = "gap to APSA " + std::to_string(gap) + "% at k=" + std::to_string(k) + " h=0." +
                 std::to_string(h);
        return false;
      }
    }
    if (beat_br < 8) {
      detail = "only " + std::to_string(beat_br) + "/10 at or below BR for h=0." +
               std::to_string(h);
      return false;
    }
    summary << " h=0." << h << ":" << beat_br << "/10<=BR";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), " worst APSA gap %.3f%%", worst_gap);
  detail = summary.str() + buf;
  return true;
}

// --- criterion 5 ------------------------------------------------------------

Int best_over_all_sequences_parallel(const Instance& inst) {
  const int n = inst.n;
  const auto run_block = [&inst, n](int first) {
    detail::EvalScratch scratch;
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    perm.push_back(first);
    for (int id = 1; id <= n; ++id) {
      if (id != first) perm.push_back(id);
    }
    Int best = std::numeric_limits<Int>::max();
    do {
      best = std::min(best, detail::optimal_penalty(inst, perm, scratch));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
  };
  std::vector<std::future<Int>> futures;
  for (int first = 1; first <= n; ++first) {
    futures.push_back(std::async(std::launch::async, run_block, first));
  }
  Int best = std::numeric_limits<Int>::max();
  for (auto& f : futures) best = std::min(best, f.get());
  return best;
}

bool parallel_upper_bounds(const Context& ctx, std::string& detail) {
  const auto instances = load_biskup(ctx, 10);
  if (!instances || instances->empty()) {
    detail = "benchmark data missing: data/biskup/sch10.txt";
    return false;
  }
  std::ostringstream summary;
  for (int m : {2, 3, 4}) {
    for (int h : {4, 8}) {
      const auto bound = reference_value(10, 1, h, m, RefSource::parallel_ub);
      if (!bound) {
        detail = "missing parallel reference";
        return false;
      }
      const Instance inst = make_instance((*instances)[0], Ratio::of(h, 10), m);
      const Int best = best_over_all_sequences_parallel(inst);
      if (best > *bound) {
        detail = "m=" + std::to_string(m) + " h=0." + std::to_string(h) + ": got " +
                 std::to_string(best) + " above the published bound " + std::to_string(*bound);
        return false;
      }
      summary << " m" << m << "h0." << h << ":" << best << "<=" << *bound;
    }
  }
  detail = summary.str();
  return true;
}

// --- criterion 6 ------------------------------------------------------------

bool small_instance_agreement(const Context&, std::string& detail) {
  Rng rng(0xBEEF);
  const int rounds = 200;
  int agree = 0;
  for (int round = 0; round < rounds; ++round) {
    const int n = static_cast<int>(rng.range(2, 8));
    const int m = static_cast<int>(rng.range(1, std::min(3, n)));
    const int h_tenths = 2 * static_cast<int>(rng.range(1, 4));
    const Instance inst = make_instance(generate_instance(n, rng), Ratio::of(h_tenths, 10), m);
    const Int certified = oracle_global_parallel(inst);
    Int best = std::numeric_limits<Int>::max();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      SAConfig sa;
      sa.seed = seed;
      sa.sample_count = 100;
      best = std::min(best, anneal(inst, sa).best_penalty);
      if (best == certified) break;
    }
    if (best < certified) {
      detail = "search beat the exhaustive oracle at round " + std::to_string(round) +
               " (oracle bug)";
      return false;
    }
    if (best == certified) ++agree;
  }
  detail = std::to_string(agree) + "/" + std::to_string(rounds) + " optimal, none below oracle";
  return agree * 100 >= rounds * 95;
}

// --- criterion 7 ------------------------------------------------------------

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

// --- criterion 7 timing helper ----------------------------------------------

// Per-call time of `call`, measured in batches that run long enough to drown
// clock noise; median over several batches.
template <typename F>
double timed_per_call(F&& call) {
  call();  // warmup
  std::vector<double> samples;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    int calls = 0;
    double elapsed = 0.0;
    do {
      call();
      ++calls;
      elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } while (elapsed < 0.02 && calls < 512);
    samples.push_back(elapsed / calls);
  }
  return median(std::move(samples));
}

bool complexity_trend(const Context&, std::string& detail) {
  Rng rng(0xFACADE);
  const std::array<int, 3> sizes = {1000, 4000, 16000};
  std::array<double, 3> quad_time{};
  std::array<double, 3> log_time{};
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const int n = sizes[s];
    const Instance inst = make_instance(generate_instance(n, rng), Ratio::of(4, 5), 1);
    std::vector<JobSequence> sequences;
    for (int i = 0; i < 8; ++i) sequences.push_back(random_sequence(n, rng));
    for (const JobSequence& seq : sequences) {
      if (optimize_sequence_quadratic(seq, inst).schedule.penalty !=
          optimize_sequence_logarithmic(seq, inst).penalty) {
        detail = "variants disagree at n=" + std::to_string(n);
        return false;
      }
    }
    std::size_t next_quad = 0, next_log = 0;
    quad_time[s] = timed_per_call([&] {
      optimize_sequence_quadratic(sequences[next_quad++ % sequences.size()], inst);
    });
    log_time[s] = timed_per_call([&] {
      optimize_sequence_logarithmic(sequences[next_log++ % sequences.size()], inst);
    });
  }
  char buf[256];
  const double log_r1 = log_time[1] / log_time[0];
  const double log_r2 = log_time[2] / log_time[1];
  const double quad_r1 = quad_time[1] / quad_time[0];
  const double quad_r2 = quad_time[2] / quad_time[1];
  std::snprintf(buf, sizeof(buf),
                "log-variant ratios %.2f, %.2f (need < 8); quadratic ratios %.2f, %.2f",
                log_r1, log_r2, quad_r1, quad_r2);
  detail = buf;
  return log_r1 < 8.0 && log_r2 < 8.0 && quad_r1 > log_r1 && quad_r2 > log_r2;
}

// --- criterion 8 ------------------------------------------------------------

std::optional<std::string> capture(const std::string& command) {
  const std::string full = command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> chunk{};
  std::size_t got = 0;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) out.append(chunk.data(), got);
  if (pclose(pipe) != 0) return std::nullopt;
  return out;
}

bool cli_determinism(const Context& ctx, std::string& detail) {
  if (ctx.cli_path.empty() || !fs::exists(ctx.cli_path)) {
    detail = "CLI binary not found (pass --cli)";
    return false;
  }
  const fs::path work = fs::temp_directory_path() / "cdd_acceptance";
  fs::create_directories(work / "set");
  {
    std::ofstream toy(work / "toy.txt", std::ios::binary);
    toy << "1\n8\n";
    toy << "4 3 2\n9 1 6\n3 5 1\n7 2 4\n5 4 3\n2 6 2\n8 1 5\n6 2 2\n";
    std::ofstream sch(work / "set" / "sch3.txt", std::ios::binary);
    sch << "1\n3\n4 1 2\n2 3 1\n5 2 2\n";
  }
  const std::string cli = "'" + ctx.cli_path + "'";
  const std::string toy = "'" + (work / "toy.txt").string() + "'";
  const std::string set = "'" + (work / "set").string() + "'";
  const std::vector<std::string> commands = {
      cli + " evaluate " + toy + " --h 0.6 --sequence identity",
      cli + " evaluate " + toy + " --h 0.4 --machines 2 --format json",
      cli + " search " + toy + " --h 0.4 --seed 7 --budget 400 --samples 50",
      cli + " search " + toy + " --h 0.6 --machines 2 --seed 9 --budget 300 --samples 50 "
            "--format json",
      cli + " oracle " + toy + " --h 0.4 --machines 2 --job-cap 8 --verify --seed 3 "
            "--budget 200 --samples 50",
      cli + " bench --dir " + set + " --jobs 3 --k 1 --h 0.4,0.8 --machines 1 --mode sa "
            "--seed 5 --budget 100 --samples 20",
  };
  for (const std::string& command : commands) {
    const auto first = capture(command);
    const auto second = capture(command);
    if (!first || !second) {
      detail = "command failed: " + command;
      return false;
    }
    if (*first != *second) {
      detail = "output differs between runs: " + command;
      return false;
    }
    if (first->empty()) {
      detail = "empty output: " + command;
      return false;
    }
  }
  detail = std::to_string(commands.size()) + " commands byte-identical across reruns";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  ctx.data_dir = "data";
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) ctx.cli_path = argv[++i];
    if (arg == "--data" && i + 1 < argc) ctx.data_dir = argv[++i];
    if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<bool(const Context&, std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence of both optimizer variants", oracle_equivalence},
      {2, "structural optimality and no idle time", structural_optimality},
      {3, "10-job benchmark optima, enumeration and search", ten_job_optima},
      {4, "20-job benchmark competitiveness", twenty_job_competitiveness},
      {5, "parallel-machine upper bounds", parallel_upper_bounds},
      {6, "small-instance agreement with the global oracle", small_instance_agreement},
      {7, "sub-quadratic scaling of the fast variant", complexity_trend},
      {8, "CLI determinism", cli_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(ctx, detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d. %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id, criterion.name,
                secs, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
