#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cdd/anneal.hpp"
#include "cdd/rng.hpp"
#include "cdd/types.hpp"

namespace cdd {

// One instance as stored on disk: per-job processing time and penalty weights.
// The due date is never stored; it is derived from (h, m) at run time.
struct RawInstance {
  std::vector<Int> processing;
  std::vector<Int> early_weight;
  std::vector<Int> late_weight;

  int n() const { return static_cast<int>(processing.size()); }
};

// Import adapter. The canonical layout is: instance count; per instance the
// job count n followed by n rows of "P alpha beta". Files with a different
// column order can be read by giving the role of each column:
// role_of_column[c] = 0 (processing), 1 (early weight), 2 (late weight).
struct ParseOptions {
  std::array<int, 3> role_of_column{0, 1, 2};
};

std::vector<RawInstance> parse_instances(std::string_view text, const ParseOptions& opts = {});
std::string serialize_instances(std::span<const RawInstance> instances);

// Uniform sampling ranges for random instances; the defaults mirror the
// benchmark family's magnitudes.
struct InstanceRanges {
  Int p_min = 1, p_max = 20;
  Int a_min = 1, a_max = 15;
  Int b_min = 1, b_max = 15;
};

RawInstance generate_instance(int n, Rng& rng, const InstanceRanges& ranges = {});

Instance make_instance(const RawInstance& raw, Ratio h, int machines);

// --- Embedded reference tables -------------------------------------------

enum class RefSource { apsa, br, parallel_ub };

// One transcribed reference value. h is stored in tenths (2,4,6,8).
struct ReferenceRecord {
  int n;
  int k;  // instance id 1..10
  int h_tenths;
  int machines;
  RefSource source;
  Int value;
};

// Full embedded table: 200 single-machine cells (APSA and BR each) plus 30
// parallel upper-bound cells. A checksum over the transcription is verified on
// first access.
std::span<const ReferenceRecord> reference_table();

std::optional<Int> reference_value(int n, int k, int h_tenths, int machines, RefSource source);

// --- Benchmark harness -----------------------------------------------------

enum class BenchMode { exact_given_sequence, sa_search };

struct BenchCell {
  int n;
  int k;
  int h_tenths;
  int machines;
};

struct BenchRow {
  BenchCell cell;
  BenchMode mode;
  Int value = 0;
  std::optional<Int> ref_apsa;  // for m > 1 this column carries the paper's upper bound
  std::optional<Int> ref_br;
  std::optional<double> gap_apsa_pct;  // 100 * (value - ref) / ref
  std::optional<double> gap_br_pct;
  double seconds = 0.0;
  bool no_ref = false;
};

struct BenchmarkReport {
  std::vector<BenchRow> rows;
};

// Solves each requested cell (exact on the identity sequence, or SA search)
// and attaches reference values and signed gaps. Cells without a reference are
// flagged no_ref, not errors.
BenchmarkReport run_benchmark(const std::map<int, std::vector<RawInstance>>& instances_by_n,
                              std::span<const BenchCell> cells, BenchMode mode,
                              const SAConfig& sa);

// CSV with the fixed header n,k,h,m,mode,value,ref_apsa,ref_br,gap_apsa_pct,gap_br_pct,seconds.
std::string report_csv(const BenchmarkReport& report);

// Aligned plain-text table. Seconds are off by default so stdout stays
// byte-identical across reruns with the same seed.
std::string report_table(const BenchmarkReport& report, bool include_seconds = false);

const char* bench_mode_name(BenchMode mode);

}  // namespace cdd
