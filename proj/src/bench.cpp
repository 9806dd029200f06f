#include "cdd/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include "cdd/exact.hpp"
#include "cdd/parallel.hpp"

namespace cdd {

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;

  std::optional<std::string_view> next(std::size_t* token_line) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
    if (pos >= text.size()) {
      if (token_line) *token_line = line;
      return std::nullopt;
    }
    if (token_line) *token_line = line;
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }
};

Int expect_int(Tokenizer& tok, const char* field) {
  std::size_t line = 0;
  const auto piece = tok.next(&line);
  if (!piece) throw ParseError(std::string("unexpected end of input: expected ") + field, line);
  Int value = 0;
  if (piece->empty()) throw ParseError(std::string("empty token for ") + field, line);
  for (char ch : *piece) {
    if (ch < '0' || ch > '9') {
      throw ParseError(std::string("expected nonnegative integer for ") + field + ", got '" +
                           std::string(*piece) + "'",
                       line);
    }
    if (value > (INT64_MAX - 9) / 10) throw ParseError(std::string(field) + " overflows", line);
    value = value * 10 + (ch - '0');
  }
  return value;
}

const char* role_name(int role) {
  switch (role) {
    case 0:
      return "processing time";
    case 1:
      return "early weight";
    default:
      return "late weight";
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::vector<RawInstance> parse_instances(std::string_view text, const ParseOptions& opts) {
  std::array<bool, 3> seen{false, false, false};
  for (int role : opts.role_of_column) {
    if (role < 0 || role > 2 || seen[static_cast<std::size_t>(role)]) {
      throw InvalidParameter("role_of_column must be a permutation of {0,1,2}");
    }
    seen[static_cast<std::size_t>(role)] = true;
  }

  Tokenizer tok{text};
  const Int count = expect_int(tok, "instance count");
  std::vector<RawInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int inst = 0; inst < count; ++inst) {
    const Int n = expect_int(tok, "job count");
    if (n < 1) throw ParseError("job count must be positive", tok.line);
    RawInstance raw;
    raw.processing.reserve(static_cast<std::size_t>(n));
    raw.early_weight.reserve(static_cast<std::size_t>(n));
    raw.late_weight.reserve(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) {
      Int value_of_role[3] = {0, 0, 0};
      for (int c = 0; c < 3; ++c) {
        const int role = opts.role_of_column[static_cast<std::size_t>(c)];
        value_of_role[role] = expect_int(tok, role_name(role));
      }
      // Benchmark data is strictly positive; zero weights are flagged here
      // instead of silently accepted.
      if (value_of_role[0] < 1) throw ParseError("processing time must be >= 1", tok.line);
      if (value_of_role[1] < 1 || value_of_role[2] < 1) {
        throw ParseError("penalty weights must be >= 1", tok.line);
      }
      raw.processing.push_back(value_of_role[0]);
      raw.early_weight.push_back(value_of_role[1]);
      raw.late_weight.push_back(value_of_role[2]);
    }
    out.push_back(std::move(raw));
  }
  std::size_t line = 0;
  if (tok.next(&line)) throw ParseError("trailing tokens after last instance", line);
  return out;
}

std::string serialize_instances(std::span<const RawInstance> instances) {
  std::ostringstream out;
  out << instances.size() << "\n";
  for (const RawInstance& raw : instances) {
    out << raw.n() << "\n";
    for (int i = 0; i < raw.n(); ++i) {
      out << raw.processing[static_cast<std::size_t>(i)] << " "
          << raw.early_weight[static_cast<std::size_t>(i)] << " "
          << raw.late_weight[static_cast<std::size_t>(i)] << "\n";
    }
  }
  return out.str();
}

RawInstance generate_instance(int n, Rng& rng, const InstanceRanges& ranges) {
  if (n < 1) throw InvalidParameter("instance needs at least one job");
  const auto check = [](Int lo, Int hi, const char* what) {
    if (lo < 1 || hi < lo) {
      throw InvalidParameter(std::string("empty or invalid range for ") + what);
    }
  };
  check(ranges.p_min, ranges.p_max, "processing times");
  check(ranges.a_min, ranges.a_max, "early weights");
  check(ranges.b_min, ranges.b_max, "late weights");

  RawInstance raw;
  raw.processing.reserve(static_cast<std::size_t>(n));
  raw.early_weight.reserve(static_cast<std::size_t>(n));
  raw.late_weight.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    raw.processing.push_back(rng.range(ranges.p_min, ranges.p_max));
    raw.early_weight.push_back(rng.range(ranges.a_min, ranges.a_max));
    raw.late_weight.push_back(rng.range(ranges.b_min, ranges.b_max));
  }
  return raw;
}

Instance make_instance(const RawInstance& raw, Ratio h, int machines) {
  return Instance::from_h(raw.processing, raw.early_weight, raw.late_weight, h, machines);
}

std::optional<Int> reference_value(int n, int k, int h_tenths, int machines, RefSource source) {
  for (const ReferenceRecord& rec : reference_table()) {
    if (rec.n == n && rec.k == k && rec.h_tenths == h_tenths && rec.machines == machines &&
        rec.source == source) {
      return rec.value;
    }
  }
  return std::nullopt;
}

const char* bench_mode_name(BenchMode mode) {
  return mode == BenchMode::exact_given_sequence ? "exact-given-sequence" : "sa-search";
}

BenchmarkReport run_benchmark(const std::map<int, std::vector<RawInstance>>& instances_by_n,
                              std::span<const BenchCell> cells, BenchMode mode,
                              const SAConfig& sa) {
  BenchmarkReport report;
  report.rows.reserve(cells.size());
  for (const BenchCell& cell : cells) {
    const auto group = instances_by_n.find(cell.n);
    if (group == instances_by_n.end()) {
      throw InvalidParameter("no instances loaded for n=" + std::to_string(cell.n));
    }
    if (cell.k < 1 || cell.k > static_cast<int>(group->second.size())) {
      throw InvalidParameter("instance k=" + std::to_string(cell.k) + " not present for n=" +
                             std::to_string(cell.n));
    }
    const Instance instance = make_instance(group->second[static_cast<std::size_t>(cell.k - 1)],
                                            Ratio::of(cell.h_tenths, 10), cell.machines);

    BenchRow row;
    row.cell = cell;
    row.mode = mode;
    const auto t0 = std::chrono::steady_clock::now();
    if (mode == BenchMode::exact_given_sequence) {
      const JobSequence identity = JobSequence::identity(instance.n);
      row.value = instance.m == 1 ? optimize_sequence_logarithmic(identity, instance).penalty
                                  : optimize_parallel(identity, instance).penalty;
    } else {
      row.value = anneal(instance, sa).best_penalty;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (cell.machines == 1) {
      row.ref_apsa = reference_value(cell.n, cell.k, cell.h_tenths, 1, RefSource::apsa);
      row.ref_br = reference_value(cell.n, cell.k, cell.h_tenths, 1, RefSource::br);
    } else {
      row.ref_apsa =
          reference_value(cell.n, cell.k, cell.h_tenths, cell.machines, RefSource::parallel_ub);
    }
    const auto gap = [&](std::optional<Int> ref) -> std::optional<double> {
      if (!ref) return std::nullopt;
      return 100.0 * static_cast<double>(row.value - *ref) / static_cast<double>(*ref);
    };
    row.gap_apsa_pct = gap(row.ref_apsa);
    row.gap_br_pct = gap(row.ref_br);
    row.no_ref = !row.ref_apsa && !row.ref_br;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "n,k,h,m,mode,value,ref_apsa,ref_br,gap_apsa_pct,gap_br_pct,seconds\n";
  for (const BenchRow& row : report.rows) {
    out << row.cell.n << "," << row.cell.k << "," << Ratio::of(row.cell.h_tenths, 10).to_string()
        << "," << row.cell.machines << "," << bench_mode_name(row.mode) << "," << row.value << ",";
    if (row.ref_apsa) out << *row.ref_apsa;
    out << ",";
    if (row.ref_br) out << *row.ref_br;
    out << ",";
    if (row.gap_apsa_pct) out << format_double(*row.gap_apsa_pct);
    out << ",";
    if (row.gap_br_pct) out << format_double(*row.gap_br_pct);
    out << "," << format_double(row.seconds) << "\n";
  }
  return out.str();
}

std::string report_table(const BenchmarkReport& report, bool include_seconds) {
  std::vector<std::string> headers = {"n",      "k",        "h",          "m",         "mode",
                                      "value",  "ref_apsa", "ref_br",     "gap_apsa%", "gap_br%",
                                      "status"};
  if (include_seconds) headers.push_back("seconds");
  std::vector<std::vector<std::string>> lines;
  for (const BenchRow& row : report.rows) {
    std::vector<std::string> line = {
        std::to_string(row.cell.n),
        std::to_string(row.cell.k),
        Ratio::of(row.cell.h_tenths, 10).to_string(),
        std::to_string(row.cell.machines),
        bench_mode_name(row.mode),
        std::to_string(row.value),
        row.ref_apsa ? std::to_string(*row.ref_apsa) : "-",
        row.ref_br ? std::to_string(*row.ref_br) : "-",
        row.gap_apsa_pct ? format_double(*row.gap_apsa_pct) : "-",
        row.gap_br_pct ? format_double(*row.gap_br_pct) : "-",
        row.no_ref ? "no-ref" : "ok",
    };
    if (include_seconds) line.push_back(format_double(row.seconds));
    lines.push_back(std::move(line));
  }
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& line : lines) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& line : lines) emit(line);
  return out.str();
}

}  // namespace cdd
