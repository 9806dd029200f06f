#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdd {

// All times, weights and penalties are nonnegative integers; totals are
// accumulated in 64-bit integers so equality checks are exact.
using Int = std::int64_t;

// An operation was fed input that breaks its stated contract
// (length mismatch, invalid permutation, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A parameter is outside its domain (h outside (0,1], m > n, empty range, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance-file parsing failed; carries the 1-based line of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive oracle was asked to enumerate beyond its size cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact rational. The restrictive factor h is kept as a rational so that
// floor(h * sum(P) / m) is bit-exact instead of depending on float rounding.
struct Ratio {
  Int num = 1;
  Int den = 1;

  static Ratio of(Int num, Int den);
  // Parses a plain decimal such as "0.4" into lowest terms (2/5).
  static Ratio parse_decimal(std::string_view text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  // Shortest decimal form when the denominator allows one, "num/den" otherwise.
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// D = floor(h * sum(P) / m). With m = 1 this is the single-machine convention
// of the benchmark tables; for parallel machines the due date shrinks with m.
Int compute_due_date(std::span<const Int> processing, Ratio h, int machines);

// One problem instance: n jobs with processing times and asymmetric
// earliness/tardiness weights, m identical machines, a common due date.
struct Instance {
  int n = 0;
  int m = 1;
  std::vector<Int> processing;    // P_i >= 1
  std::vector<Int> early_weight;  // cost per time unit of finishing early
  std::vector<Int> late_weight;   // cost per time unit of finishing late
  Ratio h{1, 1};                  // restrictive factor in (0,1]
  Int due_date = 0;

  // Builds an instance whose due date is derived from h.
  static Instance from_h(std::vector<Int> processing, std::vector<Int> early_weight,
                         std::vector<Int> late_weight, Ratio h, int machines = 1);
  // Builds an instance with an explicitly given due date.
  static Instance with_due_date(std::vector<Int> processing, std::vector<Int> early_weight,
                                std::vector<Int> late_weight, Int due_date, int machines = 1);

  void validate() const;  // throws InvalidParameter / ContractViolation
  Int total_processing() const;

  // Single-machine view of a subset of jobs, re-indexed to local ranks.
  // Shares due date and h; used for per-machine sub-problems.
  Instance subinstance(std::span<const int> job_ids) const;
};

// A processing order: permutation of the 1-based job ids 1..n.
struct JobSequence {
  std::vector<int> order;

  static JobSequence identity(int n);
  void validate(int n) const;  // throws ContractViolation
  int size() const { return static_cast<int>(order.size()); }

  friend bool operator==(const JobSequence&, const JobSequence&) = default;
};

}  // namespace cdd
