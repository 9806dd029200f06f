#include "cdd/types.hpp"

#include <algorithm>
#include <numeric>

namespace cdd {

namespace {

Int checked_nonneg(__int128 v, const char* what) {
  if (v < 0 || v > static_cast<__int128>(INT64_MAX)) {
    throw InvalidParameter(std::string(what) + " out of 64-bit range");
  }
  return static_cast<Int>(v);
}

}  // namespace

Ratio Ratio::of(Int num, Int den) {
  if (den <= 0) throw InvalidParameter("rational denominator must be positive");
  if (num < 0) throw InvalidParameter("rational must be nonnegative");
  const Int g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

Ratio Ratio::parse_decimal(std::string_view text) {
  if (text.empty()) throw InvalidParameter("empty decimal");
  Int whole = 0, frac = 0, scale = 1;
  std::size_t i = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (text[i] < '0' || text[i] > '9') throw InvalidParameter("bad decimal: " + std::string(text));
    whole = whole * 10 + (text[i] - '0');
    any_digit = true;
    if (whole > (INT64_MAX >> 8)) throw InvalidParameter("decimal too large");
  }
  if (i < text.size()) {  // fractional part
    for (++i; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw InvalidParameter("bad decimal: " + std::string(text));
      }
      if (scale > (INT64_MAX >> 8)) throw InvalidParameter("decimal too precise");
      frac = frac * 10 + (text[i] - '0');
      scale *= 10;
      any_digit = true;
    }
  }
  if (!any_digit) throw InvalidParameter("bad decimal: " + std::string(text));
  return Ratio::of(whole * scale + frac, scale);
}

std::string Ratio::to_string() const {
  // Terminating decimal exists iff den = 2^a * 5^b.
  Int d = den;
  Int scale = 1;
  while (d % 2 == 0) d /= 2, scale *= 2;
  while (d % 5 == 0) d /= 5, scale *= 5;
  if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
  // Bring denominator to a power of ten.
  Int p10 = 1;
  while (p10 % den != 0) p10 *= 10;
  const Int scaled = num * (p10 / den);
  if (p10 == 1) return std::to_string(scaled);
  std::string digits = std::to_string(scaled);
  std::string p10s = std::to_string(p10);
  const std::size_t places = p10s.size() - 1;
  while (digits.size() <= places) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return digits;
}

Int compute_due_date(std::span<const Int> processing, Ratio h, int machines) {
  if (processing.empty()) throw InvalidParameter("due date needs at least one processing time");
  if (machines < 1) throw InvalidParameter("machine count must be >= 1");
  if (h.num <= 0 || h.num > h.den) throw InvalidParameter("restrictive factor must be in (0,1]");
  __int128 sum = 0;
  for (Int p : processing) sum += p;
  const __int128 numer = static_cast<__int128>(h.num) * sum;
  const __int128 denom = static_cast<__int128>(h.den) * machines;
  return checked_nonneg(numer / denom, "due date");
}

Instance Instance::from_h(std::vector<Int> processing, std::vector<Int> early_weight,
                          std::vector<Int> late_weight, Ratio h, int machines) {
  Instance inst;
  inst.n = static_cast<int>(processing.size());
  inst.m = machines;
  inst.due_date = compute_due_date(processing, h, machines);
  inst.processing = std::move(processing);
  inst.early_weight = std::move(early_weight);
  inst.late_weight = std::move(late_weight);
  inst.h = h;
  inst.validate();
  return inst;
}

Instance Instance::with_due_date(std::vector<Int> processing, std::vector<Int> early_weight,
                                 std::vector<Int> late_weight, Int due_date, int machines) {
  Instance inst;
  inst.n = static_cast<int>(processing.size());
  inst.m = machines;
  inst.due_date = due_date;
  inst.processing = std::move(processing);
  inst.early_weight = std::move(early_weight);
  inst.late_weight = std::move(late_weight);
  inst.validate();
  return inst;
}

void Instance::validate() const {
  if (n < 1) throw InvalidParameter("instance needs at least one job");
  if (processing.size() != static_cast<std::size_t>(n) ||
      early_weight.size() != static_cast<std::size_t>(n) ||
      late_weight.size() != static_cast<std::size_t>(n)) {
    throw ContractViolation("processing/early/late lists must all have length n");
  }
  if (m < 1 || m > n) throw InvalidParameter("machine count must be in [1, n]");
  if (h.num <= 0 || h.num > h.den) throw InvalidParameter("restrictive factor must be in (0,1]");
  if (due_date < 0) throw InvalidParameter("due date must be nonnegative");
  for (int i = 0; i < n; ++i) {
    if (processing[i] < 1) throw InvalidParameter("processing times must be >= 1");
    if (early_weight[i] < 1 || late_weight[i] < 1) {
      throw InvalidParameter("penalty weights must be >= 1");
    }
  }
}

Int Instance::total_processing() const {
  return std::accumulate(processing.begin(), processing.end(), Int{0});
}

Instance Instance::subinstance(std::span<const int> job_ids) const {
  Instance sub;
  sub.n = static_cast<int>(job_ids.size());
  sub.m = 1;
  sub.h = h;
  sub.due_date = due_date;
  sub.processing.reserve(job_ids.size());
  sub.early_weight.reserve(job_ids.size());
  sub.late_weight.reserve(job_ids.size());
  for (int id : job_ids) {
    if (id < 1 || id > n) throw ContractViolation("job id out of range in subinstance");
    sub.processing.push_back(processing[id - 1]);
    sub.early_weight.push_back(early_weight[id - 1]);
    sub.late_weight.push_back(late_weight[id - 1]);
  }
  sub.validate();
  return sub;
}

JobSequence JobSequence::identity(int n) {
  JobSequence seq;
  seq.order.resize(n);
  std::iota(seq.order.begin(), seq.order.end(), 1);
  return seq;
}

void JobSequence::validate(int n) const {
  if (static_cast<int>(order.size()) != n) {
    throw ContractViolation("sequence length does not match job count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int id : order) {
    if (id < 1 || id > n) throw ContractViolation("sequence entry out of range 1..n");
    if (seen[id - 1]) throw ContractViolation("sequence repeats job " + std::to_string(id));
    seen[id - 1] = true;
  }
}

}  // namespace cdd
