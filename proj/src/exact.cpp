#include "cdd/exact.hpp"

#include <algorithm>

namespace cdd {

namespace detail {

Int init_completion(std::span<const Int> p, Int due_date, std::span<Int> completion) {
  Int clock = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    clock = i == 0 ? std::max(p[0], due_date) : clock + p[i];
    completion[i] = clock;
  }
  return p.empty() ? 0 : completion[0] - p[0];
}

Int penalty_at_shift(std::span<const Int> c0, std::span<const Int> early_w,
                     std::span<const Int> late_w, Int due_date, Int s) {
  Int total = 0;
  for (std::size_t i = 0; i < c0.size(); ++i) {
    const Int dev = c0[i] - s - due_date;
    total += dev > 0 ? late_w[i] * dev : early_w[i] * (-dev);
  }
  return total;
}

ShiftOptimum best_shift_logarithmic(std::span<const Int> c0, std::span<const Int> early_w,
                                    std::span<const Int> late_w, Int due_date, Int slack0) {
  const int n = static_cast<int>(c0.size());
  // Candidate cumulative shift at loop index j (1-based). Candidates are
  // non-decreasing; equal ones only occur once the slack is exhausted.
  const auto shift_at = [&](int j) { return std::min(slack0, c0[j - 1] - due_date); };

  std::vector<Int> memo(static_cast<std::size_t>(n) + 1, -1);
  const auto value_at = [&](int j) {
    Int& slot = memo[static_cast<std::size_t>(j)];
    if (slot < 0) slot = penalty_at_shift(c0, early_w, late_w, due_date, shift_at(j));
    return slot;
  };

  // The objective is convex piecewise-linear in the shift, so along the
  // non-decreasing candidates the forward differences change sign once;
  // the minimum sits at the first index whose next value does not improve.
  const auto at_valley = [&](int j) { return j >= n || value_at(j + 1) >= value_at(j); };

  int best = 1;
  if (!at_valley(1)) {
    int lo = 1;  // known not-at-valley
    int hi = 2;
    while (hi < n && !at_valley(hi)) {
      lo = hi;
      hi = std::min(n, hi * 2);
    }
    while (lo + 1 < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (at_valley(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    best = hi;
  }
  return ShiftOptimum{shift_at(best), value_at(best)};
}

}  // namespace detail

namespace {

void gather_by_order(std::span<const int> order, const Instance& inst, std::vector<Int>& p,
                     std::vector<Int>& ew, std::vector<Int>& lw) {
  const std::size_t n = order.size();
  p.resize(n);
  ew.resize(n);
  lw.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int id = order[i] - 1;
    p[i] = inst.processing[id];
    ew[i] = inst.early_weight[id];
    lw[i] = inst.late_weight[id];
  }
}

ScheduleState state_at_shift(const JobSequence& sequence, const Instance& instance,
                             std::span<const Int> c0, Int shift) {
  std::vector<Int> completion(c0.size());
  for (std::size_t i = 0; i < c0.size(); ++i) completion[i] = c0[i] - shift;
  return make_schedule_state(sequence.order, std::move(completion), instance);
}

}  // namespace

SequenceOptimum optimize_sequence_quadratic(const JobSequence& sequence,
                                            const Instance& instance) {
  sequence.validate(instance.n);
  const int n = sequence.size();

  std::vector<Int> p, ew, lw;
  gather_by_order(sequence.order, instance, p, ew, lw);
  std::vector<Int> c0(static_cast<std::size_t>(n));
  const Int slack0 = detail::init_completion(p, instance.due_date, c0);

  IterationTrace trace;
  trace.initial_penalty = detail::penalty_at_shift(c0, ew, lw, instance.due_date, 0);

  Int sol = trace.initial_penalty;
  Int accepted_shift = 0;
  Int applied = 0;      // cumulative left shift on the working schedule
  Int slack = slack0;   // remaining room before the first job starts at 0
  for (int j = 2; j <= n; ++j) {
    const Int deviation_j = c0[j - 1] - applied - instance.due_date;
    const Int step = std::min(slack, deviation_j);
    applied += step;
    slack -= step;
    const Int value = detail::penalty_at_shift(c0, ew, lw, instance.due_date, applied);
    trace.values.push_back(value);
    trace.cumulative_shift.push_back(applied);
    trace.stop_index = j;
    if (value < sol) {
      sol = value;
      accepted_shift = applied;
    } else {
      break;
    }
  }

  return SequenceOptimum{state_at_shift(sequence, instance, c0, accepted_shift),
                         std::move(trace)};
}

Int evaluate_at_shift(const JobSequence& sequence, const Instance& instance, Int shift) {
  sequence.validate(instance.n);
  std::vector<Int> p, ew, lw;
  gather_by_order(sequence.order, instance, p, ew, lw);
  std::vector<Int> c0(p.size());
  const Int slack0 = detail::init_completion(p, instance.due_date, c0);
  if (shift < 0 || shift > slack0) {
    throw InvalidParameter("shift " + std::to_string(shift) + " outside [0, " +
                           std::to_string(slack0) + "]");
  }
  return detail::penalty_at_shift(c0, ew, lw, instance.due_date, shift);
}

ScheduleState optimize_sequence_logarithmic(const JobSequence& sequence,
                                            const Instance& instance) {
  sequence.validate(instance.n);
  std::vector<Int> p, ew, lw;
  gather_by_order(sequence.order, instance, p, ew, lw);
  std::vector<Int> c0(p.size());
  const Int slack0 = detail::init_completion(p, instance.due_date, c0);
  const auto best = detail::best_shift_logarithmic(c0, ew, lw, instance.due_date, slack0);
  return state_at_shift(sequence, instance, c0, best.shift);
}

}  // namespace cdd
