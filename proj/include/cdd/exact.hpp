#pragma once

#include "cdd/schedule.hpp"
#include "cdd/types.hpp"

namespace cdd {

// Record of the iterative left-shift loop: one entry per completed loop
// iteration j = 2..stop_index. Values fall to a single minimum and the first
// non-decrease terminates the loop.
struct IterationTrace {
  Int initial_penalty = 0;            // objective right after initialization
  std::vector<Int> values;            // objective after each iteration
  std::vector<Int> cumulative_shift;  // total left shift applied so far
  int stop_index = 1;                 // loop index at termination (1 = loop never ran)
};

struct SequenceOptimum {
  ScheduleState schedule;
  IterationTrace trace;
};

// Per-sequence exact optimizer, single machine, O(n^2): starting from the
// back-to-back initialization, iteration j shifts every completion time left
// by min(slack, deviation of job j), keeping the shift only while the
// objective strictly improves. Returns the last accepted state.
SequenceOptimum optimize_sequence_quadratic(const JobSequence& sequence,
                                            const Instance& instance);

// Penalty of the initial schedule uniformly left-shifted by `shift`.
// Pure probe, O(n). Throws InvalidParameter when shift exceeds the initial slack.
Int evaluate_at_shift(const JobSequence& sequence, const Instance& instance, Int shift);

// Same optimum as the quadratic variant in O(n log n): the cumulative shift
// after iteration j equals min(slack0, deviation0[j]), so the loop's value
// sequence is random-accessible; the objective is convex piecewise-linear in
// the shift, so exponential search plus binary search over the candidate
// shifts finds the minimum with O(log n) probes.
ScheduleState optimize_sequence_logarithmic(const JobSequence& sequence,
                                            const Instance& instance);

namespace detail {

// Allocation-free kernels over sequence-ordered arrays, shared by the public
// optimizers, the parallel composition and the annealer's inner loop.

// Initial completion times into `completion` (same length as p); returns the
// initial slack.
Int init_completion(std::span<const Int> p, Int due_date, std::span<Int> completion);

// Penalty of completion times `c0` shifted left by s, O(n).
Int penalty_at_shift(std::span<const Int> c0, std::span<const Int> early_w,
                     std::span<const Int> late_w, Int due_date, Int s);

// Exponential-search optimum over the candidate shifts; returns the smallest
// shift achieving the minimum penalty. `c0` is the initialized schedule.
struct ShiftOptimum {
  Int shift = 0;
  Int penalty = 0;
};
ShiftOptimum best_shift_logarithmic(std::span<const Int> c0, std::span<const Int> early_w,
                                    std::span<const Int> late_w, Int due_date, Int slack0);

}  // namespace detail

}  // namespace cdd
