#pragma once

#include <span>

#include "cdd/types.hpp"

namespace cdd {

// Completion times for one machine's job list plus the derived quantities the
// exact algorithm works with. Immutable value data once built.
struct ScheduleState {
  std::vector<int> jobs;          // job ids in processing order (1-based)
  std::vector<Int> completion;    // strictly increasing, back-to-back (no idle)
  std::vector<Int> deviation;     // completion - D, signed
  std::vector<Int> unit_penalty;  // -alpha_i while early or on time, +beta_i once tardy
  Int slack = 0;                  // completion[0] - P_first: max uniform left shift
  Int penalty = 0;                // sum(deviation * unit_penalty), >= 0

  Int earliness(std::size_t i) const { return deviation[i] < 0 ? -deviation[i] : 0; }
  Int tardiness(std::size_t i) const { return deviation[i] > 0 ? deviation[i] : 0; }
};

// Total earliness/tardiness cost of arbitrary completion times:
// sum_i alpha_i*max(0, D-C_i) + beta_i*max(0, C_i-D).
Int total_penalty(std::span<const Int> completion, std::span<const int> jobs,
                  const Instance& instance);

// Builds the starting schedule for a sequence on one machine: the first job
// finishes at max(P_first, D) and the rest follow back to back. From here the
// optimum is reachable by uniform left shifts alone.
ScheduleState initialize_completion_times(const JobSequence& sequence, const Instance& instance);

// Recomputes deviation/unit_penalty/slack/penalty from jobs + completion times.
ScheduleState make_schedule_state(std::vector<int> jobs, std::vector<Int> completion,
                                  const Instance& instance);

}  // namespace cdd
