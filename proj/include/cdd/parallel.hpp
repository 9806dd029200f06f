#pragma once

#include "cdd/exact.hpp"
#include "cdd/schedule.hpp"
#include "cdd/types.hpp"

namespace cdd {

// Result of the tardiness-greedy allotment: ordered job lists per machine and
// each machine's finish clock after its last assigned job.
struct MachineAssignment {
  std::vector<std::vector<int>> jobs;  // per machine, job ids in sequence order
  std::vector<Int> finish_clock;       // M_j

  int machine_of(int job_id) const;  // -1 when absent
};

// Distributes a sequence over m machines: the first m jobs go one per machine
// finishing at max(P_i, D); every later job is appended to the machine with
// the smallest finish clock (lowest index on ties). Relative sequence order is
// preserved within each machine.
MachineAssignment allot_jobs(const JobSequence& sequence, const Instance& instance);

struct ParallelOptimum {
  MachineAssignment assignment;
  std::vector<ScheduleState> machines;  // one optimized schedule per machine
  Int penalty = 0;                      // combined over machines
};

// Per-sequence exact optimization on m machines: allot, then optimize each
// machine's job list independently against the shared due date.
ParallelOptimum optimize_parallel(const JobSequence& sequence, const Instance& instance);

namespace detail {

// Allocation-free combined-penalty evaluation of a sequence (1-based order)
// through allotment + per-machine optimization. Scratch buffers are reused
// across calls; behaves exactly like optimize_parallel / the single-machine
// optimizer but returns only the penalty.
struct EvalScratch {
  std::vector<Int> p, ew, lw, completion;
  std::vector<Int> machine_clock;
  std::vector<std::vector<int>> machine_jobs;
};

Int optimal_penalty(const Instance& instance, std::span<const int> order, EvalScratch& scratch);

}  // namespace detail

}  // namespace cdd
