#pragma once

#include "cdd/types.hpp"

namespace cdd {

// Independent brute-force certifiers for the exact algorithms. Kept free of
// the optimizers' search logic on purpose: these enumerate, nothing else.

// Minimum penalty over every integer left shift s in {0,..,initial slack} of
// the back-to-back initialization. Complete because all data is integral: the
// penalty is piecewise linear in s with breakpoints at the initial deviations,
// so an optimal shift exists at an integer.
Int oracle_best_shift(const JobSequence& sequence, const Instance& instance);

struct GlobalOptimum {
  JobSequence sequence;
  Int penalty = 0;
};

// Global optimum over all n! sequences on one machine, each certified by
// oracle_best_shift. Refuses instances above the job cap.
GlobalOptimum oracle_global_single(const Instance& instance, int job_cap = 10);

// Global optimum over every assignment of jobs to machines, every ordering
// within each machine and every integer shift per machine. Refuses instances
// above the caps.
Int oracle_global_parallel(const Instance& instance, int job_cap = 8, int machine_cap = 3);

}  // namespace cdd
