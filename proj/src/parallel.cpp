#include "cdd/parallel.hpp"

#include <algorithm>

namespace cdd {

int MachineAssignment::machine_of(int job_id) const {
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (std::find(jobs[j].begin(), jobs[j].end(), job_id) != jobs[j].end()) {
      return static_cast<int>(j);
    }
  }
  return -1;
}

namespace {

int least_loaded(std::span<const Int> clocks) {
  int best = 0;
  for (int j = 1; j < static_cast<int>(clocks.size()); ++j) {
    if (clocks[j] < clocks[best]) best = j;  // lowest index wins ties
  }
  return best;
}

}  // namespace

MachineAssignment allot_jobs(const JobSequence& sequence, const Instance& instance) {
  sequence.validate(instance.n);
  const int m = instance.m;
  if (m > instance.n) throw InvalidParameter("more machines than jobs");

  MachineAssignment out;
  out.jobs.assign(static_cast<std::size_t>(m), {});
  out.finish_clock.assign(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    const int id = sequence.order[static_cast<std::size_t>(j)];
    out.jobs[j].push_back(id);
    out.finish_clock[j] = std::max(instance.processing[id - 1], instance.due_date);
  }
  for (int i = m; i < instance.n; ++i) {
    const int id = sequence.order[static_cast<std::size_t>(i)];
    const int target = least_loaded(out.finish_clock);
    out.jobs[target].push_back(id);
    out.finish_clock[target] += instance.processing[id - 1];
  }
  return out;
}

ParallelOptimum optimize_parallel(const JobSequence& sequence, const Instance& instance) {
  ParallelOptimum result;
  result.assignment = allot_jobs(sequence, instance);
  result.machines.reserve(result.assignment.jobs.size());
  result.penalty = 0;
  for (const auto& machine_jobs : result.assignment.jobs) {
    const Instance sub = instance.subinstance(machine_jobs);
    ScheduleState state =
        optimize_sequence_logarithmic(JobSequence::identity(sub.n), sub);
    state.jobs = machine_jobs;  // back to global job ids, same order
    result.penalty += state.penalty;
    result.machines.push_back(std::move(state));
  }
  return result;
}

namespace detail {

Int optimal_penalty(const Instance& instance, std::span<const int> order, EvalScratch& scratch) {
  const int n = static_cast<int>(order.size());
  const Int due = instance.due_date;

  const auto single = [&](std::span<const int> jobs) {
    const std::size_t len = jobs.size();
    scratch.p.resize(len);
    scratch.ew.resize(len);
    scratch.lw.resize(len);
    scratch.completion.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      const int id = jobs[i] - 1;
      scratch.p[i] = instance.processing[id];
      scratch.ew[i] = instance.early_weight[id];
      scratch.lw[i] = instance.late_weight[id];
    }
    const Int slack0 = init_completion(scratch.p, due, scratch.completion);
    return best_shift_logarithmic(scratch.completion, scratch.ew, scratch.lw, due, slack0)
        .penalty;
  };

  if (instance.m == 1) return single(order);

  const int m = instance.m;
  scratch.machine_clock.assign(static_cast<std::size_t>(m), 0);
  scratch.machine_jobs.resize(static_cast<std::size_t>(m));
  for (auto& jobs : scratch.machine_jobs) jobs.clear();
  for (int j = 0; j < m; ++j) {
    const int id = order[static_cast<std::size_t>(j)];
    scratch.machine_jobs[j].push_back(id);
    scratch.machine_clock[j] = std::max(instance.processing[id - 1], due);
  }
  for (int i = m; i < n; ++i) {
    const int id = order[static_cast<std::size_t>(i)];
    int target = 0;
    for (int j = 1; j < m; ++j) {
      if (scratch.machine_clock[j] < scratch.machine_clock[target]) target = j;
    }
    scratch.machine_jobs[target].push_back(id);
    scratch.machine_clock[target] += instance.processing[id - 1];
  }

  Int total = 0;
  for (int j = 0; j < m; ++j) total += single(scratch.machine_jobs[j]);
  return total;
}

}  // namespace detail

}  // namespace cdd
