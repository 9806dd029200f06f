#include "cdd/schedule.hpp"

namespace cdd {

Int total_penalty(std::span<const Int> completion, std::span<const int> jobs,
                  const Instance& instance) {
  if (completion.size() != jobs.size()) {
    throw ContractViolation("completion times and job list differ in length");
  }
  Int total = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const int id = jobs[i];
    if (id < 1 || id > instance.n) throw ContractViolation("job id out of range");
    const Int dev = completion[i] - instance.due_date;
    total += dev > 0 ? instance.late_weight[id - 1] * dev : instance.early_weight[id - 1] * (-dev);
  }
  return total;
}

ScheduleState make_schedule_state(std::vector<int> jobs, std::vector<Int> completion,
                                  const Instance& instance) {
  ScheduleState state;
  state.jobs = std::move(jobs);
  state.completion = std::move(completion);
  const std::size_t n = state.jobs.size();
  state.deviation.resize(n);
  state.unit_penalty.resize(n);
  state.penalty = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int id = state.jobs[i];
    const Int dev = state.completion[i] - instance.due_date;
    state.deviation[i] = dev;
    state.unit_penalty[i] =
        dev > 0 ? instance.late_weight[id - 1] : -instance.early_weight[id - 1];
    state.penalty += dev * state.unit_penalty[i];
  }
  if (n > 0) state.slack = state.completion[0] - instance.processing[state.jobs[0] - 1];
  return state;
}

ScheduleState initialize_completion_times(const JobSequence& sequence, const Instance& instance) {
  sequence.validate(instance.n);
  std::vector<Int> completion(sequence.order.size());
  Int clock = 0;
  for (std::size_t i = 0; i < sequence.order.size(); ++i) {
    const Int p = instance.processing[sequence.order[i] - 1];
    clock = i == 0 ? std::max(p, instance.due_date) : clock + p;
    completion[i] = clock;
  }
  return make_schedule_state(sequence.order, std::move(completion), instance);
}

}  // namespace cdd
