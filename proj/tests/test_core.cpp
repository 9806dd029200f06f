#include <numeric>

#include "cdd/bench.hpp"
#include "cdd/rng.hpp"
#include "cdd/schedule.hpp"
#include "cdd/types.hpp"
#include "doctest.h"

using namespace cdd;

namespace {

Instance unit_instance(std::vector<Int> p, Int due) {
  const std::size_t n = p.size();
  return Instance::with_due_date(std::move(p), std::vector<Int>(n, 1), std::vector<Int>(n, 1),
                                 due);
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("total_penalty examples") {
  const Instance toy = unit_instance({6, 3, 4}, 6);
  const std::vector<Int> c = {6, 9, 13};
  const std::vector<int> jobs = {1, 2, 3};
  CHECK(total_penalty(c, jobs, toy) == 10);

  const Instance one = Instance::with_due_date({4}, {7}, {9}, 4);
  CHECK(total_penalty(std::vector<Int>{4}, std::vector<int>{1}, one) == 0);

  const Instance skew = Instance::with_due_date({2, 3}, {10, 10}, {1, 1}, 4);
  CHECK(total_penalty(std::vector<Int>{2, 5}, std::vector<int>{1, 2}, skew) == 21);
}

TEST_CASE("total_penalty rejects mismatched lengths") {
  const Instance toy = unit_instance({2, 3}, 4);
  CHECK_THROWS_AS(total_penalty(std::vector<Int>{2}, std::vector<int>{1, 2}, toy),
                  ContractViolation);
}

TEST_CASE("compute_due_date") {
  const std::vector<Int> p50 = {20, 30};
  CHECK(compute_due_date(p50, Ratio::of(1, 5), 1) == 10);
  CHECK(compute_due_date(p50, Ratio::of(2, 5), 2) == 10);
  const std::vector<Int> p7 = {7};
  CHECK(compute_due_date(p7, Ratio::of(4, 5), 1) == 5);

  CHECK_THROWS_AS(compute_due_date(p7, Ratio{0, 1}, 1), InvalidParameter);
  CHECK_THROWS_AS(compute_due_date(p7, Ratio{6, 5}, 1), InvalidParameter);
}

TEST_CASE("ratio parsing and printing") {
  CHECK(Ratio::parse_decimal("0.4") == Ratio::of(2, 5));
  CHECK(Ratio::parse_decimal("1") == Ratio::of(1, 1));
  CHECK(Ratio::parse_decimal("0.999") == Ratio::of(999, 1000));
  CHECK(Ratio::parse_decimal("0.25") == Ratio::of(1, 4));
  CHECK_THROWS_AS(Ratio::parse_decimal(""), InvalidParameter);
  CHECK_THROWS_AS(Ratio::parse_decimal("a.b"), InvalidParameter);
  CHECK_THROWS_AS(Ratio::parse_decimal("1.2.3"), InvalidParameter);

  CHECK(Ratio::of(1, 5).to_string() == "0.2");
  CHECK(Ratio::of(999, 1000).to_string() == "0.999");
  CHECK(Ratio::of(1, 1).to_string() == "1");
  CHECK(Ratio::of(1, 3).to_string() == "1/3");
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance::with_due_date({3, 4}, {1, 1}, {1, 1}, 5, 3), InvalidParameter);
  CHECK_THROWS_AS(Instance::with_due_date({3, 0}, {1, 1}, {1, 1}, 5), InvalidParameter);
  CHECK_THROWS_AS(Instance::with_due_date({3, 4}, {1, 0}, {1, 1}, 5), InvalidParameter);
  CHECK_THROWS_AS(Instance::with_due_date({3, 4}, {1}, {1, 1}, 5), ContractViolation);

  const Instance ok = Instance::from_h({3, 4, 5}, {1, 2, 3}, {4, 5, 6}, Ratio::of(1, 2), 2);
  CHECK(ok.due_date == 3);  // floor(0.5 * 12 / 2)
  CHECK(ok.total_processing() == 12);
}

TEST_CASE("job sequence validation") {
  CHECK_THROWS_AS((JobSequence{{1, 1, 2}}.validate(3)), ContractViolation);
  CHECK_THROWS_AS((JobSequence{{0, 1}}.validate(2)), ContractViolation);
  CHECK_THROWS_AS((JobSequence{{1, 2}}.validate(3)), ContractViolation);
  CHECK_NOTHROW((JobSequence{{3, 1, 2}}.validate(3)));
  CHECK(JobSequence::identity(3).order == std::vector<int>{1, 2, 3});
}

TEST_CASE("schedule state totals match total_penalty") {
  Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng.range(1, 12));
    const RawInstance raw = generate_instance(n, rng);
    const int h_tenths = 2 * static_cast<int>(rng.range(1, 4));
    const Instance inst = make_instance(raw, Ratio::of(h_tenths, 10), 1);
    std::vector<int> order = JobSequence::identity(n).order;
    rng.shuffle(std::span<int>(order));
    const ScheduleState state = initialize_completion_times(JobSequence{order}, inst);
    CHECK(state.penalty == total_penalty(state.completion, state.jobs, inst));
    CHECK(state.penalty >= 0);
  }
}

TEST_CASE("penalty is zero only when every deviation is zero") {
  const Instance toy = unit_instance({2, 3}, 4);
  ScheduleState at_due = make_schedule_state({1}, {4}, toy);
  CHECK(at_due.penalty == 0);
  ScheduleState off = make_schedule_state({1}, {3}, toy);
  CHECK(off.penalty > 0);
  const ScheduleState init = initialize_completion_times(JobSequence::identity(2), toy);
  const bool all_on_time =
      std::all_of(init.deviation.begin(), init.deviation.end(), [](Int d) { return d == 0; });
  CHECK(all_on_time == (init.penalty == 0));
}

TEST_CASE("all-tardy schedules grow by x * sum(beta) when pushed right") {
  Rng rng(77);
  for (int round = 0; round < 50; ++round) {
    const int n = static_cast<int>(rng.range(1, 10));
    const RawInstance raw = generate_instance(n, rng);
    const Instance inst = make_instance(raw, Ratio::of(1, 5), 1);
    // Start every job past the due date, back to back.
    std::vector<Int> c(static_cast<std::size_t>(n));
    Int clock = inst.due_date + rng.range(1, 5);
    for (int i = 0; i < n; ++i) {
      clock += inst.processing[static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(i)] = clock;
    }
    const std::vector<int> jobs = JobSequence::identity(n).order;
    const Int base = total_penalty(c, jobs, inst);
    const Int x = rng.range(1, 20);
    for (auto& ci : c) ci += x;
    const Int beta_sum =
        std::accumulate(inst.late_weight.begin(), inst.late_weight.end(), Int{0});
    CHECK(total_penalty(c, jobs, inst) == base + x * beta_sum);
  }
}

}  // TEST_SUITE
