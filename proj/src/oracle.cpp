#include "cdd/oracle.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <thread>
#include <vector>

namespace cdd {

namespace {

// The oracle keeps its own initialization and penalty arithmetic so that it
// shares no search logic with the optimizers it certifies.

struct SeqArrays {
  std::vector<Int> p, ew, lw, c0;

  void load(std::span<const int> order, const Instance& inst) {
    const std::size_t n = order.size();
    p.resize(n);
    ew.resize(n);
    lw.resize(n);
    c0.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int id = order[i] - 1;
      p[i] = inst.processing[id];
      ew[i] = inst.early_weight[id];
      lw[i] = inst.late_weight[id];
    }
  }

  // Back-to-back start, first job at max(P_first, D); returns the slack.
  Int init(Int due) {
    Int clock = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      clock = i == 0 ? std::max(p[0], due) : clock + p[i];
      c0[i] = clock;
    }
    return p.empty() ? 0 : c0[0] - p[0];
  }
};

// Minimum penalty over every integer shift s in [0, slack0]. Complete: the
// penalty is piecewise linear in s with breakpoints at the integer deviations
// c0[i] - due, so an optimal (possibly fractional) shift can always be moved
// to an integer breakpoint or interval end without increasing the penalty.
Int min_over_shifts(std::span<const Int> c0, std::span<const Int> ew, std::span<const Int> lw,
                    Int due, Int slack0) {
  Int best = std::numeric_limits<Int>::max();
  for (Int s = 0; s <= slack0; ++s) {
    Int total = 0;
    for (std::size_t i = 0; i < c0.size(); ++i) {
      const Int dev = c0[i] - s - due;
      total += dev > 0 ? lw[i] * dev : ew[i] * (-dev);
    }
    best = std::min(best, total);
  }
  return best;
}

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  const auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      cur[static_cast<std::size_t>(index)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      cur[static_cast<std::size_t>(index)] = take;
      self(self, index + 1, remaining - take);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace

Int oracle_best_shift(const JobSequence& sequence, const Instance& instance) {
  sequence.validate(instance.n);
  SeqArrays a;
  a.load(sequence.order, instance);
  const Int slack0 = a.init(instance.due_date);
  return min_over_shifts(a.c0, a.ew, a.lw, instance.due_date, slack0);
}

GlobalOptimum oracle_global_single(const Instance& instance, int job_cap) {
  instance.validate();
  const int n = instance.n;
  if (n > job_cap) {
    throw SizeCapError("oracle_global_single caps at " + std::to_string(job_cap) + " jobs, got " +
                       std::to_string(n));
  }

  struct BlockResult {
    Int penalty = std::numeric_limits<Int>::max();
    std::vector<int> order;
  };

  // One block per choice of first job; permutations inside a block are visited
  // in lexicographic order, so strict improvement keeps the lexicographically
  // smallest optimum.
  const auto run_block = [&instance, n](int first) {
    BlockResult best;
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    perm.push_back(first);
    for (int id = 1; id <= n; ++id) {
      if (id != first) perm.push_back(id);
    }
    SeqArrays a;
    do {
      a.load(perm, instance);
      const Int slack0 = a.init(instance.due_date);
      const Int pen = min_over_shifts(a.c0, a.ew, a.lw, instance.due_date, slack0);
      if (pen < best.penalty) {
        best.penalty = pen;
        best.order = perm;
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
  };

  std::vector<std::future<BlockResult>> futures;
  futures.reserve(static_cast<std::size_t>(n));
  const int workers = std::min(worker_count(), n);
  for (int first = 1; first <= n; ++first) {
    auto policy = workers > 1 ? std::launch::async : std::launch::deferred;
    futures.push_back(std::async(policy, run_block, first));
  }
  BlockResult best;
  for (auto& f : futures) {
    BlockResult r = f.get();
    if (r.penalty < best.penalty) best = std::move(r);
  }
  return GlobalOptimum{JobSequence{std::move(best.order)}, best.penalty};
}

Int oracle_global_parallel(const Instance& instance, int job_cap, int machine_cap) {
  instance.validate();
  const int n = instance.n;
  const int m = instance.m;
  if (n > job_cap) {
    throw SizeCapError("oracle_global_parallel caps at " + std::to_string(job_cap) + " jobs");
  }
  if (m > machine_cap) {
    throw SizeCapError("oracle_global_parallel caps at " + std::to_string(machine_cap) +
                       " machines");
  }

  // Every (assignment, within-machine order) pair appears exactly once as a
  // permutation of all jobs cut into m consecutive blocks.
  const auto splits = compositions(n, m);

  const auto run_block = [&instance, n, &splits](int first) {
    Int best = std::numeric_limits<Int>::max();
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    perm.push_back(first);
    for (int id = 1; id <= n; ++id) {
      if (id != first) perm.push_back(id);
    }
    SeqArrays a;
    do {
      for (const auto& split : splits) {
        Int total = 0;
        std::size_t offset = 0;
        for (int len : split) {
          if (len == 0) continue;
          a.load(std::span<const int>(perm).subspan(offset, static_cast<std::size_t>(len)),
                 instance);
          const Int slack0 = a.init(instance.due_date);
          total += min_over_shifts(a.c0, a.ew, a.lw, instance.due_date, slack0);
          offset += static_cast<std::size_t>(len);
          if (total >= best) break;  // penalties are nonnegative
        }
        best = std::min(best, total);
      }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
  };

  std::vector<std::future<Int>> futures;
  futures.reserve(static_cast<std::size_t>(n));
  const int workers = std::min(worker_count(), n);
  for (int first = 1; first <= n; ++first) {
    auto policy = workers > 1 ? std::launch::async : std::launch::deferred;
    futures.push_back(std::async(policy, run_block, first));
  }
  Int best = std::numeric_limits<Int>::max();
  for (auto& f : futures) best = std::min(best, f.get());
  return best;
}

}  // namespace cdd
