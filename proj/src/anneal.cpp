#include "cdd/anneal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "cdd/exact.hpp"
#include "cdd/parallel.hpp"

namespace cdd {

void SAConfig::validate() const {
  if (ensemble_size < 1) throw InvalidParameter("ensemble_size must be >= 1");
  if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) {
    throw InvalidParameter("cooling_rate must be in (0,1)");
  }
  if (!(constant_accept_p >= 0.0 && constant_accept_p <= 1.0)) {
    throw InvalidParameter("constant_accept_p must be in [0,1]");
  }
  if (!(init_temp_multiplier > 0.0)) throw InvalidParameter("init_temp_multiplier must be > 0");
  if (sample_count < 2) throw InvalidParameter("sample_count must be >= 2");
  if (perturbation_size < 0) throw InvalidParameter("perturbation_size must be >= 0");
  if (sync_interval < 1) throw InvalidParameter("sync_interval must be >= 1");
  if (!(temperature_floor > 0.0)) throw InvalidParameter("temperature_floor must be > 0");
  if (threads < 0) throw InvalidParameter("threads must be >= 0");
}

int default_perturbation_size(int n) {
  return 2 + static_cast<int>(std::floor(std::sqrt(static_cast<double>(n) / 10.0)));
}

double initial_temperature_from_energies(std::span<const Int> energies, double multiplier) {
  if (energies.empty()) return 1.0;
  double mean = 0.0;
  for (Int e : energies) mean += static_cast<double>(e);
  mean /= static_cast<double>(energies.size());
  double var = 0.0;
  for (Int e : energies) {
    const double d = static_cast<double>(e) - mean;
    var += d * d;
  }
  var /= static_cast<double>(energies.size());  // population divisor
  const double sigma = std::sqrt(var);
  if (sigma == 0.0) return 1.0;
  return multiplier * sigma;
}

double estimate_initial_temperature(const Instance& instance, const SAConfig& config, Rng& rng) {
  config.validate();
  std::vector<int> order(JobSequence::identity(instance.n).order);
  detail::EvalScratch scratch;
  std::vector<Int> energies;
  energies.reserve(static_cast<std::size_t>(config.sample_count));
  for (int s = 0; s < config.sample_count; ++s) {
    rng.shuffle(std::span<int>(order));
    energies.push_back(detail::optimal_penalty(instance, order, scratch));
  }
  return initial_temperature_from_energies(energies, config.init_temp_multiplier);
}

namespace {

// Applies the k-position perturbation in place: pick k distinct positions,
// then a uniform random arrangement of the jobs sitting there.
void perturb_in_place(std::vector<int>& order, int k, Rng& rng, std::vector<int>& values) {
  const int n = static_cast<int>(order.size());
  k = std::min(k, n);
  if (k < 1) return;
  std::vector<int> positions = rng.distinct(n, k);
  std::sort(positions.begin(), positions.end());
  values.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i)] = order[positions[i]];
  rng.shuffle(std::span<int>(values));
  for (int i = 0; i < k; ++i) order[positions[i]] = values[static_cast<std::size_t>(i)];
}

struct Chain {
  Rng rng;
  std::vector<int> current;
  Int current_penalty = 0;
  std::vector<int> best_order;
  Int best_penalty = 0;
  double temperature = 1.0;
  std::vector<Int> history;
  detail::EvalScratch scratch;
  std::vector<int> proposal;
  std::vector<int> values_buf;
};

}  // namespace

JobSequence perturb(const JobSequence& sequence, int k, Rng& rng) {
  JobSequence out = sequence;
  std::vector<int> values;
  perturb_in_place(out.order, k, rng, values);
  return out;
}

SearchResult anneal(const Instance& instance, const SAConfig& config) {
  config.validate();
  instance.validate();
  const auto t_start = std::chrono::steady_clock::now();

  const int n = instance.n;
  const std::int64_t budget =
      config.iteration_budget < 0 ? 200LL * n : config.iteration_budget;
  const int k = config.perturbation_size > 0 ? config.perturbation_size
                                             : default_perturbation_size(n);

  const auto finish = [&](const std::vector<int>& best_order, Int best_penalty,
                          std::vector<std::vector<Int>> history) {
    SearchResult result;
    result.best_sequence = JobSequence{best_order};
    result.best_penalty = best_penalty;
    if (instance.m == 1) {
      result.best_schedule.push_back(
          optimize_sequence_logarithmic(result.best_sequence, instance).completion);
    } else {
      const ParallelOptimum par = optimize_parallel(result.best_sequence, instance);
      for (const auto& machine : par.machines) {
        result.best_schedule.push_back(machine.completion);
      }
    }
    result.history = std::move(history);
    result.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
  };

  if (budget == 0) {
    detail::EvalScratch scratch;
    const std::vector<int> identity = JobSequence::identity(n).order;
    return finish(identity, detail::optimal_penalty(instance, identity, scratch), {});
  }

  Rng sampler = Rng::for_stream(config.seed, 0);
  const double t0 = estimate_initial_temperature(instance, config, sampler);

  std::vector<Chain> chains;
  chains.reserve(static_cast<std::size_t>(config.ensemble_size));
  for (int c = 0; c < config.ensemble_size; ++c) {
    Chain chain{Rng::for_stream(config.seed, static_cast<std::uint64_t>(c) + 1),
                {}, 0, {}, 0, t0, {}, {}, {}, {}};
    chain.current = JobSequence::identity(n).order;
    chain.rng.shuffle(std::span<int>(chain.current));
    chain.current_penalty = detail::optimal_penalty(instance, chain.current, chain.scratch);
    chain.best_order = chain.current;
    chain.best_penalty = chain.current_penalty;
    chain.temperature = t0;
    chains.push_back(std::move(chain));
  }

  std::vector<int> global_best = chains[0].best_order;
  Int global_penalty = chains[0].best_penalty;
  for (const Chain& chain : chains) {
    if (chain.best_penalty < global_penalty) {
      global_penalty = chain.best_penalty;
      global_best = chain.best_order;
    }
  }

  const auto run_block = [&](Chain& chain, std::int64_t steps) {
    for (std::int64_t step = 0; step < steps; ++step) {
      chain.proposal = chain.current;
      perturb_in_place(chain.proposal, k, chain.rng, chain.values_buf);
      const Int pen = detail::optimal_penalty(instance, chain.proposal, chain.scratch);
      const Int delta = pen - chain.current_penalty;
      bool accept = delta <= 0;
      if (!accept) {
        const double temp = std::max(chain.temperature, config.temperature_floor);
        if (chain.rng.unit() < std::exp(-static_cast<double>(delta) / temp)) {
          accept = true;
        } else if (chain.rng.unit() < config.constant_accept_p) {
          accept = true;
        }
      }
      if (accept) {
        std::swap(chain.current, chain.proposal);
        chain.current_penalty = pen;
        if (pen < chain.best_penalty) {
          chain.best_penalty = pen;
          chain.best_order = chain.current;
        }
      }
      chain.temperature *= config.cooling_rate;
    }
  };

  const int hw = std::thread::hardware_concurrency() == 0
                     ? 1
                     : static_cast<int>(std::thread::hardware_concurrency());
  const int thread_count =
      std::max(1, std::min(config.threads > 0 ? config.threads : hw, config.ensemble_size));

  std::int64_t done = 0;
  while (done < budget) {
    const std::int64_t block = std::min<std::int64_t>(config.sync_interval, budget - done);
    if (thread_count == 1) {
      for (Chain& chain : chains) run_block(chain, block);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(thread_count));
      for (int t = 0; t < thread_count; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t c = static_cast<std::size_t>(t); c < chains.size();
               c += static_cast<std::size_t>(thread_count)) {
            run_block(chains[c], block);
          }
        });
      }
      for (auto& th : pool) th.join();
    }
    done += block;

    // Synchronization: publish the global best, then reinject it into the
    // worst chain if that chain's current state is strictly worse.
    for (Chain& chain : chains) {
      if (chain.best_penalty < global_penalty) {
        global_penalty = chain.best_penalty;
        global_best = chain.best_order;
      }
      chain.history.push_back(chain.best_penalty);
    }
    std::size_t worst = 0;
    for (std::size_t c = 1; c < chains.size(); ++c) {
      if (chains[c].current_penalty > chains[worst].current_penalty) worst = c;
    }
    if (chains[worst].current_penalty > global_penalty) {
      chains[worst].current = global_best;
      chains[worst].current_penalty = global_penalty;
    }
  }

  std::vector<std::vector<Int>> history;
  history.reserve(chains.size());
  for (Chain& chain : chains) history.push_back(std::move(chain.history));
  return finish(global_best, global_penalty, std::move(history));
}

}  // namespace cdd
