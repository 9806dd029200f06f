#pragma once

#include <cstdint>

#include "cdd/rng.hpp"
#include "cdd/types.hpp"

namespace cdd {

// Modified simulated annealing over sequence space. Every proposal is scored
// by the exact per-sequence optimizer, so the search only has to find a good
// processing order.
struct SAConfig {
  int ensemble_size = 20;            // independent chains
  double cooling_rate = 0.999;       // exponential schedule, T *= rate per step
  double constant_accept_p = 0.07;   // fallback acceptance after Metropolis rejects
  double init_temp_multiplier = 2.0; // T0 = multiplier * sigma of sampled energies
  int sample_count = 1000;           // energy samples for the sigma estimate
  int perturbation_size = 0;         // 0 = default 2 + floor(sqrt(n/10))
  std::int64_t iteration_budget = -1;  // steps per chain; negative = default 200*n
  std::uint64_t seed = 1;
  int sync_interval = 100;           // steps between elitism synchronizations
  double temperature_floor = 1e-9;
  int threads = 0;                   // 0 = hardware concurrency

  void validate() const;
};

struct SearchResult {
  JobSequence best_sequence;
  Int best_penalty = 0;
  std::vector<std::vector<Int>> best_schedule;  // per-machine completion times
  std::vector<std::vector<Int>> history;        // per-chain best penalty at each sync point
  double wall_time_seconds = 0.0;
};

// Default perturbation size 2 + floor(sqrt(n/10)).
int default_perturbation_size(int n);

// Population standard deviation of the energies times the multiplier;
// degenerate (zero variance) samples fall back to a floor temperature of 1.
double initial_temperature_from_energies(std::span<const Int> energies, double multiplier);

// Samples `sample_count` uniform random sequences, scores each exactly and
// derives the starting temperature from their spread.
double estimate_initial_temperature(const Instance& instance, const SAConfig& config, Rng& rng);

// Picks k distinct positions uniformly and applies a uniform random
// permutation to the jobs at those positions. k is clamped to n.
JobSequence perturb(const JobSequence& sequence, int k, Rng& rng);

// Runs the full ensemble search. Deterministic for fixed (instance, config,
// seed) and independent of how chains are scheduled onto threads.
SearchResult anneal(const Instance& instance, const SAConfig& config);

}  // namespace cdd
