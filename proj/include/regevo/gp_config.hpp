#pragma once

#include <cstdint>

namespace regevo {

struct GpConfig {
  std::uint32_t population_size = 50;
  double crossover_speed = 2.0;  // a_c
  double mutation_speed = 3.0;   // a_m
  double f_beta = 1.0;
  std::uint32_t insertion_period = 500;
  std::uint32_t stall_window = 100;
  std::uint32_t max_generations = 5000;
  std::uint32_t init_gap_min = 1;  // initial AD gap_max drawn from [init_gap_min, init_gap_max]
  std::uint32_t init_gap_max = 10;
  std::uint64_t rng_seed = 0;
  std::uint32_t threads = 1;  // fitness evaluation workers

  // Throws UsageError on out-of-range values.
  void validate() const;
};

}  // namespace regevo
