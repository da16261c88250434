#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace stable_core {

/// Two-sided 95% normal quantile used for every interval here.
inline constexpr double kWilsonZ95 = 1.959963984540054;

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for `successes` out of `trials` (trials > 0).
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = kWilsonZ95);

/// The engine for one trial, seeded from (seed, trial) alone so that a trial
/// draws the same numbers however the trials are scheduled.
std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial);

struct UniquenessEstimate {
  int n = 0;
  int extra_firms = 0;
  std::size_t trials = 0;
  std::size_t unique_count = 0;
  double fraction = 0.0;
  Interval ci;
  std::uint64_t seed = 0;
};

/// Decides uniqueness for an n-worker, (n + extra_firms)-firm market with
/// uniformly random complete lists by running deferred acceptance from both
/// sides. extra_firms = 0 draws the same distribution as random_instance.
bool sample_unique_market(int n, int extra_firms, std::mt19937_64& rng);

/// Monte Carlo share of markets with a single stable matching. Throws
/// std::invalid_argument unless n >= 1, trials >= 1 and extra_firms is 0 or 1.
/// Identical output for identical arguments regardless of thread count.
UniquenessEstimate uniqueness_fraction(int n, int extra_firms, std::size_t trials,
                                       std::uint64_t seed);

/// Exact share over every balanced instance of size n (n <= 3). `trials` is
/// the instance count and `seed` is zero.
UniquenessEstimate uniqueness_census(int n);

/// Normal-form size of one instance.
struct NormalFormSample {
  std::size_t trial = 0;
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  int rounds = 0;
  bool unique = false;
};

/// One sample per trial, instance drawn with trial_engine(seed, trial).
std::vector<NormalFormSample> sample_normal_forms(int n, std::size_t trials, std::uint64_t seed);

struct NormalFormStats {
  int n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_vertices = 0.0;
  double mean_rounds = 0.0;
  std::size_t min_vertices = 0;
  std::size_t max_vertices = 0;
  int min_rounds = 0;
  int max_rounds = 0;
  /// Surviving vertex count -> number of instances.
  std::map<std::size_t, std::size_t> vertex_histogram;
};

NormalFormStats summarize(int n, std::uint64_t seed, const std::vector<NormalFormSample>& samples);
NormalFormStats normal_form_size_stats(int n, std::size_t trials, std::uint64_t seed);
/// Same summary over every instance of size n (n <= 3), seed zero.
NormalFormStats normal_form_size_census(int n);

// CSV rendering. Headers carry no trailing newline; rows do.
std::string uniqueness_csv_header();
std::string to_csv_row(const UniquenessEstimate& e);
std::string sample_csv_header();
std::string to_csv_row(const NormalFormSample& s);
std::string stats_csv_header();
std::string to_csv_row(const NormalFormStats& s);

}  // namespace stable_core
