#include "stable_core/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "stable_core/detail/proposal.hpp"
#include "stable_core/instance.hpp"
#include "stable_core/parallel.hpp"
#include "stable_core/reduction.hpp"

namespace stable_core {

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson interval needs at least one trial");
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double centre = (p + z2 / (2.0 * t)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  return std::mt19937_64(seq);
}

namespace {

std::vector<int> shuffled(int size, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Row-major rank table for lists over `width` ids.
std::vector<int> ranks_of(const std::vector<std::vector<int>>& lists, int width) {
  std::vector<int> out(lists.size() * static_cast<std::size_t>(width));
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (std::size_t r = 0; r < lists[i].size(); ++r) {
      out[i * static_cast<std::size_t>(width) + static_cast<std::size_t>(lists[i][r])] =
          static_cast<int>(r);
    }
  }
  return out;
}

void check_arguments(int n, int extra_firms, std::size_t trials) {
  if (n < 1) throw std::invalid_argument("market size must be at least 1");
  if (extra_firms != 0 && extra_firms != 1) {
    throw std::invalid_argument("extra_firms must be 0 or 1");
  }
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
}

UniquenessEstimate make_estimate(int n, int extra_firms, std::size_t trials,
                                 std::size_t unique_count, std::uint64_t seed) {
  UniquenessEstimate e;
  e.n = n;
  e.extra_firms = extra_firms;
  e.trials = trials;
  e.unique_count = unique_count;
  e.fraction = static_cast<double>(unique_count) / static_cast<double>(trials);
  e.ci = wilson_interval(unique_count, trials);
  e.seed = seed;
  return e;
}

}  // namespace

bool sample_unique_market(int n, int extra_firms, std::mt19937_64& rng) {
  const int m = n + extra_firms;
  // Same draw order as random_instance: all worker lists, then all firm lists.
  std::vector<std::vector<int>> workers, firms;
  for (int w = 0; w < n; ++w) workers.push_back(shuffled(m, rng));
  for (int f = 0; f < m; ++f) firms.push_back(shuffled(n, rng));
  const auto worker_rank = ranks_of(workers, m);
  const auto firm_rank = ranks_of(firms, n);

  const auto by_workers = detail::run_proposals(
      n, m, [&](int w) -> const std::vector<int>& { return workers[static_cast<std::size_t>(w)]; },
      [&](int f, int w) { return firm_rank[static_cast<std::size_t>(f * n + w)]; });
  const auto by_firms = detail::run_proposals(
      m, n, [&](int f) -> const std::vector<int>& { return firms[static_cast<std::size_t>(f)]; },
      [&](int w, int f) { return worker_rank[static_cast<std::size_t>(w * m + f)]; });

  // Every worker ends up matched on both runs; compare from the worker side.
  std::vector<int> worker_partner(static_cast<std::size_t>(n), -1);
  for (int f = 0; f < m; ++f) {
    const int w = by_firms.proposer_match[static_cast<std::size_t>(f)];
    if (w != -1) worker_partner[static_cast<std::size_t>(w)] = f;
  }
  return worker_partner == by_workers.proposer_match;
}

UniquenessEstimate uniqueness_fraction(int n, int extra_firms, std::size_t trials,
                                       std::uint64_t seed) {
  check_arguments(n, extra_firms, trials);
  std::vector<unsigned char> unique(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    auto rng = trial_engine(seed, t);
    unique[t] = sample_unique_market(n, extra_firms, rng) ? 1 : 0;
  });
  const auto count = static_cast<std::size_t>(std::count(unique.begin(), unique.end(), 1));
  return make_estimate(n, extra_firms, trials, count, seed);
}

UniquenessEstimate uniqueness_census(int n) {
  std::size_t total = 0, unique = 0;
  for_each_instance(n, [&](const Instance& inst) {
    ++total;
    if (uniqueness_report(inst).unique()) ++unique;
  });
  return make_estimate(n, 0, total, unique, 0);
}

namespace {

NormalFormSample sample_of(const Instance& inst, std::size_t trial) {
  const auto nf = normal_form(inst);
  NormalFormSample s;
  s.trial = trial;
  s.vertices = nf.digraph.alive_count();
  s.arcs = nf.digraph.arc_count();
  s.rounds = nf.rounds;
  s.unique = s.arcs == 0;
  return s;
}

}  // namespace

std::vector<NormalFormSample> sample_normal_forms(int n, std::size_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("market size must be at least 1");
  std::vector<NormalFormSample> out(trials);
  parallel_for(trials, [&](std::size_t t) {
    auto rng = trial_engine(seed, t);
    out[t] = sample_of(random_instance(n, rng), t);
  });
  return out;
}

NormalFormStats summarize(int n, std::uint64_t seed, const std::vector<NormalFormSample>& samples) {
  NormalFormStats s;
  s.n = n;
  s.trials = samples.size();
  s.seed = seed;
  if (samples.empty()) return s;
  s.min_vertices = s.max_vertices = samples.front().vertices;
  s.min_rounds = s.max_rounds = samples.front().rounds;
  double vertices = 0.0, rounds = 0.0;
  for (const auto& x : samples) {
    vertices += static_cast<double>(x.vertices);
    rounds += x.rounds;
    s.min_vertices = std::min(s.min_vertices, x.vertices);
    s.max_vertices = std::max(s.max_vertices, x.vertices);
    s.min_rounds = std::min(s.min_rounds, x.rounds);
    s.max_rounds = std::max(s.max_rounds, x.rounds);
    ++s.vertex_histogram[x.vertices];
  }
  s.mean_vertices = vertices / static_cast<double>(samples.size());
  s.mean_rounds = rounds / static_cast<double>(samples.size());
  return s;
}

NormalFormStats normal_form_size_stats(int n, std::size_t trials, std::uint64_t seed) {
  return summarize(n, seed, sample_normal_forms(n, trials, seed));
}

NormalFormStats normal_form_size_census(int n) {
  std::vector<NormalFormSample> samples;
  for_each_instance(n, [&](const Instance& inst) { samples.push_back(sample_of(inst, samples.size())); });
  return summarize(n, 0, samples);
}

std::string uniqueness_csv_header() {
  return "n,extra_firms,trials,unique_count,fraction,ci_low,ci_high,seed";
}

std::string to_csv_row(const UniquenessEstimate& e) {
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed;
  os << e.n << ',' << e.extra_firms << ',' << e.trials << ',' << e.unique_count << ','
     << e.fraction << ',' << e.ci.low << ',' << e.ci.high << ',' << e.seed << '\n';
  return os.str();
}

std::string sample_csv_header() { return "trial,vertices,arcs,rounds,unique"; }

std::string to_csv_row(const NormalFormSample& s) {
  std::ostringstream os;
  os << s.trial << ',' << s.vertices << ',' << s.arcs << ',' << s.rounds << ','
     << (s.unique ? 1 : 0) << '\n';
  return os.str();
}

std::string stats_csv_header() {
  return "n,trials,mean_vertices,min_vertices,max_vertices,mean_rounds,min_rounds,max_rounds,seed";
}

std::string to_csv_row(const NormalFormStats& s) {
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed;
  os << s.n << ',' << s.trials << ',' << s.mean_vertices << ',' << s.min_vertices << ','
     << s.max_vertices << ',' << s.mean_rounds << ',' << s.min_rounds << ',' << s.max_rounds
     << ',' << s.seed << '\n';
  return os.str();
}

}  // namespace stable_core
