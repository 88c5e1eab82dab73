#pragma once

// Multi-job allocation: greedy initial assignment in release order followed by
// a tabu-guarded single-job move search; fixed-strategy baselines; and an
// exhaustive oracle for small instances.

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <span>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "edgesched/dispatch.hpp"

namespace edgesched {

struct SearchConfig {
  int max_iterations = 100;  // passes over the job set
  ObjectiveMode objective_mode = ObjectiveMode::Weighted;
  std::uint64_t seed = 0;  // unused; the search is deterministic

  void validate() const {
    if (max_iterations < 1) throw std::invalid_argument("SearchConfig: max_iterations must be >= 1");
  }
};

struct Move {
  std::size_t job;
  Tier machine;
  TimeUnits improvement;
};

struct SearchPass {
  std::vector<std::size_t> examined;  // jobs in the order they were picked
  std::vector<Move> evaluated;
  int committed = 0;
};

struct SearchResult {
  Assignment assignment;
  ScheduleMetrics metrics;
  std::vector<SearchPass> passes;
};

/// Jobs in release order each take the machine that completes them earliest
/// given the jobs already placed.
inline Assignment greedy_initial(std::span<const Job> jobs, const DispatchPolicy& policy = {}) {
  if (jobs.empty()) throw std::invalid_argument("greedy_initial: empty job list");
  std::vector<std::size_t> order = detail::all_indices(jobs.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return jobs[a].release < jobs[b].release; });

  Assignment assignment(jobs.size(), Tier::Device);
  std::vector<std::size_t> placed;
  placed.reserve(jobs.size());
  for (std::size_t k : order) {
    placed.push_back(k);
    TimeUnits best_end = std::numeric_limits<TimeUnits>::max();
    Tier best = Tier::Device;
    for (Tier m : kTiersLocalFirst) {
      assignment[k] = m;
      const auto entries = detail::dispatch(assignment, jobs, placed, policy);
      const auto it = std::find_if(entries.begin(), entries.end(), [k](const auto& e) { return e.job == k; });
      if (it->end < best_end) {
        best_end = it->end;
        best = m;
      }
    }
    assignment[k] = best;
  }
  return assignment;
}

/// Each pass visits every job once, earliest completion first (completion
/// under the current assignment), and moves it to the alternative machine with
/// the largest strictly positive objective reduction. A visited job is tabu
/// for the rest of the pass. Stops after max_iterations passes or after a pass
/// that commits nothing.
inline SearchResult neighborhood_search(const Assignment& initial, std::span<const Job> jobs,
                                        const SearchConfig& config, const DispatchPolicy& policy = {}) {
  config.validate();
  if (initial.size() != jobs.size()) throw std::invalid_argument("neighborhood_search: assignment size mismatch");

  SearchResult r;
  r.assignment = initial;
  r.metrics = evaluate(r.assignment, jobs, policy);
  const auto mode = config.objective_mode;

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    SearchPass pass;
    std::vector<bool> tabu_job(jobs.size(), false);
    for (std::size_t step = 0; step < jobs.size(); ++step) {
      const Schedule current = simulate(r.assignment, jobs, policy);
      std::size_t k = jobs.size();
      for (const auto& e : current.entries) {
        if (tabu_job[e.job]) continue;
        if (k == jobs.size() || e.end < current.entries[k].end) k = e.job;
      }
      tabu_job[k] = true;
      pass.examined.push_back(k);

      const TimeUnits base = r.metrics.value(mode);
      TimeUnits best_gain = 0;
      Tier best_machine = r.assignment[k];
      ScheduleMetrics best_metrics = r.metrics;
      for (Tier m : kTiersLocalFirst) {
        if (m == r.assignment[k]) continue;
        Assignment trial = r.assignment;
        trial[k] = m;
        const auto metrics = evaluate(trial, jobs, policy);
        const TimeUnits gain = base - metrics.value(mode);
        pass.evaluated.push_back({k, m, gain});
        if (gain > best_gain) {
          best_gain = gain;
          best_machine = m;
          best_metrics = metrics;
        }
      }
      if (best_gain > 0) {
        r.assignment[k] = best_machine;
        r.metrics = best_metrics;
        ++pass.committed;
      }
    }
    const bool improved = pass.committed > 0;
    r.passes.push_back(std::move(pass));
    if (!improved) break;
  }
  return r;
}

inline SearchResult allocate(std::span<const Job> jobs, const SearchConfig& config, const DispatchPolicy& policy = {}) {
  return neighborhood_search(greedy_initial(jobs, policy), jobs, config, policy);
}

// ---------------------------------------------------------------------------

enum class BaselineStrategy { AllCloud, AllEdge, AllDevice, PerJobOptimal };

inline std::string_view to_string(BaselineStrategy s) {
  switch (s) {
    case BaselineStrategy::AllCloud: return "all_cloud";
    case BaselineStrategy::AllEdge: return "all_edge";
    case BaselineStrategy::AllDevice: return "all_device";
    case BaselineStrategy::PerJobOptimal: return "per_job_optimal";
  }
  return "?";
}

struct StrategyResult {
  Assignment assignment;
  ScheduleMetrics metrics;
};

/// Single-job argmin of I + D, ignoring contention; ties go local-first.
inline Tier single_job_best(const Job& j) {
  Tier best = Tier::Device;
  TimeUnits best_cost = std::numeric_limits<TimeUnits>::max();
  for (Tier m : kTiersLocalFirst) {
    if (j.on(m).total() < best_cost) {
      best_cost = j.on(m).total();
      best = m;
    }
  }
  return best;
}

inline StrategyResult baseline(BaselineStrategy strategy, std::span<const Job> jobs, const DispatchPolicy& policy = {}) {
  Assignment a;
  switch (strategy) {
    case BaselineStrategy::AllCloud: a = uniform_assignment(jobs.size(), Tier::Cloud); break;
    case BaselineStrategy::AllEdge: a = uniform_assignment(jobs.size(), Tier::Edge); break;
    case BaselineStrategy::AllDevice: a = uniform_assignment(jobs.size(), Tier::Device); break;
    case BaselineStrategy::PerJobOptimal:
      a.reserve(jobs.size());
      for (const auto& j : jobs) a.push_back(single_job_best(j));
      break;
  }
  auto metrics = evaluate(a, jobs, policy);
  return {std::move(a), metrics};
}

// ---------------------------------------------------------------------------

inline constexpr std::size_t kBruteForceMaxJobs = 12;

namespace detail {

// Assignment code: base-3 digits with job 0 most significant, digit = tier
// index. Numeric order of codes is lexicographic order of assignments.
inline Assignment decode_assignment(std::uint64_t code, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = n; i-- > 0;) {
    a[i] = static_cast<Tier>(code % 3);
    code /= 3;
  }
  return a;
}

}  // namespace detail

/// Exhaustive minimum over all 3^n assignments. Ties resolve to the
/// lexicographically smallest assignment (cloud < edge < device per job).
inline StrategyResult brute_force(std::span<const Job> jobs, ObjectiveMode mode, const DispatchPolicy& policy = {},
                                  unsigned workers = 0) {
  const std::size_t n = jobs.size();
  if (n == 0) throw std::invalid_argument("brute_force: empty job list");
  if (n > kBruteForceMaxJobs)
    throw std::invalid_argument("brute_force: " + std::to_string(n) + " jobs exceeds the limit of " +
                                std::to_string(kBruteForceMaxJobs));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, (total + 255) / 256));

  using Best = std::tuple<TimeUnits, std::uint64_t>;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Best best{std::numeric_limits<TimeUnits>::max(), 0};
    for (std::uint64_t code = lo; code < hi; ++code) {
      const auto a = detail::decode_assignment(code, n);
      const Best cand{evaluate(a, jobs, policy).value(mode), code};
      if (cand < best) best = cand;
    }
    return best;
  };

  Best best{std::numeric_limits<TimeUnits>::max(), 0};
  if (workers <= 1) {
    best = scan(0, total);
  } else {
    std::vector<std::future<Best>> parts;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t lo = 0; lo < total; lo += chunk)
      parts.push_back(std::async(std::launch::async, scan, lo, std::min(total, lo + chunk)));
    for (auto& f : parts) best = std::min(best, f.get());
  }
  auto a = detail::decode_assignment(std::get<1>(best), n);
  auto metrics = evaluate(a, jobs, policy);
  return {std::move(a), metrics};
}

}  // namespace edgesched
