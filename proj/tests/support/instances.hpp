#pragma once

// Shared fixtures and test-only reference implementations. Nothing here calls
// into the dispatch or search code it is used to check.

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "edgesched/jobs.hpp"

namespace edgesched::testing {

inline Job make_job(std::string id, TimeUnits release, std::int64_t weight, MachineCost cloud, MachineCost edge,
                    TimeUnits device_processing) {
  Job j;
  j.id = std::move(id);
  j.release = release;
  j.weight = weight;
  j.on(Tier::Cloud) = cloud;
  j.on(Tier::Edge) = edge;
  j.on(Tier::Device) = {device_processing, 0};
  return j;
}

// Ten-job ICU instance: release, weight, cloud (I, D), edge (I, D), device I.
inline std::vector<Job> icu_jobs() {
  return {
      make_job("J1", 1, 2, {6, 56}, {9, 11}, 14),   make_job("J2", 1, 2, {3, 32}, {3, 6}, 12),
      make_job("J3", 3, 1, {4, 12}, {6, 2}, 49),    make_job("J4", 5, 1, {7, 23}, {11, 5}, 69),
      make_job("J5", 10, 2, {4, 27}, {5, 5}, 11),   make_job("J6", 20, 2, {5, 70}, {5, 14}, 22),
      make_job("J7", 21, 2, {5, 70}, {5, 14}, 22),  make_job("J8", 21, 1, {4, 12}, {6, 2}, 49),
      make_job("J9", 22, 1, {4, 12}, {6, 2}, 49),   make_job("J10", 25, 1, {7, 23}, {11, 5}, 69),
  };
}

struct RandomInstanceParams {
  int min_jobs = 1;
  int max_jobs = 6;
  TimeUnits max_cost = 100;
  TimeUnits max_release = 30;
  std::int64_t max_weight = 2;
};

inline std::vector<Job> random_jobs(std::mt19937_64& rng, const RandomInstanceParams& p = {}) {
  std::uniform_int_distribution<int> count(p.min_jobs, p.max_jobs);
  std::uniform_int_distribution<TimeUnits> cost(1, p.max_cost);
  std::uniform_int_distribution<TimeUnits> release(0, p.max_release);
  std::uniform_int_distribution<std::int64_t> weight(1, p.max_weight);
  std::vector<Job> jobs;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const TimeUnits r = release(rng);
    const std::int64_t w = weight(rng);
    const TimeUnits ci = cost(rng), cd = cost(rng), ei = cost(rng), ed = cost(rng), di = cost(rng);
    jobs.push_back(make_job("R" + std::to_string(i), r, w, {ci, cd}, {ei, ed}, di));
  }
  return jobs;
}

struct RefTimes {
  TimeUnits start, end;
};

/// Unit-step reference: at every tick each idle shared machine starts the
/// ready, unstarted job with the smallest (ready, release, index) key.
inline std::vector<RefTimes> reference_dispatch(const std::vector<Tier>& assignment, const std::vector<Job>& jobs) {
  const std::size_t n = jobs.size();
  std::vector<RefTimes> out(n, {-1, -1});
  std::vector<bool> started(n, false);
  std::size_t remaining = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i] == Tier::Device) {
      out[i] = {jobs[i].release, jobs[i].release + jobs[i].on(Tier::Device).processing};
      started[i] = true;
    } else {
      ++remaining;
    }
  }
  TimeUnits busy_until[2] = {0, 0};
  for (TimeUnits t = 0; remaining > 0; ++t) {
    for (Tier m : {Tier::Cloud, Tier::Edge}) {
      auto& busy = busy_until[static_cast<int>(m)];
      if (busy > t) continue;
      std::size_t pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (started[i] || assignment[i] != m) continue;
        const TimeUnits ready = jobs[i].release + jobs[i].on(m).transmission;
        if (ready > t) continue;
        if (pick == n || std::tuple(ready, jobs[i].release, i) <
                             std::tuple(jobs[pick].release + jobs[pick].on(m).transmission, jobs[pick].release, pick))
          pick = i;
      }
      if (pick == n) continue;
      started[pick] = true;
      --remaining;
      out[pick] = {t, t + jobs[pick].on(m).processing};
      busy = out[pick].end;
    }
  }
  return out;
}

inline TimeUnits reference_objective(const std::vector<Tier>& assignment, const std::vector<Job>& jobs, bool weighted) {
  const auto times = reference_dispatch(assignment, jobs);
  TimeUnits total = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i)
    total += (weighted ? jobs[i].weight : 1) * (times[i].end - jobs[i].release);
  return total;
}

/// Straightforward recursive enumeration of every assignment.
inline TimeUnits reference_optimum(const std::vector<Job>& jobs, bool weighted) {
  std::vector<Tier> a(jobs.size(), Tier::Cloud);
  TimeUnits best = -1;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == jobs.size()) {
      const auto v = reference_objective(a, jobs, weighted);
      if (best < 0 || v < best) best = v;
      return;
    }
    for (Tier t : {Tier::Cloud, Tier::Edge, Tier::Device}) {
      a[i] = t;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace edgesched::testing
