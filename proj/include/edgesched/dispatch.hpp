#pragma once

// Deterministic discrete-event dispatch of an assignment onto machines, and
// feasibility checking of arbitrary schedules.
//
// Semantics:
//   * transmissions start at release and run in parallel (links are not
//     contended);
//   * cloud and edge each process one job at a time, non-preemptively, taking
//     jobs in (ready time, release, job index) order;
//   * every device-assigned job runs on its own end device starting at release.

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "edgesched/jobs.hpp"

namespace edgesched {

struct DispatchPolicy {
  enum class QueueOrder { FifoByReady };
  QueueOrder queue_order = QueueOrder::FifoByReady;
};

namespace detail {

/// Dispatches only the jobs listed in `active`; returns their entries sorted
/// by job index. Assignment entries of inactive jobs are ignored.
inline std::vector<ScheduledJob> dispatch(const Assignment& assignment, std::span<const Job> jobs,
                                          std::span<const std::size_t> active, const DispatchPolicy&) {
  std::vector<ScheduledJob> out;
  out.reserve(active.size());
  std::array<std::vector<std::size_t>, 2> queues;  // cloud, edge
  for (std::size_t i : active) {
    const Tier m = assignment.at(i);
    if (m == Tier::Device) {
      const auto& j = jobs[i];
      out.push_back({i, m, j.release, j.release, j.release, j.release + j.on(m).processing});
    } else {
      queues[index_of(m)].push_back(i);
    }
  }
  for (Tier m : {Tier::Cloud, Tier::Edge}) {
    auto& q = queues[index_of(m)];
    std::sort(q.begin(), q.end(), [&](std::size_t a, std::size_t b) {
      return std::tuple(jobs[a].ready_on(m), jobs[a].release, a) < std::tuple(jobs[b].ready_on(m), jobs[b].release, b);
    });
    TimeUnits free_at = 0;
    for (std::size_t i : q) {
      const auto& j = jobs[i];
      const TimeUnits start = std::max(free_at, j.ready_on(m));
      const TimeUnits end = start + j.on(m).processing;
      out.push_back({i, m, j.release, j.ready_on(m), start, end});
      free_at = end;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.job < b.job; });
  return out;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

}  // namespace detail

inline Schedule simulate(const Assignment& assignment, std::span<const Job> jobs, const DispatchPolicy& policy = {}) {
  if (assignment.size() != jobs.size())
    throw std::invalid_argument("simulate: assignment size does not match job count");
  const auto idx = detail::all_indices(jobs.size());
  return Schedule{detail::dispatch(assignment, jobs, idx, policy)};
}

inline ScheduleMetrics evaluate(const Assignment& assignment, std::span<const Job> jobs,
                                const DispatchPolicy& policy = {}) {
  return objective(simulate(assignment, jobs, policy), jobs);
}

// ---------------------------------------------------------------------------
// Feasibility

enum class Constraint {
  Coverage,          // every job scheduled exactly once
  MutualExclusion,   // C1
  NoPreemption,      // C2
  Integrality,       // C3
  DataBeforeStart,   // C4
};

inline std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::Coverage: return "coverage";
    case Constraint::MutualExclusion: return "C1";
    case Constraint::NoPreemption: return "C2";
    case Constraint::Integrality: return "C3";
    case Constraint::DataBeforeStart: return "C4";
  }
  return "?";
}

struct Violation {
  Constraint constraint;
  std::vector<std::size_t> jobs;
  std::string detail;
};

inline std::vector<Violation> validate(const Schedule& schedule, std::span<const Job> jobs) {
  std::vector<Violation> out;
  std::vector<int> seen(jobs.size(), 0);
  std::array<std::vector<const ScheduledJob*>, 2> shared;

  for (const auto& e : schedule.entries) {
    if (e.job >= jobs.size()) {
      out.push_back({Constraint::Coverage, {e.job}, "unknown job index"});
      continue;
    }
    if (seen[e.job]++ == 1) out.push_back({Constraint::Coverage, {e.job}, jobs[e.job].id + " scheduled twice"});
    const Job& j = jobs[e.job];
    const MachineCost& c = j.on(e.machine);

    if (e.start < 0 || e.tx_start < 0 || e.end - e.start < 1)
      out.push_back({Constraint::Integrality, {e.job}, j.id + ": times must be non-negative with non-zero duration"});
    if (e.end - e.start != c.processing)
      out.push_back({Constraint::NoPreemption, {e.job},
                     j.id + ": processing window " + std::to_string(e.end - e.start) + " != " +
                         std::to_string(c.processing)});
    if (e.tx_start != j.release || e.tx_end != j.release + c.transmission)
      out.push_back({Constraint::DataBeforeStart, {e.job}, j.id + ": transmission window does not match job"});
    if (e.start < j.release + c.transmission)
      out.push_back({Constraint::DataBeforeStart, {e.job},
                     j.id + ": starts at " + std::to_string(e.start) + " before data arrives at " +
                         std::to_string(j.release + c.transmission)});
    if (e.machine != Tier::Device) shared[index_of(e.machine)].push_back(&e);
  }
  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (seen[i] == 0) out.push_back({Constraint::Coverage, {i}, jobs[i].id + " not scheduled"});

  for (Tier m : {Tier::Cloud, Tier::Edge}) {
    auto& v = shared[index_of(m)];
    std::sort(v.begin(), v.end(), [](const auto* a, const auto* b) { return a->start < b->start; });
    for (std::size_t k = 1; k < v.size(); ++k) {
      // compare against every earlier interval still open, not just the previous one
      for (std::size_t p = 0; p < k; ++p) {
        if (v[p]->end > v[k]->start)
          out.push_back({Constraint::MutualExclusion, {v[p]->job, v[k]->job},
                         jobs[v[p]->job].id + " and " + jobs[v[k]->job].id + " overlap on " +
                             std::string(to_string(m))});
      }
    }
  }
  return out;
}

}  // namespace edgesched
