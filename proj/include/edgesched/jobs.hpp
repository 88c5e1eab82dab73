#pragma once

// Multi-job problem instance: jobs with release times and priority weights,
// integer per-machine costs, and the schedule/metric types shared by the
// simulator and the search.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgesched/model.hpp"

namespace edgesched {

using TimeUnits = std::int64_t;

struct MachineCost {
  TimeUnits processing = 1;    // I_ij
  TimeUnits transmission = 0;  // D_ij

  TimeUnits total() const { return processing + transmission; }
  friend bool operator==(const MachineCost&, const MachineCost&) = default;
};

struct Job {
  std::string id;
  TimeUnits release = 0;      // R_i
  std::int64_t weight = 1;    // w_i
  std::array<MachineCost, 3> cost{};  // indexed by index_of(Tier)

  const MachineCost& on(Tier t) const { return cost[index_of(t)]; }
  MachineCost& on(Tier t) { return cost[index_of(t)]; }
  TimeUnits ready_on(Tier t) const { return release + on(t).transmission; }

  void validate() const {
    if (id.empty()) throw std::invalid_argument("job: empty id");
    if (release < 0) throw std::invalid_argument("job " + id + ": release must be >= 0");
    if (weight < 1) throw std::invalid_argument("job " + id + ": weight must be >= 1");
    for (Tier t : kAllTiers) {
      if (on(t).processing < 1)
        throw std::invalid_argument("job " + id + ": " + std::string(to_string(t)) + " processing must be >= 1");
      if (on(t).transmission < 0)
        throw std::invalid_argument("job " + id + ": " + std::string(to_string(t)) + " transmission must be >= 0");
    }
    if (on(Tier::Device).transmission != 0)
      throw std::invalid_argument("job " + id + ": device transmission must be 0");
  }

  friend bool operator==(const Job&, const Job&) = default;
};

inline void validate_jobs(std::span<const Job> jobs) {
  for (const auto& j : jobs) j.validate();
}

/// Machine class per job, indexed like the job list. Tier::Device means the
/// job's own end device; cloud and edge are single shared machines.
using Assignment = std::vector<Tier>;

inline Assignment uniform_assignment(std::size_t n, Tier t) { return Assignment(n, t); }

struct ScheduledJob {
  std::size_t job = 0;  // index into the job list
  Tier machine = Tier::Device;
  TimeUnits tx_start = 0;
  TimeUnits tx_end = 0;
  TimeUnits start = 0;  // S_i
  TimeUnits end = 0;    // E_i

  friend bool operator==(const ScheduledJob&, const ScheduledJob&) = default;
};

struct Schedule {
  std::vector<ScheduledJob> entries;  // one per job, in job-index order when produced by simulate()

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class ObjectiveMode { Weighted, Unweighted };

inline std::string_view to_string(ObjectiveMode m) {
  return m == ObjectiveMode::Weighted ? "weighted" : "unweighted";
}

inline ObjectiveMode parse_objective_mode(std::string_view s) {
  if (s == "weighted") return ObjectiveMode::Weighted;
  if (s == "unweighted") return ObjectiveMode::Unweighted;
  throw std::invalid_argument("unknown objective mode '" + std::string(s) + "'");
}

struct ScheduleMetrics {
  TimeUnits weighted_total = 0;    // sum w_i (E_i - R_i)
  TimeUnits unweighted_total = 0;  // sum (E_i - R_i)
  TimeUnits last_completion = 0;   // max E_i

  TimeUnits value(ObjectiveMode m) const {
    return m == ObjectiveMode::Weighted ? weighted_total : unweighted_total;
  }

  friend bool operator==(const ScheduleMetrics&, const ScheduleMetrics&) = default;
};

inline ScheduleMetrics objective(const Schedule& schedule, std::span<const Job> jobs) {
  std::vector<const ScheduledJob*> by_job(jobs.size(), nullptr);
  for (const auto& e : schedule.entries) {
    if (e.job >= jobs.size()) throw std::invalid_argument("objective: schedule references unknown job index");
    if (by_job[e.job]) throw std::invalid_argument("objective: job " + jobs[e.job].id + " scheduled twice");
    by_job[e.job] = &e;
  }
  ScheduleMetrics m;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!by_job[i]) throw std::invalid_argument("objective: schedule is missing job " + jobs[i].id);
    const TimeUnits response = by_job[i]->end - jobs[i].release;
    m.unweighted_total += response;
    m.weighted_total += jobs[i].weight * response;
    m.last_completion = std::max(m.last_completion, by_job[i]->end);
  }
  return m;
}

struct LowerBound {
  TimeUnits weighted = 0;    // sum_i min_j w_i (I_ij + D_ij)
  TimeUnits unweighted = 0;  // sum_i min_j (I_ij + D_ij)
};

/// Contention-free bound: every job gets its fastest machine to itself.
inline LowerBound lower_bound(std::span<const Job> jobs) {
  if (jobs.empty()) throw std::invalid_argument("lower_bound: empty job list");
  LowerBound lb;
  for (const auto& j : jobs) {
    TimeUnits best = std::numeric_limits<TimeUnits>::max();
    for (Tier t : kAllTiers) best = std::min(best, j.on(t).total());
    lb.unweighted += best;
    lb.weighted += j.weight * best;
  }
  return lb;
}

}  // namespace edgesched
