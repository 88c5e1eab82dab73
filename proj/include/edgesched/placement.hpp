#pragma once

#include <limits>
#include <string>

#include "edgesched/latency.hpp"

namespace edgesched {

struct PlacementDecision {
  std::string workload_id;
  Tier chosen_tier = Tier::Device;
  LatencyEstimate estimate;
  double t_min = 0;
};

// Argmin over tiers of the estimated response time. Ties go to the tier
// closest to the data (device, then edge, then cloud).
inline PlacementDecision choose_layer(const WorkloadSpec& w, const Topology& topo, const CalibrationConstants& calib) {
  PlacementDecision d;
  d.workload_id = w.id;
  d.estimate = estimate(w, topo, calib);
  d.t_min = std::numeric_limits<double>::infinity();
  for (Tier t : kTiersLocalFirst) {
    const double total = d.estimate.total(t);
    if (total < d.t_min) {
      d.t_min = total;
      d.chosen_tier = t;
    }
  }
  return d;
}

}  // namespace edgesched
