#pragma once

// Single-workload response time: transmission + processing on each tier.
//
// Two cost sources are supported. Physical mode derives the per-unit
// transmission cost from the topology links and processing from s*comp/FLOPS.
// Calibrated mode uses per-application constants fitted from one measured
// anchor; when an override exists for the workload's application it wins.
// lambda1 / lambda2 scale transmission / processing in both modes.

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "edgesched/model.hpp"

namespace edgesched {

/// Per-application unit costs, in time units per data-size unit.
struct AppCalibration {
  double unit_proc_device = 0;
  double unit_tx_edge = 0;
  double unit_tx_cloud = 0;

  void validate(const std::string& app) const {
    if (!(unit_proc_device > 0) || !(unit_tx_edge > 0) || !(unit_tx_cloud > 0))
      throw std::invalid_argument("calibration for '" + app + "': unit constants must be positive");
  }

  friend bool operator==(const AppCalibration&, const AppCalibration&) = default;
};

struct CalibrationConstants {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  std::map<std::string, AppCalibration> per_app_overrides;

  void validate() const {
    if (!(lambda1 > 0)) throw std::invalid_argument("calibration: lambda1 must be positive");
    if (!(lambda2 > 0)) throw std::invalid_argument("calibration: lambda2 must be positive");
    for (const auto& [app, c] : per_app_overrides) c.validate(app);
  }

  const AppCalibration* override_for(const std::string& app) const {
    auto it = per_app_overrides.find(app);
    return it == per_app_overrides.end() ? nullptr : &it->second;
  }

  friend bool operator==(const CalibrationConstants&, const CalibrationConstants&) = default;
};

struct TierLatency {
  double transmission = 0;  // D_i
  double processing = 0;    // I_i
  double total() const { return transmission + processing; }
};

struct LatencyEstimate {
  std::array<TierLatency, 3> tiers{};  // indexed by index_of(Tier)

  const TierLatency& at(Tier t) const { return tiers[index_of(t)]; }
  TierLatency& at(Tier t) { return tiers[index_of(t)]; }
  double total(Tier t) const { return at(t).total(); }
};

inline double transmission_time(const WorkloadSpec& w, Tier tier, const Topology& topo,
                                const CalibrationConstants& calib) {
  if (w.data_size_units <= 0) throw std::invalid_argument("workload " + w.id + ": s must be positive");
  if (tier == Tier::Device) return 0.0;
  const double s = static_cast<double>(w.data_size_units);
  if (const auto* o = calib.override_for(w.application)) {
    const double unit = tier == Tier::Edge ? o->unit_tx_edge : o->unit_tx_cloud;
    return calib.lambda1 * s * unit;
  }
  const auto& link = topo.link_to(tier);
  if (!link)
    throw std::invalid_argument("workload " + w.id + ": no calibration for application '" + w.application +
                                "' and no " + std::string(to_string(tier)) + " link in topology");
  const double unit_bytes = static_cast<double>(w.data_size_bytes) / s;
  return calib.lambda1 * s * link->transfer_time(unit_bytes);
}

inline double processing_time(const WorkloadSpec& w, Tier tier, const Topology& topo,
                              const CalibrationConstants& calib) {
  if (w.data_size_units <= 0) throw std::invalid_argument("workload " + w.id + ": s must be positive");
  const double flops = topo.at(tier).flops();
  if (!(flops > 0)) throw std::invalid_argument("processing_time: tier has zero flops");
  const double s = static_cast<double>(w.data_size_units);
  if (const auto* o = calib.override_for(w.application)) {
    return calib.lambda2 * o->unit_proc_device * s * (topo.device.flops() / flops);
  }
  return calib.lambda2 * s * static_cast<double>(w.model_flops) / flops;
}

inline LatencyEstimate estimate(const WorkloadSpec& w, const Topology& topo, const CalibrationConstants& calib) {
  w.validate();
  LatencyEstimate e;
  for (Tier t : kAllTiers) {
    e.at(t).transmission = transmission_time(w, t, topo, calib);
    e.at(t).processing = processing_time(w, t, topo, calib);
  }
  return e;
}

/// Measured response times of one workload run alone on each tier.
struct AnchorMeasurement {
  double device_total = 0;
  double edge_total = 0;
  double cloud_total = 0;
};

/// Fits per-unit constants so that `estimate` reproduces the anchor exactly
/// (with lambda1 = lambda2 = 1). The device run has no transmission, so it
/// fixes the processing cost; the other tiers' processing follows from the
/// FLOPS ratio and the remainder is transmission.
inline AppCalibration calibrate_from_anchor(const std::string& app, std::int64_t s_anchor,
                                            const AnchorMeasurement& measured, const Topology& topo) {
  if (s_anchor <= 0) throw std::invalid_argument("calibrate '" + app + "': anchor size must be positive");
  if (!(measured.device_total > 0) || !(measured.edge_total > 0) || !(measured.cloud_total > 0))
    throw std::invalid_argument("calibrate '" + app + "': measured totals must be positive");
  const double s = static_cast<double>(s_anchor);
  const double dev = topo.device.flops();
  AppCalibration c;
  c.unit_proc_device = measured.device_total / s;
  c.unit_tx_edge = (measured.edge_total - measured.device_total * dev / topo.edge.flops()) / s;
  c.unit_tx_cloud = (measured.cloud_total - measured.device_total * dev / topo.cloud.flops()) / s;
  if (!(c.unit_tx_edge > 0))
    throw std::invalid_argument("calibrate '" + app + "': edge total is not above its scaled processing time");
  if (!(c.unit_tx_cloud > 0))
    throw std::invalid_argument("calibrate '" + app + "': cloud total is not above its scaled processing time");
  return c;
}

/// Half-up rounding to the integer time units the scheduler works in.
inline std::int64_t to_time_units(double t) {
  if (!(t >= 0) || !std::isfinite(t)) throw std::invalid_argument("to_time_units: negative or non-finite time");
  return static_cast<std::int64_t>(std::floor(t + 0.5));
}

}  // namespace edgesched
