#pragma once

// Tiers, device capability, network links, model complexity and workloads.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace edgesched {

// Declared in order of compute capability, highest first. Several places
// (brute-force enumeration, report columns) rely on this order.
enum class Tier : std::uint8_t { Cloud = 0, Edge = 1, Device = 2 };

inline constexpr std::array<Tier, 3> kAllTiers{Tier::Cloud, Tier::Edge, Tier::Device};

// Preference order used to break ties: keep data local when costs are equal.
inline constexpr std::array<Tier, 3> kTiersLocalFirst{Tier::Device, Tier::Edge, Tier::Cloud};

constexpr std::size_t index_of(Tier t) { return static_cast<std::size_t>(t); }

constexpr std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::Cloud: return "cloud";
    case Tier::Edge: return "edge";
    case Tier::Device: return "device";
  }
  return "?";
}

inline Tier parse_tier(std::string_view s) {
  if (s == "cloud") return Tier::Cloud;
  if (s == "edge") return Tier::Edge;
  if (s == "device") return Tier::Device;
  throw std::invalid_argument("unknown tier '" + std::string(s) + "'");
}

/// Peak floating-point rate: cores x frequency x operations per cycle.
inline double device_flops(std::int64_t cores, double frequency_hz, std::int64_t ops_per_cycle) {
  if (cores <= 0) throw std::invalid_argument("device_flops: cores must be positive");
  if (!(frequency_hz > 0.0)) throw std::invalid_argument("device_flops: frequency must be positive");
  if (ops_per_cycle <= 0) throw std::invalid_argument("device_flops: ops_per_cycle must be positive");
  return static_cast<double>(cores) * frequency_hz * static_cast<double>(ops_per_cycle);
}

class DeviceSpec {
 public:
  DeviceSpec(std::int64_t cores, double frequency_hz, std::int64_t ops_per_cycle = 16)
      : cores_(cores),
        frequency_(frequency_hz),
        ops_per_cycle_(ops_per_cycle),
        flops_(device_flops(cores, frequency_hz, ops_per_cycle)) {}

  std::int64_t cores() const { return cores_; }
  double frequency() const { return frequency_; }
  std::int64_t ops_per_cycle() const { return ops_per_cycle_; }
  double flops() const { return flops_; }

  friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;

 private:
  std::int64_t cores_;
  double frequency_;
  std::int64_t ops_per_cycle_;
  double flops_;
};

class NetworkLink {
 public:
  // latency in seconds, bandwidth in bytes/second
  NetworkLink(double latency_s, double bandwidth_bps) : latency_(latency_s), bandwidth_(bandwidth_bps) {
    if (!(latency_s >= 0.0)) throw std::invalid_argument("NetworkLink: latency must be >= 0");
    if (!(bandwidth_bps > 0.0)) throw std::invalid_argument("NetworkLink: bandwidth must be > 0");
  }

  double latency() const { return latency_; }
  double bandwidth() const { return bandwidth_; }

  double transfer_time(double bytes) const { return latency_ + bytes / bandwidth_; }

  friend bool operator==(const NetworkLink&, const NetworkLink&) = default;

 private:
  double latency_;
  double bandwidth_;
};

/// One cloud server, one edge server and the end-device class, plus the two
/// links from the end device. Links are optional: scenarios driven purely by
/// calibrated per-application constants do not need them.
struct Topology {
  DeviceSpec cloud;
  DeviceSpec edge;
  DeviceSpec device;
  std::optional<NetworkLink> edge_device_link;
  std::optional<NetworkLink> cloud_device_link;

  const DeviceSpec& at(Tier t) const {
    switch (t) {
      case Tier::Cloud: return cloud;
      case Tier::Edge: return edge;
      case Tier::Device: return device;
    }
    throw std::invalid_argument("Topology::at: bad tier");
  }

  const std::optional<NetworkLink>& link_to(Tier t) const {
    if (t == Tier::Edge) return edge_device_link;
    if (t == Tier::Cloud) return cloud_device_link;
    throw std::invalid_argument("Topology::link_to: the device tier has no link");
  }

  friend bool operator==(const Topology&, const Topology&) = default;
};

/// Ordering problems that leave the model well-defined. Reported, never thrown.
inline std::vector<std::string> topology_warnings(const Topology& topo) {
  std::vector<std::string> out;
  if (topo.cloud.flops() < topo.edge.flops())
    out.emplace_back("cloud flops below edge flops");
  if (topo.edge.flops() < topo.device.flops())
    out.emplace_back("edge flops below device flops");
  // The cloud path runs through the edge, so it must be no faster for any
  // payload: higher-or-equal latency and lower-or-equal bandwidth.
  if (topo.cloud_device_link && topo.edge_device_link) {
    const auto& c = *topo.cloud_device_link;
    const auto& e = *topo.edge_device_link;
    if (c.latency() < e.latency()) out.emplace_back("cloud-device latency below edge-device latency");
    if (c.bandwidth() > e.bandwidth()) out.emplace_back("cloud-device bandwidth above edge-device bandwidth");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model complexity

struct ConvLayer {
  std::int64_t height, width, in_channels, kernel, out_channels;
};

struct FullyConnectedLayer {
  std::int64_t inputs, outputs;
};

using ModelLayerSpec = std::variant<ConvLayer, FullyConnectedLayer>;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r{};
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("FLOPs computation overflows 64 bits");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r{};
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("FLOPs computation overflows 64 bits");
  return r;
}

inline void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string("layer dimension '") + what + "' must be >= 1");
}

}  // namespace detail

/// Conv: 2*H*W*(C_in*K^2 + 1)*C_out.  Fully connected: (2*I - 1)*O.
inline std::int64_t flops_of_layer(const ModelLayerSpec& layer) {
  using detail::checked_add;
  using detail::checked_mul;
  if (const auto* c = std::get_if<ConvLayer>(&layer)) {
    detail::require_positive(c->height, "H");
    detail::require_positive(c->width, "W");
    detail::require_positive(c->in_channels, "C_in");
    detail::require_positive(c->kernel, "K");
    detail::require_positive(c->out_channels, "C_out");
    const auto per_output = checked_add(checked_mul(c->in_channels, checked_mul(c->kernel, c->kernel)), 1);
    auto r = checked_mul(2, checked_mul(c->height, c->width));
    r = checked_mul(r, per_output);
    return checked_mul(r, c->out_channels);
  }
  const auto& fc = std::get<FullyConnectedLayer>(layer);
  detail::require_positive(fc.inputs, "I");
  detail::require_positive(fc.outputs, "O");
  return checked_mul(checked_add(checked_mul(2, fc.inputs), -1), fc.outputs);
}

inline std::int64_t flops_of_model(std::span<const ModelLayerSpec> layers) {
  if (layers.empty()) throw std::invalid_argument("flops_of_model: empty layer list");
  std::int64_t total = 0;
  for (const auto& l : layers) total = detail::checked_add(total, flops_of_layer(l));
  return total;
}

// ---------------------------------------------------------------------------

struct WorkloadSpec {
  std::string id;
  std::string application;
  std::int64_t data_size_units = 0;  // s
  std::int64_t data_size_bytes = 0;
  std::int64_t model_flops = 0;      // comp
  std::int64_t priority_weight = 1;  // w

  void validate() const {
    if (id.empty()) throw std::invalid_argument("workload: empty id");
    if (data_size_units <= 0) throw std::invalid_argument("workload " + id + ": s must be positive");
    if (data_size_bytes <= 0) throw std::invalid_argument("workload " + id + ": data_size_bytes must be positive");
    if (model_flops <= 0) throw std::invalid_argument("workload " + id + ": comp must be positive");
    if (priority_weight < 1) throw std::invalid_argument("workload " + id + ": w must be >= 1");
  }

  friend bool operator==(const WorkloadSpec&, const WorkloadSpec&) = default;
};

}  // namespace edgesched
