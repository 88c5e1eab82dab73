#pragma once

// Scenario files: topology, calibration, workloads, jobs and optional golden
// expectations in one JSON document. See README.md for the schema.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgesched/heuristic.hpp"
#include "edgesched/latency.hpp"
#include "json.hpp"

namespace edgesched {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CalibrationAnchor {
  std::string application;
  std::int64_t s = 0;
  AnchorMeasurement measured;

  friend bool operator==(const CalibrationAnchor& a, const CalibrationAnchor& b) {
    return a.application == b.application && a.s == b.s && a.measured.device_total == b.measured.device_total &&
           a.measured.edge_total == b.measured.edge_total && a.measured.cloud_total == b.measured.cloud_total;
  }
};

/// A value with a tolerance: absolute, relative (fraction of expected), or both
/// (either one suffices).
struct GoldenValue {
  double expected = 0;
  double abs_tol = 0;
  double rel_tol = 0;

  bool matches(double actual) const {
    const double diff = actual > expected ? actual - expected : expected - actual;
    return diff <= abs_tol + 1e-9 || diff <= rel_tol * (expected < 0 ? -expected : expected) + 1e-9;
  }
  friend bool operator==(const GoldenValue&, const GoldenValue&) = default;
};

struct GoldenPlacement {
  std::string workload_id;
  Tier tier = Tier::Device;
  std::array<GoldenValue, 3> totals{};  // indexed by index_of(Tier)
  friend bool operator==(const GoldenPlacement&, const GoldenPlacement&) = default;
};

struct GoldenStrategy {
  std::string strategy;  // all_cloud | all_edge | all_device | per_job_optimal | heuristic
  GoldenValue whole;
  GoldenValue last;
  std::string note;
  friend bool operator==(const GoldenStrategy&, const GoldenStrategy&) = default;
};

struct Golden {
  std::vector<GoldenPlacement> placement;
  std::vector<GoldenStrategy> strategies;
  friend bool operator==(const Golden&, const Golden&) = default;
};

struct Scenario {
  std::string name;
  std::string description;
  Topology topology;
  CalibrationConstants calibration;
  std::vector<CalibrationAnchor> anchors;  // already folded into calibration
  std::vector<WorkloadSpec> workloads;
  std::vector<Job> jobs;
  std::optional<Golden> golden;
  std::vector<std::string> warnings;  // not serialized
};

namespace detail {

using nlohmann::json;

inline std::string join_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

inline std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
  throw ScenarioError(path + ": " + msg);
}

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(join_path(path, key), "missing field");
  return *it;
}

inline double get_number(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number()) fail(join_path(path, key), "expected a number");
  return v.get<double>();
}

inline std::int64_t get_int(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number_integer()) fail(join_path(path, key), "expected an integer");
  return v.get<std::int64_t>();
}

inline std::string get_string(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_string()) fail(join_path(path, key), "expected a string");
  return v.get<std::string>();
}

inline std::int64_t get_positive_int(const json& obj, const std::string& key, const std::string& path) {
  const auto v = get_int(obj, key, path);
  if (v <= 0) fail(join_path(path, key), "must be positive");
  return v;
}

inline DeviceSpec parse_device(const json& j, const std::string& path) {
  const auto cores = get_positive_int(j, "cores", path);
  const double freq = get_number(j, "frequency", path);
  if (!(freq > 0)) fail(join_path(path, "frequency"), "must be positive");
  const auto opc = j.contains("ops_per_cycle") ? get_positive_int(j, "ops_per_cycle", path) : 16;
  return DeviceSpec(cores, freq, opc);
}

inline NetworkLink parse_link(const json& j, const std::string& path) {
  const double latency = get_number(j, "latency", path);
  const double bandwidth = get_number(j, "bandwidth", path);
  if (!(latency >= 0)) fail(join_path(path, "latency"), "must be >= 0");
  if (!(bandwidth > 0)) fail(join_path(path, "bandwidth"), "must be > 0");
  return NetworkLink(latency, bandwidth);
}

inline Topology parse_topology(const json& j, const std::string& path) {
  Topology t{parse_device(require(j, "cloud", path), join_path(path, "cloud")),
             parse_device(require(j, "edge", path), join_path(path, "edge")),
             parse_device(require(j, "device", path), join_path(path, "device")),
             std::nullopt,
             std::nullopt};
  if (j.contains("links")) {
    const auto& links = j["links"];
    const auto lp = join_path(path, "links");
    if (links.contains("edge_device")) t.edge_device_link = parse_link(links["edge_device"], join_path(lp, "edge_device"));
    if (links.contains("cloud_device"))
      t.cloud_device_link = parse_link(links["cloud_device"], join_path(lp, "cloud_device"));
  }
  return t;
}

inline GoldenValue parse_golden_value(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0, 0};
  GoldenValue g;
  g.expected = get_number(j, "expected", path);
  if (j.contains("abs_tol")) g.abs_tol = get_number(j, "abs_tol", path);
  if (j.contains("rel_tol")) g.rel_tol = get_number(j, "rel_tol", path);
  if (g.abs_tol < 0 || g.rel_tol < 0) fail(path, "tolerances must be >= 0");
  return g;
}

inline json golden_value_json(const GoldenValue& g) {
  if (g.abs_tol == 0 && g.rel_tol == 0) return g.expected;
  json j{{"expected", g.expected}};
  if (g.abs_tol != 0) j["abs_tol"] = g.abs_tol;
  if (g.rel_tol != 0) j["rel_tol"] = g.rel_tol;
  return j;
}

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Scenario parse_scenario_json(const json& root) {
  if (!root.is_object()) fail("<root>", "expected an object");
  Scenario sc{root.value("name", ""), root.value("description", ""),
              parse_topology(require(root, "topology", ""), "topology"),
              {}, {}, {}, {}, std::nullopt, {}};
  sc.warnings = topology_warnings(sc.topology);

  if (root.contains("workloads")) {
    const auto& arr = root["workloads"];
    if (!arr.is_array()) fail("workloads", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = index_path("workloads", i);
      WorkloadSpec w;
      w.id = get_string(arr[i], "id", p);
      w.application = get_string(arr[i], "application", p);
      w.data_size_units = get_positive_int(arr[i], "s", p);
      w.data_size_bytes = arr[i].contains("size_bytes") ? get_positive_int(arr[i], "size_bytes", p) : w.data_size_units;
      w.model_flops = get_positive_int(arr[i], "comp", p);
      w.priority_weight = arr[i].contains("w") ? get_positive_int(arr[i], "w", p) : 1;
      for (const auto& other : sc.workloads)
        if (other.id == w.id) fail(join_path(p, "id"), "duplicate workload id '" + w.id + "'");
      sc.workloads.push_back(std::move(w));
    }
  }

  if (root.contains("calibration")) {
    const auto& c = root["calibration"];
    if (c.contains("lambda1")) sc.calibration.lambda1 = get_number(c, "lambda1", "calibration");
    if (c.contains("lambda2")) sc.calibration.lambda2 = get_number(c, "lambda2", "calibration");
    if (!(sc.calibration.lambda1 > 0)) fail("calibration.lambda1", "must be positive");
    if (!(sc.calibration.lambda2 > 0)) fail("calibration.lambda2", "must be positive");
    if (c.contains("overrides")) {
      for (const auto& [app, o] : c["overrides"].items()) {
        const auto p = join_path("calibration.overrides", app);
        AppCalibration a{get_number(o, "unit_proc_device", p), get_number(o, "unit_tx_edge", p),
                         get_number(o, "unit_tx_cloud", p)};
        try {
          a.validate(app);
        } catch (const std::invalid_argument& e) {
          fail(p, e.what());
        }
        sc.calibration.per_app_overrides[app] = a;
      }
    }
    if (c.contains("anchors")) {
      const auto& arr = c["anchors"];
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto p = index_path("calibration.anchors", i);
        CalibrationAnchor a;
        a.application = get_string(arr[i], "application", p);
        a.s = get_positive_int(arr[i], "s", p);
        a.measured = {get_number(arr[i], "device_total", p), get_number(arr[i], "edge_total", p),
                      get_number(arr[i], "cloud_total", p)};
        if (sc.calibration.per_app_overrides.contains(a.application))
          fail(join_path(p, "application"), "application '" + a.application + "' has both an anchor and an override");
        try {
          sc.calibration.per_app_overrides[a.application] =
              calibrate_from_anchor(a.application, a.s, a.measured, sc.topology);
        } catch (const std::invalid_argument& e) {
          fail(p, e.what());
        }
        sc.anchors.push_back(std::move(a));
      }
    }
    for (const auto& [app, _] : sc.calibration.per_app_overrides) {
      const bool used = std::any_of(sc.workloads.begin(), sc.workloads.end(),
                                    [&](const auto& w) { return w.application == app; });
      if (!used) fail("calibration", "application '" + app + "' does not match any workload");
    }
  }

  if (root.contains("jobs")) {
    const auto& arr = root["jobs"];
    if (!arr.is_array()) fail("jobs", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = index_path("jobs", i);
      Job jb;
      jb.id = get_string(arr[i], "id", p);
      jb.release = get_int(arr[i], "release", p);
      if (jb.release < 0) fail(join_path(p, "release"), "must be >= 0");
      jb.weight = arr[i].contains("w") ? get_positive_int(arr[i], "w", p) : 1;
      for (Tier t : kAllTiers) {
        const std::string key(to_string(t));
        const auto tp = join_path(p, key);
        const auto& mc = require(arr[i], key, p);
        jb.on(t).processing = get_positive_int(mc, "processing", tp);
        if (t == Tier::Device) {
          if (mc.contains("transmission") && get_int(mc, "transmission", tp) != 0)
            fail(join_path(tp, "transmission"), "must be 0 on the end device");
          jb.on(t).transmission = 0;
        } else {
          jb.on(t).transmission = get_int(mc, "transmission", tp);
          if (jb.on(t).transmission < 0) fail(join_path(tp, "transmission"), "must be >= 0");
        }
      }
      for (const auto& other : sc.jobs)
        if (other.id == jb.id) fail(join_path(p, "id"), "duplicate job id '" + jb.id + "'");
      sc.jobs.push_back(std::move(jb));
    }
  }

  if (root.contains("golden")) {
    const auto& g = root["golden"];
    Golden golden;
    if (g.contains("placement")) {
      const auto& arr = g["placement"];
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto p = index_path("golden.placement", i);
        GoldenPlacement gp;
        gp.workload_id = get_string(arr[i], "id", p);
        try {
          gp.tier = parse_tier(get_string(arr[i], "tier", p));
        } catch (const std::invalid_argument& e) {
          fail(join_path(p, "tier"), e.what());
        }
        for (Tier t : kAllTiers)
          gp.totals[index_of(t)] = parse_golden_value(require(arr[i], std::string(to_string(t)), p),
                                                      join_path(p, std::string(to_string(t))));
        golden.placement.push_back(std::move(gp));
      }
    }
    if (g.contains("strategies")) {
      const auto& arr = g["strategies"];
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto p = index_path("golden.strategies", i);
        GoldenStrategy gs;
        gs.strategy = get_string(arr[i], "strategy", p);
        gs.whole = parse_golden_value(require(arr[i], "whole", p), join_path(p, "whole"));
        gs.last = parse_golden_value(require(arr[i], "last", p), join_path(p, "last"));
        gs.note = arr[i].value("note", "");
        golden.strategies.push_back(std::move(gs));
      }
    }
    sc.golden = std::move(golden);
  }
  return sc;
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col(text, e.byte);
    throw ScenarioError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                        e.what());
  }
  return detail::parse_scenario_json(root);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path + ": " + e.what());
  }
}

inline nlohmann::json scenario_to_json(const Scenario& sc) {
  using nlohmann::json;
  auto device = [](const DeviceSpec& d) {
    return json{{"cores", d.cores()}, {"frequency", d.frequency()}, {"ops_per_cycle", d.ops_per_cycle()}};
  };
  auto link = [](const NetworkLink& l) { return json{{"latency", l.latency()}, {"bandwidth", l.bandwidth()}}; };

  json root;
  root["name"] = sc.name;
  root["description"] = sc.description;
  root["topology"] = {{"cloud", device(sc.topology.cloud)},
                      {"edge", device(sc.topology.edge)},
                      {"device", device(sc.topology.device)}};
  json links = json::object();
  if (sc.topology.edge_device_link) links["edge_device"] = link(*sc.topology.edge_device_link);
  if (sc.topology.cloud_device_link) links["cloud_device"] = link(*sc.topology.cloud_device_link);
  if (!links.empty()) root["topology"]["links"] = links;

  json calib{{"lambda1", sc.calibration.lambda1}, {"lambda2", sc.calibration.lambda2}};
  json anchors = json::array();
  for (const auto& a : sc.anchors)
    anchors.push_back({{"application", a.application},
                       {"s", a.s},
                       {"device_total", a.measured.device_total},
                       {"edge_total", a.measured.edge_total},
                       {"cloud_total", a.measured.cloud_total}});
  json overrides = json::object();
  for (const auto& [app, o] : sc.calibration.per_app_overrides) {
    const bool from_anchor =
        std::any_of(sc.anchors.begin(), sc.anchors.end(), [&](const auto& a) { return a.application == app; });
    if (!from_anchor)
      overrides[app] = {{"unit_proc_device", o.unit_proc_device},
                        {"unit_tx_edge", o.unit_tx_edge},
                        {"unit_tx_cloud", o.unit_tx_cloud}};
  }
  if (!anchors.empty()) calib["anchors"] = anchors;
  if (!overrides.empty()) calib["overrides"] = overrides;
  root["calibration"] = calib;

  root["workloads"] = json::array();
  for (const auto& w : sc.workloads)
    root["workloads"].push_back({{"id", w.id},
                                 {"application", w.application},
                                 {"s", w.data_size_units},
                                 {"size_bytes", w.data_size_bytes},
                                 {"comp", w.model_flops},
                                 {"w", w.priority_weight}});
  root["jobs"] = json::array();
  for (const auto& j : sc.jobs)
    root["jobs"].push_back({{"id", j.id},
                            {"release", j.release},
                            {"w", j.weight},
                            {"cloud", {{"processing", j.on(Tier::Cloud).processing},
                                       {"transmission", j.on(Tier::Cloud).transmission}}},
                            {"edge", {{"processing", j.on(Tier::Edge).processing},
                                      {"transmission", j.on(Tier::Edge).transmission}}},
                            {"device", {{"processing", j.on(Tier::Device).processing}}}});
  if (sc.golden) {
    json g{{"placement", json::array()}, {"strategies", json::array()}};
    for (const auto& p : sc.golden->placement) {
      json row{{"id", p.workload_id}, {"tier", to_string(p.tier)}};
      for (Tier t : kAllTiers) row[std::string(to_string(t))] = detail::golden_value_json(p.totals[index_of(t)]);
      g["placement"].push_back(row);
    }
    for (const auto& s : sc.golden->strategies) {
      json row{{"strategy", s.strategy},
               {"whole", detail::golden_value_json(s.whole)},
               {"last", detail::golden_value_json(s.last)}};
      if (!s.note.empty()) row["note"] = s.note;
      g["strategies"].push_back(row);
    }
    root["golden"] = g;
  }
  return root;
}

inline std::string save_scenario(const Scenario& sc) { return scenario_to_json(sc).dump(2) + "\n"; }

/// Scheduling jobs derived from placement estimates: each workload becomes a
/// job with its estimated per-tier costs rounded to integer time units.
/// Releases default to 0.
inline std::vector<Job> jobs_from_workloads(std::span<const WorkloadSpec> workloads, const Topology& topo,
                                            const CalibrationConstants& calib) {
  std::vector<Job> out;
  out.reserve(workloads.size());
  for (const auto& w : workloads) {
    const auto e = estimate(w, topo, calib);
    Job j;
    j.id = w.id;
    j.weight = w.priority_weight;
    for (Tier t : kAllTiers) {
      j.on(t).processing = std::max<TimeUnits>(1, to_time_units(e.at(t).processing));
      j.on(t).transmission = to_time_units(e.at(t).transmission);
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace edgesched
