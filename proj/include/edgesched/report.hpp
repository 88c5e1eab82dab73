#pragma once

// Placement and strategy-comparison tables, with per-cell comparison against
// the golden values embedded in a scenario.

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgesched/placement.hpp"
#include "edgesched/scenario.hpp"
#include "edgesched/timeline.hpp"

namespace edgesched {

struct CellCheck {
  bool checked = false;
  bool match = true;
};

struct PlacementRow {
  PlacementDecision decision;
  CellCheck tier;
  std::array<CellCheck, 3> totals{};
};

struct StrategyRow {
  std::string strategy;
  StrategyResult result;
  CellCheck whole;
  CellCheck last;
};

struct NamedCheck {
  std::string name;
  bool pass = false;
};

struct Report {
  std::string scenario;
  ObjectiveMode mode = ObjectiveMode::Unweighted;
  std::vector<PlacementRow> placement;
  std::vector<StrategyRow> strategies;
  std::vector<NamedCheck> checks;

  bool all_match() const {
    for (const auto& r : placement) {
      if (!r.tier.match) return false;
      for (const auto& c : r.totals)
        if (!c.match) return false;
    }
    for (const auto& s : strategies)
      if (!s.whole.match || !s.last.match) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline std::vector<PlacementDecision> place_all(const Scenario& sc) {
  std::vector<PlacementDecision> out;
  out.reserve(sc.workloads.size());
  for (const auto& w : sc.workloads) out.push_back(choose_layer(w, sc.topology, sc.calibration));
  return out;
}

/// Heuristic followed by the four fixed baselines, in the usual table order.
inline std::vector<StrategyRow> compare_strategies(std::span<const Job> jobs, const SearchConfig& config,
                                                   const DispatchPolicy& policy = {}) {
  std::vector<StrategyRow> rows;
  const auto h = allocate(jobs, config, policy);
  rows.push_back({"heuristic", {h.assignment, h.metrics}, {}, {}});
  for (auto s : {BaselineStrategy::PerJobOptimal, BaselineStrategy::AllCloud, BaselineStrategy::AllEdge,
                 BaselineStrategy::AllDevice})
    rows.push_back({std::string(to_string(s)), baseline(s, jobs, policy), {}, {}});
  return rows;
}

inline Report reproduce_tables(const Scenario& sc, const SearchConfig& config, const DispatchPolicy& policy = {}) {
  Report rep;
  rep.scenario = sc.name;
  rep.mode = config.objective_mode;

  for (auto& d : place_all(sc)) {
    PlacementRow row{std::move(d), {}, {}};
    if (sc.golden) {
      for (const auto& g : sc.golden->placement) {
        if (g.workload_id != row.decision.workload_id) continue;
        row.tier = {true, g.tier == row.decision.chosen_tier};
        for (Tier t : kAllTiers)
          row.totals[index_of(t)] = {true, g.totals[index_of(t)].matches(row.decision.estimate.total(t))};
      }
    }
    rep.placement.push_back(std::move(row));
  }

  if (!sc.jobs.empty()) {
    rep.strategies = compare_strategies(sc.jobs, config, policy);
    if (sc.golden) {
      for (auto& row : rep.strategies) {
        for (const auto& g : sc.golden->strategies) {
          if (g.strategy != row.strategy) continue;
          row.whole = {true, g.whole.matches(static_cast<double>(row.result.metrics.unweighted_total))};
          row.last = {true, g.last.matches(static_cast<double>(row.result.metrics.last_completion))};
        }
      }
    }
    const auto& h = rep.strategies.front().result.metrics;
    bool dominates = true;
    for (std::size_t i = 1; i < rep.strategies.size(); ++i)
      dominates = dominates && h.value(config.objective_mode) <= rep.strategies[i].result.metrics.value(config.objective_mode);
    rep.checks.push_back({"heuristic <= every baseline (" + std::string(to_string(config.objective_mode)) + ")",
                          dominates});
    const auto lb = lower_bound(sc.jobs);
    rep.checks.push_back({"heuristic >= lower bound",
                          h.weighted_total >= lb.weighted && h.unweighted_total >= lb.unweighted});
  }
  return rep;
}

namespace detail {

inline std::string flag(const CellCheck& c) { return !c.checked ? " " : (c.match ? " " : "*"); }

inline std::string tier_label(Tier t) {
  switch (t) {
    case Tier::Cloud: return "Cloud Server";
    case Tier::Edge: return "Edge Server";
    case Tier::Device: return "End Device";
  }
  return "?";
}

}  // namespace detail

inline std::string render_placement_table(std::span<const PlacementRow> rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "Workload" << std::setw(15) << "Chosen layer" << std::right << std::setw(11)
     << "Cloud" << std::setw(11) << "Edge" << std::setw(11) << "Device" << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(10) << r.decision.workload_id << std::setw(14)
       << detail::tier_label(r.decision.chosen_tier) << detail::flag(r.tier) << std::right;
    for (Tier t : kAllTiers) {
      os << std::setw(10) << to_time_units(r.decision.estimate.total(t)) << detail::flag(r.totals[index_of(t)]);
    }
    os << "\n";
  }
  return os.str();
}

inline std::string render_strategy_table(std::span<const StrategyRow> rows) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "Strategy" << std::right << std::setw(8) << "Whole" << std::setw(8) << "Last"
     << std::setw(10) << "Weighted" << "  Assignment\n";
  for (const auto& r : rows) {
    const auto& m = r.result.metrics;
    os << std::left << std::setw(18) << r.strategy << std::right << std::setw(7) << m.unweighted_total
       << detail::flag(r.whole) << std::setw(7) << m.last_completion << detail::flag(r.last) << std::setw(10)
       << m.weighted_total << "  ";
    for (Tier t : r.result.assignment) os << to_string(t)[0];
    os << "\n";
  }
  return os.str();
}

inline std::string render_report(const Report& rep) {
  std::ostringstream os;
  os << "scenario: " << rep.scenario << "\n";
  if (!rep.placement.empty()) {
    os << "\nEstimated response time per layer\n" << render_placement_table(rep.placement);
  }
  if (!rep.strategies.empty()) {
    os << "\nResponse time by strategy (objective: " << to_string(rep.mode) << ")\n"
       << render_strategy_table(rep.strategies);
  }
  if (!rep.checks.empty()) {
    os << "\nChecks\n";
    for (const auto& c : rep.checks) os << (c.pass ? "  ok    " : "  FAIL  ") << c.name << "\n";
  }
  os << "\n" << (rep.all_match() ? "golden: all cells match" : "golden: mismatches flagged with *") << "\n";
  return os.str();
}

inline nlohmann::json report_json(const Report& rep) {
  using nlohmann::json;
  auto cell = [](const CellCheck& c) -> json { return c.checked ? json(c.match) : json(nullptr); };
  json out{{"scenario", rep.scenario}, {"objective", to_string(rep.mode)}, {"all_match", rep.all_match()}};
  out["placement"] = json::array();
  for (const auto& r : rep.placement) {
    json row{{"id", r.decision.workload_id},
             {"tier", to_string(r.decision.chosen_tier)},
             {"t_min", r.decision.t_min},
             {"tier_match", cell(r.tier)}};
    for (Tier t : kAllTiers) {
      const auto& tl = r.decision.estimate.at(t);
      row[std::string(to_string(t))] = {{"transmission", tl.transmission},
                                        {"processing", tl.processing},
                                        {"total", tl.total()},
                                        {"match", cell(r.totals[index_of(t)])}};
    }
    out["placement"].push_back(row);
  }
  out["strategies"] = json::array();
  for (const auto& s : rep.strategies) {
    json assignment = json::array();
    for (Tier t : s.result.assignment) assignment.push_back(to_string(t));
    out["strategies"].push_back({{"strategy", s.strategy},
                                 {"whole", s.result.metrics.unweighted_total},
                                 {"weighted", s.result.metrics.weighted_total},
                                 {"last", s.result.metrics.last_completion},
                                 {"whole_match", cell(s.whole)},
                                 {"last_match", cell(s.last)},
                                 {"assignment", assignment}});
  }
  out["checks"] = json::array();
  for (const auto& c : rep.checks) out["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
  return out;
}

}  // namespace edgesched
