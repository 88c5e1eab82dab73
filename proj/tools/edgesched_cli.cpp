// Command-line front end: placement table, strategy comparison, exhaustive
// oracle, schedule timeline and golden-table reproduction.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "edgesched/edgesched.hpp"

namespace {

using namespace edgesched;

struct Common {
  std::string scenario_path;
  std::string objective = "weighted";
  int max_iterations = 100;
  std::string format = "text";
};

void add_common(CLI::App* cmd, Common& c, bool search_flags) {
  cmd->add_option("scenario", c.scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  if (search_flags) {
    cmd->add_option("--objective", c.objective, "Objective to minimize")
        ->check(CLI::IsMember({"weighted", "unweighted"}));
    cmd->add_option("--max-iterations", c.max_iterations, "Search pass limit")->check(CLI::PositiveNumber);
  }
}

Scenario load(const Common& c) {
  auto sc = load_scenario(c.scenario_path);
  for (const auto& w : sc.warnings) std::cerr << "warning: " << w << "\n";
  return sc;
}

SearchConfig search_config(const Common& c) {
  SearchConfig cfg;
  cfg.max_iterations = c.max_iterations;
  cfg.objective_mode = parse_objective_mode(c.objective);
  return cfg;
}

void require_jobs(const Scenario& sc) {
  if (sc.jobs.empty()) throw std::invalid_argument("scenario '" + sc.name + "' has no jobs");
}

int run_place(const Common& c) {
  const auto sc = load(c);
  Report rep;
  rep.scenario = sc.name;
  for (auto& d : place_all(sc)) rep.placement.push_back({std::move(d), {}, {}});
  if (c.format == "json") {
    std::cout << report_json(rep)["placement"].dump(2) << "\n";
  } else {
    std::cout << render_placement_table(rep.placement);
  }
  return 0;
}

int run_schedule(const Common& c) {
  const auto sc = load(c);
  require_jobs(sc);
  Report rep;
  rep.scenario = sc.name;
  rep.mode = search_config(c).objective_mode;
  rep.strategies = compare_strategies(sc.jobs, search_config(c));
  const auto lb = lower_bound(sc.jobs);
  if (c.format == "json") {
    auto j = report_json(rep);
    std::cout << nlohmann::json{{"objective", j["objective"]},
                                {"strategies", j["strategies"]},
                                {"lower_bound", {{"weighted", lb.weighted}, {"unweighted", lb.unweighted}}}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << render_strategy_table(rep.strategies) << "lower bound: weighted " << lb.weighted
              << ", unweighted " << lb.unweighted << "\n";
  }
  return 0;
}

int run_oracle(const Common& c) {
  const auto sc = load(c);
  require_jobs(sc);
  const auto mode = parse_objective_mode(c.objective);
  const auto best = brute_force(sc.jobs, mode);
  if (c.format == "json") {
    nlohmann::json a = nlohmann::json::array();
    for (Tier t : best.assignment) a.push_back(to_string(t));
    std::cout << nlohmann::json{{"objective", to_string(mode)},
                                {"assignment", a},
                                {"whole", best.metrics.unweighted_total},
                                {"weighted", best.metrics.weighted_total},
                                {"last", best.metrics.last_completion}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "optimum (" << to_string(mode) << "): " << best.metrics.value(mode) << "\n"
              << "whole " << best.metrics.unweighted_total << ", weighted " << best.metrics.weighted_total
              << ", last " << best.metrics.last_completion << "\nassignment:";
    for (std::size_t i = 0; i < sc.jobs.size(); ++i)
      std::cout << " " << sc.jobs[i].id << "=" << to_string(best.assignment[i]);
    std::cout << "\n";
  }
  return 0;
}

int run_timeline(const Common& c, const std::string& strategy) {
  const auto sc = load(c);
  require_jobs(sc);
  Assignment a;
  if (strategy == "heuristic") {
    a = allocate(sc.jobs, search_config(c)).assignment;
  } else if (strategy == "oracle") {
    a = brute_force(sc.jobs, search_config(c).objective_mode).assignment;
  } else {
    for (auto s : {BaselineStrategy::AllCloud, BaselineStrategy::AllEdge, BaselineStrategy::AllDevice,
                   BaselineStrategy::PerJobOptimal})
      if (to_string(s) == strategy) a = baseline(s, sc.jobs).assignment;
  }
  const auto schedule = simulate(a, sc.jobs);
  if (c.format == "json") {
    std::cout << timeline_json(schedule, sc.jobs).dump(2) << "\n";
  } else {
    const auto m = objective(schedule, sc.jobs);
    std::cout << timeline_text(schedule, sc.jobs) << "whole " << m.unweighted_total << ", weighted "
              << m.weighted_total << ", last " << m.last_completion << "\n";
  }
  return 0;
}

int run_reproduce(const Common& c) {
  const auto sc = load(c);
  const auto rep = reproduce_tables(sc, search_config(c));
  if (c.format == "json") {
    std::cout << report_json(rep).dump(2) << "\n";
  } else {
    std::cout << render_report(rep);
  }
  return rep.all_match() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tier placement and multi-job scheduling for cloud/edge/device inference workloads"};
  app.require_subcommand(1);

  Common place_opts, sched_opts, oracle_opts, timeline_opts, repro_opts;
  repro_opts.objective = "unweighted";
  std::string timeline_strategy = "heuristic";

  auto* place = app.add_subcommand("place", "Per-workload tier choice with estimated response times");
  add_common(place, place_opts, false);
  auto* schedule = app.add_subcommand("schedule", "Heuristic allocation compared against baseline strategies");
  add_common(schedule, sched_opts, true);
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum over all assignments (up to 12 jobs)");
  add_common(oracle, oracle_opts, true);
  auto* timeline = app.add_subcommand("timeline", "Per-job transmission and processing windows");
  add_common(timeline, timeline_opts, true);
  timeline->add_option("--strategy", timeline_strategy, "Which assignment to render")
      ->check(CLI::IsMember({"heuristic", "oracle", "all_cloud", "all_edge", "all_device", "per_job_optimal"}));
  auto* repro = app.add_subcommand("reproduce", "Placement and strategy tables diffed against golden values");
  add_common(repro, repro_opts, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*place) return run_place(place_opts);
    if (*schedule) return run_schedule(sched_opts);
    if (*oracle) return run_oracle(oracle_opts);
    if (*timeline) return run_timeline(timeline_opts, timeline_strategy);
    if (*repro) return run_reproduce(repro_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
