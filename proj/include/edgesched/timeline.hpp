#pragma once

// Schedule export for Gantt-style rendering.

#include <iomanip>
#include <span>
#include <sstream>
#include <string>

#include "edgesched/jobs.hpp"
#include "json.hpp"

namespace edgesched {

inline nlohmann::json timeline_json(const Schedule& schedule, std::span<const Job> jobs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : schedule.entries) {
    out.push_back({{"job", jobs[e.job].id},
                   {"machine", std::string(to_string(e.machine))},
                   {"release", jobs[e.job].release},
                   {"transmission", {e.tx_start, e.tx_end}},
                   {"processing", {e.start, e.end}},
                   {"response", e.end - jobs[e.job].release}});
  }
  return out;
}

/// One row per job plus an ASCII bar: '~' transmitting, '.' waiting, '#' processing.
inline std::string timeline_text(const Schedule& schedule, std::span<const Job> jobs) {
  TimeUnits horizon = 0;
  for (const auto& e : schedule.entries) horizon = std::max(horizon, e.end);
  std::ostringstream os;
  os << std::left << std::setw(8) << "job" << std::setw(8) << "machine" << std::right << std::setw(6) << "R"
     << std::setw(10) << "tx" << std::setw(10) << "run" << std::setw(6) << "resp" << "  timeline\n";
  for (const auto& e : schedule.entries) {
    const auto& j = jobs[e.job];
    std::string bar(static_cast<std::size_t>(horizon), ' ');
    for (TimeUnits t = e.tx_start; t < e.tx_end; ++t) bar[t] = '~';
    for (TimeUnits t = e.tx_end; t < e.start; ++t) bar[t] = '.';
    for (TimeUnits t = e.start; t < e.end; ++t) bar[t] = '#';
    std::ostringstream tx, run;
    tx << e.tx_start << "-" << e.tx_end;
    run << e.start << "-" << e.end;
    os << std::left << std::setw(8) << j.id << std::setw(8) << to_string(e.machine) << std::right << std::setw(6)
       << j.release << std::setw(10) << tx.str() << std::setw(10) << run.str() << std::setw(6) << (e.end - j.release)
       << "  |" << bar << "|\n";
  }
  return os.str();
}

}  // namespace edgesched
