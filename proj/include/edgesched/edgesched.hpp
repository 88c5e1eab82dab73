#pragma once

#include "edgesched/model.hpp"
#include "edgesched/latency.hpp"
#include "edgesched/placement.hpp"
#include "edgesched/jobs.hpp"
#include "edgesched/dispatch.hpp"
#include "edgesched/heuristic.hpp"
#include "edgesched/scenario.hpp"
#include "edgesched/timeline.hpp"
#include "edgesched/report.hpp"
