#include <gtest/gtest.h>

#include <random>

#include "edgesched/placement.hpp"

using namespace edgesched;

namespace {

Topology icu_topology() {
  return {DeviceSpec(12, 2.2e9), DeviceSpec(4, 2.2e9), DeviceSpec(4, 1.5e9), NetworkLink(0.000239, 10e6),
          NetworkLink(0.042, 2.9e6)};
}

CalibrationConstants icu_calibration() {
  const auto topo = icu_topology();
  CalibrationConstants c;
  c.per_app_overrides["breath"] = calibrate_from_anchor("breath", 64, {1394, 1279, 2091}, topo);
  c.per_app_overrides["death"] = calibrate_from_anchor("death", 64, {79, 109, 212}, topo);
  return c;
}

}  // namespace

TEST(ChooseLayer, Wl1GoesToEdge) {
  const auto d = choose_layer({"WL1-1", "breath", 64, 700 * 1024, 105089, 2}, icu_topology(), icu_calibration());
  EXPECT_EQ(d.workload_id, "WL1-1");
  EXPECT_EQ(d.chosen_tier, Tier::Edge);
  EXPECT_NEAR(d.t_min, 1279, 1e-9);
}

TEST(ChooseLayer, Wl2AtSize512GoesToDevice) {
  const auto d = choose_layer({"WL2-4", "death", 512, 3900 * 1024, 7569, 2}, icu_topology(), icu_calibration());
  EXPECT_EQ(d.chosen_tier, Tier::Device);
  EXPECT_NEAR(d.t_min, 632, 1e-9);
}

TEST(ChooseLayer, TiesPreferTheLowestTier) {
  // unit costs chosen so all three totals are exactly 8
  Topology graded{DeviceSpec(4, 1e9), DeviceSpec(2, 1e9), DeviceSpec(1, 1e9), std::nullopt, std::nullopt};
  CalibrationConstants tie;
  tie.per_app_overrides["x"] = {1.0, 0.5, 0.75};
  const auto d = choose_layer({"w", "x", 8, 8, 1000, 1}, graded, tie);
  EXPECT_EQ(d.estimate.total(Tier::Device), 8.0);
  EXPECT_EQ(d.estimate.total(Tier::Edge), 8.0);
  EXPECT_EQ(d.estimate.total(Tier::Cloud), 8.0);
  EXPECT_EQ(d.chosen_tier, Tier::Device);

  // edge and cloud tie but beat the device: edge wins
  CalibrationConstants c;
  c.per_app_overrides["x"] = {10.0, 1.0, 1.0};
  Topology same_servers{DeviceSpec(8, 1e9), DeviceSpec(8, 1e9), DeviceSpec(1, 1e9), std::nullopt, std::nullopt};
  EXPECT_EQ(choose_layer({"w", "x", 8, 8, 1000, 1}, same_servers, c).chosen_tier, Tier::Edge);
}

TEST(ChooseLayer, TminIsTheMinimumAndChosenTierAttainsIt) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> s(1, 4000), comp(1, 2'000'000);
  const auto topo = icu_topology();
  for (int i = 0; i < 200; ++i) {
    WorkloadSpec w{"w", "synthetic", s(rng), 0, comp(rng), 1};
    w.data_size_bytes = w.data_size_units * 2048;
    const auto d = choose_layer(w, topo, CalibrationConstants{});
    for (Tier t : kAllTiers) EXPECT_LE(d.t_min, d.estimate.total(t));
    EXPECT_EQ(d.t_min, d.estimate.total(d.chosen_tier));
  }
}

TEST(ChooseLayer, UniformScalingDoesNotChangeTheChoice) {
  const auto topo = icu_topology();
  const auto base = icu_calibration();
  for (double k : {0.5, 3.0, 17.0}) {
    CalibrationConstants scaled = base;
    scaled.lambda1 *= k;
    scaled.lambda2 *= k;
    for (std::int64_t s : {64, 512, 2048}) {
      for (const char* app : {"breath", "death"}) {
        const WorkloadSpec w{"w", app, s, s * 100, 1000, 1};
        EXPECT_EQ(choose_layer(w, topo, base).chosen_tier, choose_layer(w, topo, scaled).chosen_tier);
      }
    }
  }
}

TEST(ChooseLayer, HeavierModelsMoveUpTheHierarchy) {
  // physical mode, lambda1 large enough that transmission matters
  const auto topo = icu_topology();
  CalibrationConstants c;
  c.lambda1 = 1e3;
  c.lambda2 = 1.0;
  int last = static_cast<int>(Tier::Device);
  std::vector<Tier> seen;
  for (std::int64_t comp = 1; comp <= (std::int64_t{1} << 50); comp *= 2) {
    const auto d = choose_layer({"w", "synthetic", 100, 100 * 4096, comp, 1}, topo, c);
    const int now = static_cast<int>(d.chosen_tier);
    EXPECT_LE(now, last) << "moved back down at comp=" << comp;  // Cloud=0 < Edge=1 < Device=2
    last = now;
    if (seen.empty() || seen.back() != d.chosen_tier) seen.push_back(d.chosen_tier);
  }
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_EQ(seen[0], Tier::Device);
  EXPECT_EQ(seen[1], Tier::Edge);
  EXPECT_EQ(seen[2], Tier::Cloud);
}
