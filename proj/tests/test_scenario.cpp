#include <gtest/gtest.h>

#include "carnot/scenario.hpp"

using namespace carnot;
using nlohmann::json;

TEST(Scenario, ParsesAndRuns) {
  const json j = {{"spec", "heisenberg"},
                  {"seed", 5},
                  {"sim", {{"paths", 300}, {"steps_per_unit_time", 32}}},
                  {"checks", json::array({{{"name", "cd_slack"}, {"samples", 50}},
                                          {{"name", "poincare"}, {"f", "x1"}, {"t", 1}, {"x", {0, 0, 0}}, {"eps", 2}}})}};
  const Scenario sc = scenario_from_json(j, ".");
  EXPECT_EQ(sc.seed, 5u);
  EXPECT_EQ(sc.sim.paths, 300);
  const ScenarioResult r = run_scenario(sc, 1);
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.cd_slack.size(), 50u);
  EXPECT_FALSE(r.any_violated());
  const std::string csv = summary_csv(r.reports);
  EXPECT_EQ(csv.rfind("name,t,lhs,rhs,slack,ci,verdict\r\n", 0), 0u);
  EXPECT_EQ(to_json(r.reports)[1]["name"], "poincare");
}

TEST(Scenario, InflatedConstantsViolate) {
  const json j = {{"spec", "heisenberg"},
                  {"seed", 5},
                  {"constants", {{"rho1", 10}}},
                  {"checks", json::array({{{"name", "cd_slack"}, {"samples", 200}}})}};
  EXPECT_TRUE(run_scenario(scenario_from_json(j, "."), 1).any_violated());
}

TEST(Scenario, Errors) {
  EXPECT_THROW(scenario_from_json({{"spec", "heisenberg"}}, "."), Error);
  const json unknown = {{"spec", "heisenberg"}, {"seed", 1}, {"checks", json::array({{{"name", "nope"}}})}};
  EXPECT_THROW(run_scenario(scenario_from_json(unknown, "."), 1), Error);
  const json missing = {{"spec", "heisenberg"}, {"seed", 1}, {"checks", json::array({{{"name", "poincare"}}})}};
  try {
    run_scenario(scenario_from_json(missing, "."), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.location().rfind("/checks/0/", 0), 0u);
  }
  EXPECT_TRUE(run_scenario(scenario_from_json({{"spec", "heisenberg"}, {"seed", 1}}, "."), 1).reports.empty());
}

TEST(Scenario, InterruptStopsBetweenChecks) {
  const json j = {{"spec", "heisenberg"},
                  {"seed", 5},
                  {"checks", json::array({{{"name", "cd_slack"}, {"samples", 10}}})}};
  std::atomic<bool> stop{true};
  const ScenarioResult r = run_scenario(scenario_from_json(j, "."), 1, &stop);
  EXPECT_TRUE(r.interrupted);
  EXPECT_TRUE(r.reports.empty());
}

TEST(Scenario, Formatting) {
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(1e300 * 1e300), "inf");
  EXPECT_EQ(parse_number_list("0, 0.5,1"), (std::vector<double>{0, 0.5, 1}));
  EXPECT_THROW(parse_number_list("0,,1"), Error);
  EXPECT_THROW(parse_number_list("a"), Error);
  EXPECT_THROW(parse_point("1,2", 2, 1), Error);
  EXPECT_EQ(parse_point("1,2,3", 2, 1).z(0), 3.0);
  EXPECT_EQ(cd_slack_csv({{3, 0.5, -1.0}}), "sample_id,epsilon,slack\r\n3,0.5,-1\r\n");
}
