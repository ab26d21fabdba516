#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "carnot/corpus.hpp"
#include "carnot/inequality.hpp"

namespace carnot {

struct ScenarioCheck {
  std::string name;
  nlohmann::json params;
};

/// Batch description:
///
///     {"spec": "heisenberg.json" | {...inline spec...},
///      "s": 1, "seed": 7,
///      "constants": {"rho1": 10},            // optional overrides
///      "sim": {"paths": 4000, "inner_paths": 200, "steps_per_unit_time": 64},
///      "checks": [{"name": "poincare", "f": "x1", "t": 1, "x": [0, 0, 0], "eps": 2}, ...]}
///
/// The seed is mandatory. Spec paths are relative to the scenario file.
struct Scenario {
  GroupSpec spec;
  double s = 1.0;
  CDConstants consts;
  bool constants_overridden = false;
  std::uint64_t seed = 0;
  SimConfig sim;
  std::vector<ScenarioCheck> checks;
};

Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
Scenario load_scenario(const std::filesystem::path& path);

/// Loads a group spec from a path; the name "heisenberg" selects the built-in group.
GroupSpec load_spec_arg(const std::string& arg);

struct ScenarioResult {
  std::vector<CheckReport> reports;
  std::vector<SlackSample> cd_slack;
  bool interrupted = false;
  bool any_violated() const;
};

/// Runs the listed checks in order. Each check draws from its own stream keyed
/// by (seed, position, name). Stops between checks once `stop` is set.
ScenarioResult run_scenario(const Scenario& scenario, int threads, const std::atomic<bool>* stop = nullptr);

nlohmann::json to_json(const Estimate& e);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const std::vector<CheckReport>& reports);

/// RFC 4180 summary: name,t,lhs,rhs,slack,ci,verdict.
std::string summary_csv(const std::vector<CheckReport>& reports);
/// sample_id,epsilon,slack
std::string cd_slack_csv(const std::vector<SlackSample>& samples);

/// Shortest round-trip decimal form; "inf", "-inf" or "nan" otherwise.
std::string format_number(double v);

/// Parses "a,b,c" into numbers. Throws InvalidArgument.
std::vector<double> parse_number_list(const std::string& text);
/// Parses a point "x1,...,xn,z1,...,zm". Throws InvalidArgument.
Point parse_point(const std::string& text, int n, int m);

}  // namespace carnot
