// carnot: command-line front end.
//
//   carnot constants --spec g.json [--s 1] [--eps 2] [--opt-time 10]
//   carnot check     --scenario sc.json [--out DIR]
//   carnot decay     --spec g.json --f EXPR --times 0,0.5,1 [--kind variance|entropy]
//   carnot distance  --spec g.json --from P --to Q
//   carnot simulate  --spec g.json --t T [--sampler heat|invariant|sde]
//
// Exit codes: 0 ok, 1 a bound was violated, 2 invalid input or I/O failure,
// 130 interrupted (partial results were written).

#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "carnot/scenario.hpp"

namespace {

using namespace carnot;
using nlohmann::json;

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

struct Globals {
  std::string spec = "heisenberg";
  std::uint64_t seed = 1;
  bool seed_set = false;
  int threads = 1;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + g.out);
  f << text;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot write " + path.string());
  f << text;
}

SimConfig sim_config(const Globals& g, int paths, int inner, int steps) {
  SimConfig cfg;
  cfg.seed = g.seed;
  cfg.paths = paths;
  cfg.inner_paths = inner;
  cfg.steps_per_unit_time = steps;
  cfg.threads = g.threads;
  validate(cfg);
  return cfg;
}

int cmd_constants(const Globals& g, double s, double eps, double opt_time) {
  const ValidatedSpec spec = validate_spec(load_spec_arg(g.spec));
  const CDConstants c = carnot_constants(spec, s);
  json j = {{"name", spec.name()}, {"n", spec.n()},     {"m", spec.m()},         {"s", s},
            {"rho1", c.rho1},      {"rho2", c.rho2},   {"rho3", c.rho3},        {"kappa", c.kappa}};
  if (eps > 0.0) {
    j["epsilon"] = eps;
    j["lambda"] = lambda_eps(c, eps);
    const double C = prefactor_C(c, eps);
    j["C"] = C;
    j["C_over_e"] = C / std::exp(1.0);
  }
  if (opt_time >= 0.0) {
    const RatePlan plan = optimal_eps_for_time(c, opt_time);
    j["plan"] = {{"t", opt_time},
                 {"epsilon", plan.epsilon},
                 {"lambda", plan.lambda},
                 {"prefactor", plan.prefactor},
                 {"log_bound", plan.log_bound}};
  }
  emit(g, j.dump(2) + "\n");
  return 0;
}

int cmd_check(const Globals& g, const std::string& scenario_path) {
  Scenario sc = load_scenario(scenario_path);
  if (g.seed_set) {
    sc.seed = g.seed;
    sc.sim.seed = g.seed;
  }
  const ScenarioResult res = run_scenario(sc, g.threads, &g_stop);
  const std::string report = to_json(res.reports).dump(2) + "\n";
  const std::string summary = summary_csv(res.reports);
  if (g.out.empty()) {
    std::cout << report;
  } else {
    std::filesystem::create_directories(g.out);
    write_file(std::filesystem::path(g.out) / "report.json", report);
    write_file(std::filesystem::path(g.out) / "summary.csv", summary);
    if (!res.cd_slack.empty()) write_file(std::filesystem::path(g.out) / "cd_slack.csv", cd_slack_csv(res.cd_slack));
    std::cout << summary;
  }
  if (res.interrupted) {
    std::cerr << "interrupted: " << res.reports.size() << " reports written\n";
    return 130;
  }
  return res.any_violated() ? 1 : 0;
}

int cmd_decay(const Globals& g, const std::string& f_text, const std::string& times_text, const std::string& kind,
              double s, double eps, int paths, int inner, int steps) {
  const ValidatedSpec spec = validate_spec(load_spec_arg(g.spec));
  const Expr f = parse_expr(f_text, spec.n(), spec.m());
  const std::vector<double> times = parse_number_list(times_text);
  for (std::size_t j = 1; j < times.size(); ++j) {
    if (!(times[j] > times[j - 1])) {
      throw Error(ErrorCode::InvalidArgument, "times must be strictly increasing", "times/" + std::to_string(j));
    }
  }
  CheckSetup setup{make_context(spec, s), carnot_constants(spec, s), sim_config(g, paths, inner, steps)};
  const bool entropy = kind == "entropy";
  if (!entropy && kind != "variance") throw Error(ErrorCode::InvalidArgument, "kind must be variance or entropy");
  const DecayCheck d = entropy ? check_entropy_decay(setup, f, times, eps) : check_L2_decay(setup, f, times, eps);
  const std::string bound_name = entropy ? "entropy_decay" : "variance_gradient_bound";

  std::ostringstream os;
  os << "t,value,ci,bound,slack\r\n";
  bool violated = false;
  for (const DecayPoint& p : d.curve) {
    if (std::find(times.begin(), times.end(), p.t) == times.end()) continue;
    std::string bound;
    std::string slack;
    for (const CheckReport& r : d.reports) {
      if (r.name == bound_name && r.parameter("t", -1.0) == p.t) {
        bound = format_number(r.rhs.mean);
        slack = format_number(r.slack.mean);
        violated = violated || r.verdict == Verdict::Violated;
      }
    }
    os << format_number(p.t) << ',' << format_number(p.value.mean) << ',' << format_number(p.value.half_width) << ','
       << bound << ',' << slack << "\r\n";
  }
  emit(g, os.str());
  return violated ? 1 : 0;
}

int cmd_distance(const Globals& g, const std::string& from, const std::string& to) {
  const ValidatedSpec spec = validate_spec(load_spec_arg(g.spec));
  const Point p = parse_point(from, spec.n(), spec.m());
  const Point q = parse_point(to, spec.n(), spec.m());
  const DistanceResult d = cc_distance(spec, p, q);
  json j = {{"method", std::string(to_string(d.method))}};
  if (d.exact()) {
    j["value"] = d.upper;
  } else {
    j["lower"] = d.lower;
    j["upper"] = d.upper;
  }
  emit(g, j.dump(2) + "\n");
  return 0;
}

int cmd_simulate(const Globals& g, double t, const std::string& sampler, double s, const std::string& from, int paths,
                 int steps) {
  const ValidatedSpec spec = validate_spec(load_spec_arg(g.spec));
  const SimConfig cfg = sim_config(g, paths, 1, steps);
  PathEnsemble e;
  if (sampler == "heat") {
    e = sample_heat(spec, t, cfg);
  } else if (sampler == "invariant") {
    e = sample_invariant(make_context(spec, s), cfg);
  } else if (sampler == "sde") {
    const Point x = from.empty() ? Point::origin(spec.n(), spec.m()) : parse_point(from, spec.n(), spec.m());
    e = sample_sde(make_context(spec, s), x, t, cfg);
  } else {
    throw Error(ErrorCode::InvalidArgument, "sampler must be heat, invariant or sde");
  }
  std::ostringstream os;
  for (int i = 0; i < spec.n(); ++i) os << (i ? "," : "") << 'x' << i + 1;
  for (int k = 0; k < spec.m(); ++k) os << ",z" << k + 1;
  os << "\r\n";
  for (const Point& p : e.endpoints) {
    const Vector y = p.ambient();
    for (Eigen::Index i = 0; i < y.size(); ++i) os << (i ? "," : "") << format_number(y(i));
    os << "\r\n";
  }
  emit(g, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo and symbolic checks for Ornstein-Uhlenbeck operators on step-2 Carnot groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--spec", g.spec, "group spec JSON, or 'heisenberg'");
  app.add_option("--seed", g.seed, "random seed")->each([&](const std::string&) { g.seed_set = true; });
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (check: output directory)");

  double s = 1.0;
  double eps = -1.0;
  double opt_time = -1.0;
  auto* constants = app.add_subcommand("constants", "curvature constants, rate and prefactor");
  constants->add_option("--s", s, "drift strength");
  constants->add_option("--eps", eps, "epsilon for lambda_eps and C");
  constants->add_option("--opt-time", opt_time, "optimize epsilon for this time");

  std::string scenario;
  auto* check = app.add_subcommand("check", "run a scenario of inequality checks");
  check->add_option("scenario,--scenario", scenario, "scenario JSON")->required();

  std::string f_text;
  std::string times_text;
  std::string kind = "variance";
  int paths = 10000;
  int inner = 1000;
  int steps = 256;
  double decay_eps = 2.0;
  auto* decay = app.add_subcommand("decay", "variance or entropy decay curve with bounds");
  decay->add_option("--f", f_text, "test function")->required();
  decay->add_option("--times", times_text, "increasing times, comma separated")->required();
  decay->add_option("--kind", kind, "variance or entropy");
  decay->add_option("--s", s, "drift strength");
  decay->add_option("--eps", decay_eps, "epsilon");
  decay->add_option("--paths", paths, "outer samples");
  decay->add_option("--inner-paths", inner, "inner samples");
  decay->add_option("--steps", steps, "steps per unit time");

  std::string from;
  std::string to;
  auto* distance = app.add_subcommand("distance", "Carnot-Caratheodory distance or bounds");
  distance->add_option("--from", from, "point x1,..,xn,z1,..,zm")->required();
  distance->add_option("--to", to, "point x1,..,xn,z1,..,zm")->required();

  double t = 1.0;
  std::string sampler = "heat";
  int sim_paths = 1000;
  auto* simulate = app.add_subcommand("simulate", "sample path endpoints as CSV");
  simulate->add_option("--t", t, "time horizon");
  simulate->add_option("--sampler", sampler, "heat, invariant or sde");
  simulate->add_option("--s", s, "drift strength");
  simulate->add_option("--from", from, "start point for sde");
  simulate->add_option("--paths", sim_paths, "number of paths");
  simulate->add_option("--steps", steps, "steps per unit time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::signal(SIGINT, on_sigint);
  try {
    if (*constants) return cmd_constants(g, s, eps, opt_time);
    if (*check) return cmd_check(g, scenario);
    if (*decay) return cmd_decay(g, f_text, times_text, kind, s, decay_eps, paths, inner, steps);
    if (*distance) return cmd_distance(g, from, to);
    if (*simulate) return cmd_simulate(g, t, sampler, s, from, sim_paths, steps);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Io: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
