#include "carnot/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "carnot/group_json.hpp"

namespace carnot {

using nlohmann::json;

namespace {

std::string pointer(std::size_t index, const std::string& key) {
  return "/checks/" + std::to_string(index) + "/" + key;
}

double number(const json& params, const std::string& key, std::size_t index) {
  if (!params.contains(key)) throw Error(ErrorCode::InvalidArgument, "missing parameter '" + key + "'", pointer(index, key));
  if (!params[key].is_number()) throw Error(ErrorCode::InvalidArgument, "'" + key + "' must be a number", pointer(index, key));
  return params[key].get<double>();
}

double number_or(const json& params, const std::string& key, double fallback, std::size_t index) {
  return params.contains(key) ? number(params, key, index) : fallback;
}

std::vector<double> numbers(const json& params, const std::string& key, std::size_t index) {
  if (!params.contains(key) || !params[key].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "'" + key + "' must be an array of numbers", pointer(index, key));
  }
  std::vector<double> out;
  for (const auto& v : params[key]) {
    if (!v.is_number()) throw Error(ErrorCode::InvalidArgument, "'" + key + "' must hold numbers", pointer(index, key));
    out.push_back(v.get<double>());
  }
  return out;
}

Expr expression(const json& params, const ValidatedSpec& spec, std::size_t index) {
  if (!params.contains("f") || !params["f"].is_string()) {
    throw Error(ErrorCode::InvalidArgument, "missing expression 'f'", pointer(index, "f"));
  }
  return parse_expr(params["f"].get<std::string>(), spec.n(), spec.m());
}

Point point(const json& params, const std::string& key, const ValidatedSpec& spec, std::size_t index) {
  const auto v = numbers(params, key, index);
  if (static_cast<int>(v.size()) != spec.dim()) {
    throw Error(ErrorCode::InvalidArgument, "'" + key + "' must have " + std::to_string(spec.dim()) + " coordinates",
                pointer(index, key));
  }
  Vector y(spec.dim());
  for (int i = 0; i < spec.dim(); ++i) y(i) = v[static_cast<std::size_t>(i)];
  return Point::from_ambient(y, spec.n());
}

SimConfig sim_from_json(const json& j, SimConfig cfg) {
  if (j.contains("paths")) cfg.paths = j["paths"].get<int>();
  if (j.contains("inner_paths")) cfg.inner_paths = j["inner_paths"].get<int>();
  if (j.contains("steps_per_unit_time")) cfg.steps_per_unit_time = j["steps_per_unit_time"].get<int>();
  return cfg;
}

void add_decay(ScenarioResult& out, const DecayCheck& d, const std::string& rate_name) {
  for (const auto& r : d.reports) out.reports.push_back(r);
  CheckReport rate = make_report(rate_name, Estimate::exact(d.rate), d.fitted_exponent);
  rate.parameters = {{"rate", d.rate}};
  rate.notes.push_back("fitted exponent of the curve against 2 lambda_eps");
  out.reports.push_back(std::move(rate));
}

}  // namespace

GroupSpec load_spec_arg(const std::string& arg) {
  if (arg == "heisenberg") return builtin_heisenberg();
  return load_group_spec(arg);
}

Scenario scenario_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "scenario must be a JSON object", "");
  Scenario sc;
  if (!j.contains("spec")) throw Error(ErrorCode::InvalidArgument, "missing 'spec'", "/spec");
  if (j["spec"].is_string()) {
    const std::string name = j["spec"].get<std::string>();
    sc.spec = name == "heisenberg" ? builtin_heisenberg() : load_group_spec(base_dir / name);
  } else {
    sc.spec = group_spec_from_json(j["spec"]);
  }
  if (!j.contains("seed") || !j["seed"].is_number_integer() || j["seed"].get<std::int64_t>() < 0) {
    throw Error(ErrorCode::InvalidArgument, "scenario needs a non-negative integer 'seed'", "/seed");
  }
  sc.seed = j["seed"].get<std::uint64_t>();
  sc.s = j.value("s", 1.0);
  const ValidatedSpec spec = validate_spec(sc.spec);
  sc.consts = carnot_constants(spec, sc.s);
  if (j.contains("constants")) {
    const json& c = j["constants"];
    sc.constants_overridden = true;
    sc.consts.rho1 = c.value("rho1", sc.consts.rho1);
    sc.consts.rho2 = c.value("rho2", sc.consts.rho2);
    sc.consts.rho3 = c.value("rho3", sc.consts.rho3);
    sc.consts.kappa = c.value("kappa", sc.consts.kappa);
  }
  sc.sim.seed = sc.seed;
  if (j.contains("sim")) sc.sim = sim_from_json(j["sim"], sc.sim);
  validate(sc.sim);
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw Error(ErrorCode::InvalidArgument, "'checks' must be an array", "/checks");
    for (std::size_t i = 0; i < j["checks"].size(); ++i) {
      const json& c = j["checks"][i];
      if (!c.contains("name") || !c["name"].is_string()) {
        throw Error(ErrorCode::InvalidArgument, "check needs a 'name'", pointer(i, "name"));
      }
      sc.checks.push_back({c["name"].get<std::string>(), c});
    }
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open scenario " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("scenario is not valid JSON: ") + e.what(),
                "byte " + std::to_string(e.byte));
  }
  return scenario_from_json(j, path.parent_path());
}

bool ScenarioResult::any_violated() const {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violated) return true;
  }
  return false;
}

ScenarioResult run_scenario(const Scenario& sc, int threads, const std::atomic<bool>* stop) {
  const ValidatedSpec spec = validate_spec(sc.spec);
  ScenarioResult out;
  for (std::size_t i = 0; i < sc.checks.size(); ++i) {
    if (stop != nullptr && stop->load()) {
      out.interrupted = true;
      break;
    }
    const std::string& name = sc.checks[i].name;
    const json& p = sc.checks[i].params;
    CheckSetup setup{make_context(spec, number_or(p, "s", sc.s, i)), sc.consts, sim_from_json(p, sc.sim)};
    setup.cfg = derive(setup.cfg, name, i);
    setup.cfg.threads = threads;
    validate(setup.cfg);

    if (name == "cd_slack") {
      CorpusConfig cc;
      cc.seed = derive(sc.sim, name, i).seed;
      cc.samples = static_cast<int>(number_or(p, "samples", 10000, i));
      const double tol = number_or(p, "tolerance", 1e-9, i);
      const SlackSweep sweep = sweep_cd_slack(setup.ctx, make_corpus(spec, cc), sc.consts, tol);
      CheckReport r = make_report("cd_slack", Estimate::exact(0.0), Estimate::exact(sweep.min_slack));
      r.slack.half_width = tol;
      r.verdict = classify(r.slack.mean, tol);
      r.parameters = {{"s", setup.ctx.s},         {"rho1", sc.consts.rho1}, {"rho2", sc.consts.rho2},
                      {"rho3", sc.consts.rho3},   {"kappa", sc.consts.kappa}, {"samples", cc.samples},
                      {"violations", sweep.violations}, {"worst_sample", sweep.worst}};
      out.reports.push_back(std::move(r));
      out.cd_slack.insert(out.cd_slack.end(), sweep.samples.begin(), sweep.samples.end());
    } else if (name == "poincare") {
      out.reports.push_back(check_poincare(setup, expression(p, spec, i), number(p, "t", i), point(p, "x", spec, i),
                                           number(p, "eps", i)));
    } else if (name == "poincare_mu") {
      out.reports.push_back(check_poincare_mu(setup, expression(p, spec, i), number(p, "eps", i)));
    } else if (name == "logsob") {
      out.reports.push_back(check_logsob(setup, expression(p, spec, i), number(p, "t", i), point(p, "x", spec, i),
                                         number(p, "eps", i)));
    } else if (name == "logsob_mu") {
      out.reports.push_back(check_logsob_mu(setup, expression(p, spec, i), number(p, "eps", i)));
    } else if (name == "reverse_poincare") {
      out.reports.push_back(
          check_reverse_poincare(setup, expression(p, spec, i), number(p, "t", i), point(p, "x", spec, i)));
    } else if (name == "reverse_logsob") {
      out.reports.push_back(
          check_reverse_logsob(setup, expression(p, spec, i), number(p, "t", i), point(p, "x", spec, i)));
    } else if (name == "gradient_decay") {
      out.reports.push_back(estimate_gradient_decay(setup, expression(p, spec, i), number(p, "t", i),
                                                    point(p, "x", spec, i), number(p, "eps", i)));
    } else if (name == "wang_harnack") {
      out.reports.push_back(check_wang_harnack(setup, expression(p, spec, i), number(p, "alpha", i), number(p, "t", i),
                                               point(p, "x", spec, i), point(p, "y", spec, i)));
    } else if (name == "log_harnack") {
      out.reports.push_back(check_log_harnack(setup, expression(p, spec, i), number(p, "t", i),
                                              point(p, "x", spec, i), point(p, "y", spec, i)));
    } else if (name == "hyperbound") {
      out.reports.push_back(check_hyperbound(setup, expression(p, spec, i), number(p, "alpha", i),
                                             number(p, "beta", i), number(p, "t", i)));
    } else if (name == "L2_decay") {
      add_decay(out, check_L2_decay(setup, expression(p, spec, i), numbers(p, "times", i), number(p, "eps", i)),
                "L2_rate");
    } else if (name == "entropy_decay") {
      add_decay(out,
                check_entropy_decay(setup, expression(p, spec, i), numbers(p, "times", i), number(p, "eps", i)),
                "entropy_rate");
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown check '" + name + "'", pointer(i, "name"));
    }
  }
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const Estimate& e) {
  return {{"mean", number_json(e.mean)}, {"half_width", number_json(e.half_width)}, {"n", e.n}};
}

json to_json(const CheckReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = number_json(v);
  return {{"name", r.name},
          {"verdict", std::string(to_string(r.verdict))},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"slack", to_json(r.slack)},
          {"stencil_error", number_json(r.stencil_error)},
          {"parameters", params},
          {"notes", r.notes}};
}

json to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

std::string summary_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "name,t,lhs,rhs,slack,ci,verdict\r\n";
  for (const auto& r : reports) {
    const double t = r.parameter("t", std::nan(""));
    os << csv_field(r.name) << ',' << (std::isnan(t) ? "" : format_number(t)) << ',' << format_number(r.lhs.mean)
       << ',' << format_number(r.rhs.mean) << ',' << format_number(r.slack.mean) << ','
       << format_number(r.slack.half_width) << ',' << to_string(r.verdict) << "\r\n";
  }
  return os.str();
}

std::string cd_slack_csv(const std::vector<SlackSample>& samples) {
  std::ostringstream os;
  os << "sample_id,epsilon,slack\r\n";
  for (const auto& s : samples) {
    os << s.id << ',' << format_number(s.epsilon) << ',' << format_number(s.slack) << "\r\n";
  }
  return os.str();
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::InvalidArgument, "empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidArgument, "not a number: '" + item + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

Point parse_point(const std::string& text, int n, int m) {
  const auto v = parse_number_list(text);
  if (static_cast<int>(v.size()) != n + m) {
    throw Error(ErrorCode::InvalidArgument, "point needs " + std::to_string(n + m) + " coordinates: '" + text + "'");
  }
  Vector y(n + m);
  for (int i = 0; i < n + m; ++i) y(i) = v[static_cast<std::size_t>(i)];
  return Point::from_ambient(y, n);
}

}  // namespace carnot
