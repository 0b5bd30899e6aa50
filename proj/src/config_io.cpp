#include "ailc/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ailc/errors.hpp"
#include "json.hpp"

namespace ailc {

namespace {

using nlohmann::json;

ReferenceKind parse_reference_kind(const std::string& name) {
  if (name == "invariant") return ReferenceKind::iteration_invariant;
  if (name == "varying") return ReferenceKind::iteration_varying_uniform;
  throw ConfigError("unknown reference '" + name + "' (expected invariant or varying)");
}

std::string to_string(ReferenceKind kind) {
  return kind == ReferenceKind::iteration_invariant ? "invariant" : "varying";
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& scope) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.contains(it.key()))
      throw ConfigError("unknown config key '" + scope + it.key() + "'");
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");

  reject_unknown_keys(root,
                      {"plant", "schedule", "reference", "T", "K", "beta", "mode", "M",
                       "b_min", "seed", "init", "freeze_estimates", "check_invariants",
                       "out_dir"},
                      "");

  ExperimentConfig c;
  c.plant = get_or<std::string>(root, "plant", c.plant);
  c.schedule = parse_schedule_variant(get_or<std::string>(root, "schedule", "literal"));
  c.reference = parse_reference_kind(get_or<std::string>(root, "reference", "invariant"));
  c.T = get_or<int>(root, "T", c.T);
  c.K = get_or<int>(root, "K", c.K);
  c.beta = get_or<double>(root, "beta", c.beta);
  c.mode = parse_policy_mode(get_or<std::string>(root, "mode", "single"));
  c.M = get_or<int>(root, "M", c.mode == PolicyMode::single_model ? 1 : 10);
  c.b_min = get_or<double>(root, "b_min", c.b_min);
  c.seed = get_or<std::uint64_t>(root, "seed", c.seed);

  if (root.contains("init")) {
    const json& init = root.at("init");
    if (!init.is_object()) throw ConfigError("config key 'init' must be an object");
    reject_unknown_keys(init, {"lo", "hi", "b_lo", "b_hi", "mode"}, "init.");
    c.init_lo = get_or<double>(init, "lo", c.init_lo);
    c.init_b_lo = get_or<double>(init, "b_lo", c.init_b_lo);
    c.init_hi = get_or<double>(init, "hi", c.init_hi);
    c.init_b_hi = get_or<double>(init, "b_hi", c.init_b_hi);
    c.init_mode = parse_init_mode(get_or<std::string>(init, "mode", "random_box"));
  }
  c.freeze_estimates = get_or<bool>(root, "freeze_estimates", c.freeze_estimates);
  c.check_invariants = get_or<bool>(root, "check_invariants", c.check_invariants);
  c.out_dir = get_or<std::string>(root, "out_dir", c.out_dir);

  validate_config(c);
  return c;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize_config(const ExperimentConfig& config) {
  json root;
  root["plant"] = config.plant;
  root["schedule"] = to_string(config.schedule);
  root["reference"] = to_string(config.reference);
  root["T"] = config.T;
  root["K"] = config.K;
  root["beta"] = config.beta;
  root["mode"] = to_string(config.mode);
  root["M"] = config.M;
  root["b_min"] = config.b_min;
  root["seed"] = config.seed;
  root["init"] = {{"lo", config.init_lo},
                  {"hi", config.init_hi},
                  {"b_lo", config.init_b_lo},
                  {"b_hi", config.init_b_hi},
                  {"mode", to_string(config.init_mode)}};
  root["freeze_estimates"] = config.freeze_estimates;
  root["check_invariants"] = config.check_invariants;
  root["out_dir"] = config.out_dir;
  return root.dump(2) + "\n";
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.plant == b.plant && a.schedule == b.schedule && a.reference == b.reference &&
         a.T == b.T && a.K == b.K && a.beta == b.beta && a.mode == b.mode && a.M == b.M &&
         a.b_min == b.b_min && a.seed == b.seed && a.init_lo == b.init_lo &&
         a.init_hi == b.init_hi && a.init_b_lo == b.init_b_lo && a.init_b_hi == b.init_b_hi && a.init_mode == b.init_mode &&
         a.freeze_estimates == b.freeze_estimates &&
         a.check_invariants == b.check_invariants && a.out_dir == b.out_dir;
}

}  // namespace ailc
