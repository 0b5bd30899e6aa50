#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ailc/config_io.hpp"
#include "ailc/csv.hpp"
#include "ailc/errors.hpp"
#include "ailc/harness.hpp"
#include "ailc/manifest.hpp"
#include "ailc/svg_plot.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ailc;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitIo = 4;

std::string resolve_out_dir(const std::string& flag_value, const std::string& config_value) {
  if (!flag_value.empty()) return flag_value;
  if (!config_value.empty()) return config_value;
  if (const char* env = std::getenv("AILC_OUT_DIR"); env != nullptr && env[0] != '\0')
    return env;
  return ".";
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
}

// Writes one output file and records it in the manifest.
void emit(RunManifest& manifest, const std::string& dir, const std::string& name,
          const std::string& content) {
  write_file(dir + "/" + name, content);
  manifest.outputs.push_back({name, fnv1a64_hex(content), content.size()});
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            const std::string& out_flag, bool trace, bool plot) {
  ExperimentConfig config = parse_config(config_path);
  if (seed) config.seed = *seed;
  const std::string dir = resolve_out_dir(out_flag, config.out_dir);
  ensure_dir(dir);

  const ExperimentReport report = run_experiment(config);

  RunManifest manifest;
  manifest.config = config;
  manifest.seeds = {config.seed};
  emit(manifest, dir, "summary.csv", summary_csv(report));
  if (trace) emit(manifest, dir, "trace.csv", trace_csv(report));
  if (plot) emit(manifest, dir, "plot.svg", convergence_svg({{to_string(config.mode), &report}}));
  write_file(dir + "/manifest.json", manifest_json(manifest));

  std::cout << config.plant << " " << to_string(config.mode) << " seed=" << config.seed
            << "  rms_track=" << format_float17(report.rms_track)
            << "  rms_ident=" << format_float17(report.rms_ident)
            << "  final_max_track=" << format_float17(report.iterations.back().max_track_err)
            << "\n"
            << "wrote " << dir << "/summary.csv\n";
  return kExitOk;
}

ExperimentConfig compare_config(const std::string& plant, PolicyMode mode,
                                const std::string& reference) {
  ExperimentConfig config;
  config.plant = plant;
  config.mode = mode;
  config.M = mode == PolicyMode::single_model ? 1 : 10;
  config.reference = reference == "varying" ? ReferenceKind::iteration_varying_uniform
                                            : ReferenceKind::iteration_invariant;
  return config;
}

int cmd_compare(const std::string& plant, int seed_count, const std::string& reference,
                const std::string& out_flag) {
  if (seed_count < 1) throw ConfigError("--seeds must be >= 1");
  parse_builtin_plant(plant);
  if (reference != "invariant" && reference != "varying")
    throw ConfigError("--reference must be invariant or varying");

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(seed_count));
  for (int i = 0; i < seed_count; ++i) seeds[static_cast<std::size_t>(i)] = i + 1;

  const std::string dir = resolve_out_dir(out_flag, "");
  ensure_dir(dir);

  const std::vector<PolicyMode> modes = {PolicyMode::single_model,
                                         PolicyMode::case1_per_iteration,
                                         PolicyMode::case2_per_sample};
  std::string metrics = "strategy,rms_ident_mean,rms_track_mean,rms_ident_min,rms_ident_max,"
                        "rms_track_min,rms_track_max\n";
  std::vector<ExperimentReport> first_seed_reports;
  first_seed_reports.reserve(modes.size());

  std::cout << "strategy    rms_ident   rms_track  (mean over " << seed_count << " seed"
            << (seed_count > 1 ? "s" : "") << ")\n";
  for (const PolicyMode mode : modes) {
    ExperimentConfig config = compare_config(plant, mode, reference);
    const BatchResult batch = batch_run(config, seeds);
    metrics += to_string(mode) + "," + format_float17(batch.mean_rms_ident) + "," +
               format_float17(batch.mean_rms_track) + "," + format_float17(batch.min_rms_ident) +
               "," + format_float17(batch.max_rms_ident) + "," +
               format_float17(batch.min_rms_track) + "," + format_float17(batch.max_rms_track) +
               "\n";
    config.seed = seeds.front();
    first_seed_reports.push_back(run_experiment(config));
    std::printf("%-10s %10.4f  %10.4f\n", to_string(mode).c_str(), batch.mean_rms_ident,
                batch.mean_rms_track);
  }

  RunManifest manifest;
  manifest.config = compare_config(plant, PolicyMode::single_model, reference);
  manifest.seeds = seeds;
  emit(manifest, dir, "metrics.csv", metrics);

  std::vector<PlotSeries> series;
  for (std::size_t i = 0; i < modes.size(); ++i)
    series.push_back({to_string(modes[i]), &first_seed_reports[i]});
  emit(manifest, dir, "compare.svg", convergence_svg(series));
  write_file(dir + "/manifest.json", manifest_json(manifest));

  std::cout << "wrote " << dir << "/metrics.csv and " << dir << "/compare.svg\n";
  return kExitOk;
}

int cmd_batch(const std::string& config_path, const std::string& seeds_arg,
              const std::string& out_flag) {
  const ExperimentConfig config = parse_config(config_path);

  std::vector<std::uint64_t> seeds;
  std::size_t pos = 0;
  while (pos < seeds_arg.size()) {
    const std::size_t comma = seeds_arg.find(',', pos);
    const std::string token = seeds_arg.substr(pos, comma - pos);
    try {
      seeds.push_back(std::stoull(token));
    } catch (const std::exception&) {
      throw ConfigError("bad seed '" + token + "' in --seeds list");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (seeds.empty()) throw ConfigError("--seeds list is empty");

  const std::string dir = resolve_out_dir(out_flag, config.out_dir);
  ensure_dir(dir);

  const BatchResult result = batch_run(config, seeds);
  std::string csv = "seed,rms_track,rms_ident,final_max_track,final_max_ident\n";
  for (const BatchRow& row : result.rows)
    csv += std::to_string(row.seed) + "," + format_float17(row.rms_track) + "," +
           format_float17(row.rms_ident) + "," + format_float17(row.final_max_track) + "," +
           format_float17(row.final_max_ident) + "\n";

  RunManifest manifest;
  manifest.config = config;
  manifest.seeds = seeds;
  emit(manifest, dir, "batch.csv", csv);
  write_file(dir + "/manifest.json", manifest_json(manifest));

  std::cout << "seeds=" << seeds.size() << "  rms_track mean=" << result.mean_rms_track
            << " min=" << result.min_rms_track << " max=" << result.max_rms_track << "\n"
            << "wrote " << dir << "/batch.csv\n";
  return kExitOk;
}

int cmd_check() {
  // Full invariant sweep: every built-in plant under every strategy, with all
  // runtime checks armed. Any breach aborts with its coordinates.
  const std::vector<std::string> plants = {"LTI", "LTV_D", "NL", "NL_D"};
  const std::vector<PolicyMode> modes = {PolicyMode::single_model,
                                         PolicyMode::case1_per_iteration,
                                         PolicyMode::case2_per_sample};
  for (const std::string& plant : plants) {
    for (const PolicyMode mode : modes) {
      ExperimentConfig config;
      config.plant = plant;
      config.mode = mode;
      config.M = mode == PolicyMode::single_model ? 1 : 10;
      config.seed = 42;
      config.check_invariants = true;
      run_experiment(config);
      std::cout << "ok  " << plant << " " << to_string(mode) << "\n";
    }
  }
  std::cout << "all invariant checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time adaptive iterative learning control simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir, plant = "NL_D", reference = "invariant", seeds_list;
  std::optional<std::uint64_t> seed_override;
  int seed_count = 10;
  bool trace = false, plot = false;

  CLI::App* run = app.add_subcommand("run", "run one experiment from a config file");
  run->add_option("--config", config_path, "JSON config path")->required();
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--trace", trace, "also write the per-sample trace.csv");
  run->add_flag("--plot", plot, "also write plot.svg");

  CLI::App* compare = app.add_subcommand("compare", "single vs multi-model on one plant");
  compare->add_option("--plant", plant, "LTI, LTV_D, NL or NL_D")->required();
  compare->add_option("--seeds", seed_count, "number of seeds (1..N)");
  compare->add_option("--reference", reference, "invariant or varying");
  compare->add_option("--out", out_dir, "output directory");

  CLI::App* batch = app.add_subcommand("batch", "run one config over many seeds");
  batch->add_option("--config", config_path, "JSON config path")->required();
  batch->add_option("--seeds", seeds_list, "comma-separated seed list")->required();
  batch->add_option("--out", out_dir, "output directory");

  app.add_subcommand("check", "run the built-in invariant sweep, no file output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, seed_override, out_dir, trace, plot);
    if (compare->parsed()) return cmd_compare(plant, seed_count, reference, out_dir);
    if (batch->parsed()) return cmd_batch(config_path, seeds_list, out_dir);
    return cmd_check();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
