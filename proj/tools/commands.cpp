// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <multidet/calibrate.hpp>
#include <multidet/equivalence.hpp>
#include <multidet/error.hpp>
#include <multidet/experiment.hpp>
#include <multidet/pattern_io.hpp>
#include <multidet/version.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace multidet::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Seed from MULTIDET_SEED if set and valid, else `fallback`.
std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') {
    throw FormatError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return v;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw FormatError("failed writing " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

class Manifest {
 public:
  explicit Manifest(std::string command)
      : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  void set_config(json config) { config_ = std::move(config); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add_artifact(const fs::path& p) { artifacts_.push_back(p.string()); }

  fs::path write(const fs::path& dir) const {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json j{{"command", command_},
           {"config", config_},
           {"artifacts", artifacts_},
           {"version", kVersion},
           {"wall_clock_seconds", seconds}};
    j["seed"] = seed_ ? json(*seed_) : json(nullptr);
    const fs::path path = dir / (command_ + ".manifest.json");
    write_text(path, dump(j));
    return path;
  }

 private:
  std::string command_;
  json config_ = json::object();
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> artifacts_;
  std::chrono::steady_clock::time_point start_;
};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw FormatError("cannot create output directory " + dir.string());
  }
}

json read_json_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot read " + path.string());
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

struct SimulateArgs {
  std::string config;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  Manifest manifest("simulate");
  const json raw = read_json_file(args.config);
  ExperimentConfig config = config_from_json(raw);
  if (args.seed) {
    config.seed = *args.seed;
  } else if (!raw.contains("seed")) {
    config.seed = default_seed(kDefaultSimulateSeed);
  }
  config.validate();

  PatternTable pattern = scan_pattern(config);
  pattern = sample_counts(pattern, config.exposure, config.seed);

  const fs::path dir(args.out);
  ensure_dir(dir);
  std::ostringstream csv;
  write_pattern_csv(csv, pattern);
  const fs::path csv_path = dir / "pattern.csv";
  const fs::path meta_path = dir / "pattern.json";
  write_text(csv_path, csv.str());
  write_text(meta_path, dump(pattern_metadata(config, pattern)));

  manifest.set_config(config_to_json(config));
  manifest.set_seed(config.seed);
  manifest.add_artifact(csv_path);
  manifest.add_artifact(meta_path);
  manifest.write(dir);
  out << "wrote " << pattern.size() << " rows to " << csv_path.string() << "\n";
  return kOk;
}

struct OracleArgs {
  int trials = 500;
  std::optional<std::uint64_t> seed;
  int max_modes = 7;
  std::string out = ".";
  bool corrupt_sign = false;
};

int cmd_oracle_check(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  Manifest manifest("oracle-check");
  EquivalenceOptions opts;
  opts.trials = args.trials;
  opts.seed = args.seed ? *args.seed : default_seed(kDefaultOracleSeed);
  opts.max_modes = args.max_modes;
  opts.corrupt_sign = args.corrupt_sign;
  const EquivalenceReport rep = run_equivalence_suite(opts);

  const bool passed = rep.max_abs_error < kOracleTolerance;
  const json report{{"trials", rep.trials},
                    {"seed", rep.seed},
                    {"max_modes", rep.max_modes},
                    {"evaluations", rep.evaluations},
                    {"max_abs_error", rep.max_abs_error},
                    {"min_probability", rep.min_probability},
                    {"max_imag_part", rep.max_imag_part},
                    {"tolerance", kOracleTolerance},
                    {"passed", passed}};
  const fs::path dir(args.out);
  ensure_dir(dir);
  const fs::path report_path = dir / "oracle_report.json";
  write_text(report_path, dump(report));
  out << dump(report);

  manifest.set_config(json{{"trials", args.trials},
                           {"max_modes", args.max_modes},
                           {"corrupt_sign", args.corrupt_sign}});
  manifest.set_seed(opts.seed);
  manifest.add_artifact(report_path);
  manifest.write(dir);
  if (!passed) {
    err << "oracle-check: max_abs_error " << format_double(rep.max_abs_error)
        << " exceeds tolerance " << kOracleTolerance << "\n";
    return kOracleMismatch;
  }
  return kOk;
}

struct FitArgs {
  std::string pattern;
  std::string weighting = "poisson";
  std::string model = "two_boson_laser";
  std::string response = "auto";
  std::string out;
};

int cmd_fit(const FitArgs& args, std::ostream& out) {
  Manifest manifest("fit");
  FitOptions opts;
  opts.weighting = parse_weighting(args.weighting);
  opts.model = parse_fit_model(args.model);
  opts.response = parse_response(args.response);

  std::ifstream is(args.pattern, std::ios::binary);
  if (!is) throw FormatError("cannot read " + args.pattern);
  const PatternTable pattern = read_pattern_csv(is);
  const AlphaEstimate est = fit_alphas(pattern, opts);
  const json report = fit_report(est, opts);

  fs::path dir = args.out.empty() ? fs::path(args.pattern).parent_path() : fs::path(args.out);
  if (dir.empty()) dir = ".";
  ensure_dir(dir);
  const fs::path report_path = dir / "fit_report.json";
  write_text(report_path, dump(report));
  out << dump(report);

  manifest.set_config(json{{"pattern", args.pattern},
                           {"weighting", args.weighting},
                           {"model", args.model},
                           {"response", args.response}});
  manifest.add_artifact(report_path);
  manifest.write(dir);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-particle detection probabilities, Fock-space cross-checks and "
               "interference-pattern calibration"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Scan a detector across an interference "
                                                  "pattern and sample counts");
  simulate->add_option("--config", sim.config, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.out, "Output directory")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Override the RNG seed");

  OracleArgs orc;
  auto* oracle = app.add_subcommand(
      "oracle-check", "Compare closed forms with brute-force Fock-space expectations");
  oracle->add_option("--trials", orc.trials, "Random states to test")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--seed", orc.seed, "RNG seed");
  oracle->add_option("--max-modes", orc.max_modes, "Largest (odd) mode count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--out", orc.out, "Output directory")->capture_default_str();
  oracle->add_flag("--corrupt-sign", orc.corrupt_sign,
                   "Negative control: flip the exchange sign in the closed forms")
      ->group("");

  FitArgs fit;
  auto* fitcmd = app.add_subcommand("fit", "Fit alpha_sin and alpha_dou to a pattern CSV");
  fitcmd->add_option("--pattern", fit.pattern, "Pattern CSV")
      ->required()
      ->check(CLI::ExistingFile);
  fitcmd->add_option("--weighting", fit.weighting, "Residual weights")
      ->capture_default_str()
      ->check(CLI::IsMember({"uniform", "poisson"}));
  fitcmd->add_option("--model", fit.model, "Basis functions: (2u, 2u^2) or (u, u^2)")
      ->capture_default_str()
      ->check(CLI::IsMember({"two_boson_laser", "general"}));
  fitcmd->add_option("--response", fit.response, "Fitted column")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "p_det", "counts"}));
  fitcmd->add_option("--out", fit.out, "Report directory (default: next to the CSV)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim, out);
    if (oracle->parsed()) return cmd_oracle_check(orc, out, err);
    if (fitcmd->parsed()) return cmd_fit(fit, out);
  } catch (const DegenerateState& e) {
    err << "error: degenerate state: " << e.what() << "\n";
    return kDegenerateState;
  } catch (const CollinearDesign& e) {
    err << "error: " << e.what() << "\n";
    return kCollinearDesign;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace multidet::cli
