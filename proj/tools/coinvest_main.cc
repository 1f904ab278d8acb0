// Copyright 2026 The Coinvest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run scenario sweeps, verify game properties and
// list the figure presets.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coinvest/config.h"
#include "coinvest/pipeline.h"
#include "coinvest/presets.h"
#include "coinvest/records_csv.h"
#include "coinvest/sweep.h"

namespace {

enum ExitCode { kOk = 0, kValidationError = 1, kCheckFailure = 2, kIoError = 3 };

// `preset:NAME` selects a shipped preset, anything else is a file path.
coinvest::RunConfig ResolveConfig(const std::string& source) {
  constexpr std::string_view kPrefix = "preset:";
  if (source.starts_with(kPrefix)) {
    const std::string name = source.substr(kPrefix.size());
    const std::optional<coinvest::Preset> preset = coinvest::FindPreset(name);
    if (!preset) throw coinvest::ConfigError("unknown preset '" + name + "'");
    return coinvest::ParseConfig(preset->config_json);
  }
  return coinvest::LoadConfigFile(source);
}

int RunCommand(const std::string& source, const std::string& out,
               bool strict, std::optional<std::uint64_t> seed,
               const std::string& method, std::optional<std::int64_t> samples) {
  coinvest::RunConfig config = ResolveConfig(source);
  if (!out.empty()) config.output_dir = out;
  if (seed) config.seed = *seed;
  if (!method.empty()) config.method = coinvest::ParseShapleyMethod(method);
  if (samples) config.samples = *samples;
  config.Validate();

  const coinvest::RunResult result = coinvest::ExecuteRun(config);
  coinvest::WriteRunOutputs(config, result, config.output_dir);
  std::cout << "wrote " << result.records.size() << " instances to "
            << config.output_dir.string() << "\n";
  if (!result.AllChecksPass()) {
    std::cerr << "property check failed; see summary.json\n";
    if (strict) return kCheckFailure;
  }
  return kOk;
}

int VerifyCommand(const std::string& source) {
  const coinvest::RunConfig config = ResolveConfig(source);
  bool ok = true;
  for (const coinvest::PropertyOutcome& p : coinvest::VerifyConfig(config)) {
    std::cout << (p.passed ? "PASS " : "FAIL ") << p.name;
    if (!p.detail.empty()) std::cout << " (" << p.detail << ")";
    std::cout << "\n";
    ok = ok && p.passed;
  }
  return ok ? kOk : kCheckFailure;
}

int PresetsCommand(const std::string& write_dir) {
  for (const coinvest::Preset& p : coinvest::Presets()) {
    std::cout << p.name << "\t" << p.description << "\n";
    if (!write_dir.empty()) {
      std::filesystem::create_directories(write_dir);
      coinvest::WriteFileAtomically(
          std::filesystem::path(write_dir) / (std::string(p.name) + ".json"),
          p.config_json);
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coinvestment game solver for network owners and service providers"};
  app.set_version_flag("--version", std::string(coinvest::kToolVersion));
  app.require_subcommand(1);

  std::string config_source;
  std::string out_dir;
  bool strict = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::string method;
  CLI::App* run = app.add_subcommand("run", "Solve a scenario and write records.csv, summary.json, meta.json");
  run->add_option("config", config_source, "Config file or preset:NAME")->required();
  run->add_option("--out", out_dir, "Output directory (overrides output_dir)");
  run->add_flag("--strict", strict, "Exit 2 if any property check fails");
  run->add_option("--seed", seed, "Random seed for permutation sampling");
  run->add_option("--method", method, "Shapley method")
      ->check(CLI::IsMember({"enum", "closed", "sample"}));
  run->add_option("--samples", samples, "Permutations for --method sample");

  std::string verify_source;
  CLI::App* verify = app.add_subcommand("verify", "Run the property checks and print PASS/FAIL per property");
  verify->add_option("config", verify_source, "Config file or preset:NAME")->required();

  std::string write_dir;
  CLI::App* presets = app.add_subcommand("presets", "List the built-in presets");
  presets->add_option("--write", write_dir, "Also write each preset to DIR/NAME.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidationError;
  }

  try {
    if (*run) {
      return RunCommand(config_source, out_dir, strict, seed, method, samples);
    }
    if (*verify) return VerifyCommand(verify_source);
    return PresetsCommand(write_dir);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const coinvest::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
}
