// Copyright 2026 The rglorot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rglorot/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <memory>
#include <stdexcept>

#include "rglorot/cli/commands.hpp"
#include "rglorot/types.hpp"

#ifndef RGLOROT_VERSION
#define RGLOROT_VERSION "0.0.0"
#endif

namespace rglorot::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void report(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

// `--defaults fig1` shifts the built-in defaults before flags and the
// config file are applied on top.
std::string preset_from(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--defaults" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--defaults=", 0) == 0) return args[i].substr(11);
  }
  return "";
}

struct Common {
  std::string out;
  std::string defaults;
};

struct Command {
  CLI::App* app = nullptr;
  std::function<json()> config;
  std::function<CommandResult(const fs::path&)> run;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output stem: writes <stem>.csv, <stem>.summary.json, <stem>.manifest.json");
  sub->add_option("--defaults", c.defaults, "Default preset")->check(CLI::IsMember({"fig1"}));
  sub->fallthrough();
}

// Optional doubles: bound to a plain value, engaged only when given.
struct OptionalFlag {
  double value = 0.0;
  CLI::Option* option = nullptr;
  void resolve(std::optional<double>& target) const {
    if (option->count() > 0) target = value;
  }
};

std::shared_ptr<OptionalFlag> add_optional(CLI::App* sub, const std::string& name, const std::string& help) {
  auto f = std::make_shared<OptionalFlag>();
  f->option = sub->add_option(name, f->value, help);
  return f;
}

}  // namespace

std::string version() { return RGLOROT_VERSION; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  const std::string preset = preset_from(args);

  RadiusHistOptions radius;
  PropagationOptions powers, hidden;
  hidden.steps = 200;
  MomentBoundOptions moment;
  RescaleFactorOptions rescale;
  RealDensityOptions density;
  AsymptoticsOptions asym;
  if (preset == "fig1") {
    radius.n = powers.n = hidden.n = 500;
    radius.field = powers.field = hidden.field = "real";
    radius.trials = 100;
    powers.matrix_trials = hidden.matrix_trials = 100;
    powers.input_trials = hidden.input_trials = 50;
    powers.steps = 120;
    hidden.steps = 400;
  }

  CLI::App app{"Spectral radius, signal propagation and moment bounds of random recurrent weight matrices"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file; keys mirror the long flags, one [section] per command");
  app.set_version_flag("--version", version());

  std::vector<Common> commons(7);
  std::vector<Command> commands;
  std::vector<std::function<void()>> finalizers;

  {
    auto* sub = app.add_subcommand("radius-hist", "Spectral radius of independent ensemble samples");
    sub->add_option("--n", radius.n, "Width")->capture_default_str();
    sub->add_option("--field", radius.field, "real|complex")->capture_default_str();
    sub->add_option("--ensemble", radius.ensemble, "Ensemble name")->capture_default_str();
    sub->add_option("--trials", radius.trials, "Number of matrices")->capture_default_str();
    auto ap = add_optional(sub, "--a-p", "Gumbel offset for rescaled");
    sub->add_option("--seed", radius.seed, "Seed")->capture_default_str();
    sub->add_option("--threads", radius.threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_common(sub, commons[0]);
    finalizers.push_back([ap, &radius] { ap->resolve(radius.a_p); });
    commands.push_back({sub, [&] { return json(radius); }, [&](const fs::path& s) { return run_radius_hist(radius, s); }});
  }
  const auto add_propagation = [&](const std::string& name, const std::string& help, const std::string& steps_flag,
                                   PropagationOptions& o, Common& common, auto runner) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--n", o.n, "Width")->capture_default_str();
    sub->add_option("--field", o.field, "real|complex")->capture_default_str();
    sub->add_option("--ensemble", o.ensemble, "Ensemble name")->capture_default_str();
    auto ap = add_optional(sub, "--a-p", "Gumbel offset for rescaled");
    sub->add_option(steps_flag, o.steps, "Last step")->capture_default_str();
    sub->add_option("--matrix-trials", o.matrix_trials, "Matrices")->capture_default_str();
    sub->add_option("--input-trials", o.input_trials, "Input sequences per matrix")->capture_default_str();
    sub->add_option("--input-law", o.input_law, "real|complex")->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_common(sub, common);
    finalizers.push_back([ap, &o] { ap->resolve(o.a_p); });
    commands.push_back({sub, [&o] { return json(o); }, [&o, runner](const fs::path& s) { return runner(o, s); }});
  };
  add_propagation("matrix-powers", "Norms |W^k x| over k", "--k-max", powers, commons[1], run_matrix_powers);
  add_propagation("hidden-states", "Hidden-state norms of h_t = W h_{t-1} + x_t", "--t-max", hidden, commons[2],
                  run_hidden_states);
  {
    auto* sub = app.add_subcommand("moment-bound", "Lower bound on E|W^k x|^2 against Monte Carlo");
    sub->add_option("--n", moment.n, "Width")->capture_default_str();
    sub->add_option("--k-max", moment.k_max, "Largest power")->capture_default_str();
    sub->add_option("--mc-trials", moment.mc_trials, "(W, x) pairs; 0 = analytic only")->capture_default_str();
    sub->add_option("--seed", moment.seed, "Seed")->capture_default_str();
    sub->add_option("--threads", moment.threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_common(sub, commons[3]);
    commands.push_back({sub, [&] { return json(moment); }, [&](const fs::path& s) { return run_moment_bound(moment, s); }});
  }
  {
    auto* sub = app.add_subcommand("rescale-factor", "Rescaling factor for a target stability probability");
    sub->add_option("--n", rescale.n, "Width")->capture_default_str();
    sub->add_option("--field", rescale.field, "real|complex")->capture_default_str();
    auto p = add_optional(sub, "--p", "Target probability (Gumbel quantile)");
    auto ap = add_optional(sub, "--a-p", "Gumbel offset");
    add_common(sub, commons[4]);
    finalizers.push_back([p, ap, &rescale] {
      p->resolve(rescale.p);
      ap->resolve(rescale.a_p);
    });
    commands.push_back(
        {sub, [&] { return json(rescale); }, [&](const fs::path& s) { return run_rescale_factor(rescale, s); }});
  }
  {
    auto* sub = app.add_subcommand("real-density", "Real-ensemble eigenvalue densities, counts and moments");
    sub->add_option("--n", density.n, "Width")->capture_default_str();
    sub->add_option("--x-min", density.x_min, "Density grid start")->capture_default_str();
    sub->add_option("--x-max", density.x_max, "Density grid end")->capture_default_str();
    sub->add_option("--points", density.points, "Density grid points")->capture_default_str();
    sub->add_option("--k", density.k, "Moment orders")->delimiter(',')->capture_default_str();
    sub->add_option("--mc-trials", density.mc_trials, "Monte-Carlo matrices; 0 = quadrature only")
        ->capture_default_str();
    sub->add_option("--seed", density.seed, "Seed")->capture_default_str();
    sub->add_option("--threads", density.threads, "Worker threads (0 = all cores)")->capture_default_str();
    add_common(sub, commons[5]);
    commands.push_back(
        {sub, [&] { return json(density); }, [&](const fs::path& s) { return run_real_density(density, s); }});
  }
  {
    auto* sub = app.add_subcommand("asymptotics", "log[(n+k)!/(n! n^k)] against alpha^2/2 at k = ceil(alpha sqrt n)");
    sub->add_option("--alpha", asym.alpha, "alpha values")->delimiter(',')->capture_default_str();
    sub->add_option("--n", asym.n, "Widths")->delimiter(',')->capture_default_str();
    add_common(sub, commons[6]);
    commands.push_back({sub, [&] { return json(asym); }, [&](const fs::path& s) { return run_asymptotics(asym, s); }});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    report(err, "usage", e.what());
    return kExitUsage;
  }
  for (auto& f : finalizers) f();

  std::size_t index = 0;
  while (!commands[index].app->parsed()) ++index;
  const Command& cmd = commands[index];
  const std::string name = cmd.app->get_name();

  fs::path stem = commons[index].out;
  if (stem.empty()) {
    const char* dir = std::getenv(kOutDirEnv);
    stem = fs::path(dir && *dir ? dir : ".") / name;
  }

  try {
    CommandResult result = cmd.run(stem);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json outputs = json::array();
    for (const auto& p : result.outputs) outputs.push_back(p.string());
    const json config = cmd.config();
    json manifest = {
        {"command", name},
        {"version", version()},
        {"config", config},
        {"seed", config.contains("seed") ? config["seed"] : json(nullptr)},
        {"preset", preset.empty() ? json(nullptr) : json(preset)},
        {"wall_time_s", wall},
        {"outputs", outputs},
    };
    write_text_file(fs::path(stem.string() + ".manifest.json"), manifest.dump(2) + "\n");
    out << result.summary.dump() << '\n';
    if (result.numerical_failure) {
      report(err, "numerical", "some trials failed; see failures in the summary");
      return kExitNumerical;
    }
    return kExitOk;
  } catch (const NumericalError& e) {
    report(err, "numerical", e.what());
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    report(err, "usage", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    report(err, "usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report(err, "io", e.what());
    return kExitIo;
  }
}

}  // namespace rglorot::cli
