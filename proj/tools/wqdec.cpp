// wqdec: scenario-driven decoherence pipeline front end.
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "wqd/errors.hpp"
#include "wqd/presets.hpp"
#include "wqd/runner.hpp"
#include "wqd/scenario.hpp"

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitCausality = 3;
constexpr int kExitNonConvergence = 4;

int execute(const wqd::Scenario& scenario, const wqd::RunOptions& opt) {
  const wqd::RunOutput out = wqd::run_scenario(scenario, opt);
  wqd::write_outputs(out, opt);
  for (const auto& w : out.warnings) {
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  }
  bool nonconverged = false;
  for (const auto& s : out.series) nonconverged = nonconverged || !s.converged;
  std::printf("%s: %zu series, %zu sweep rows -> %s\n",
              out.scenario.name.c_str(), out.series.size(),
              out.sweep_rows.size(), opt.out_dir.c_str());
  if (opt.strict && nonconverged) return kExitNonConvergence;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relativistic topological-qubit decoherence pipeline"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string preset_name;
  wqd::RunOptions opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--jobs", opt.jobs, "worker thread count")->capture_default_str();
    cmd->add_option("--tol", opt.rel_tol, "relative quadrature target")
        ->capture_default_str();
    cmd->add_flag("--strict", opt.strict,
                  "exit with code 4 when a series does not converge");
  };

  CLI::App* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  add_common(run);

  CLI::App* preset = app.add_subcommand("preset", "run a named preset");
  preset->add_option("name", preset_name, "preset name (see list-presets)")
      ->required();
  add_common(preset);

  CLI::App* list = app.add_subcommand("list-presets", "print the preset catalog");
  (void)list;

  CLI::App* validate =
      app.add_subcommand("validate", "parse and validate a scenario file");
  validate->add_option("scenario", scenario_path, "scenario file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-presets")) {
      for (const auto& p : wqd::preset_catalog()) {
        std::printf("%-12s %s\n", p.name.c_str(), p.description.c_str());
      }
      std::printf("%zu presets\n", wqd::preset_catalog().size());
      return 0;
    }
    if (app.got_subcommand("validate")) {
      (void)wqd::load_scenario(scenario_path);
      std::printf("ok\n");
      return 0;
    }
    if (app.got_subcommand("run")) {
      return execute(wqd::load_scenario(scenario_path), opt);
    }
    // preset
    const wqd::Preset* p = wqd::find_preset(preset_name);
    if (!p) {
      std::fprintf(stderr, "unknown preset '%s' (try list-presets)\n",
                   preset_name.c_str());
      return kExitSchema;
    }
    return execute(p->scenario, opt);
  } catch (const wqd::SchemaError& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return kExitSchema;
  } catch (const wqd::CausalityError& e) {
    std::fprintf(stderr, "causality error: %s\n", e.what());
    return kExitCausality;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
