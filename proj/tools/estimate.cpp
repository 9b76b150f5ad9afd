// Scenario-driven guaranteed state estimation runner.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zonest/zonest.hpp"

namespace {

std::vector<zonest::MethodId> parse_method_list(const std::string& list) {
  std::vector<zonest::MethodId> methods;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) methods.push_back(zonest::parse_method(item));
  }
  if (methods.empty()) throw zonest::ParseError("--methods: empty list");
  return methods;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guaranteed set-membership state estimation with constrained "
               "zonotopes and zonotope bundles"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir, methods_list, family_spec;
  int steps = -1;
  long samples = -1;
  std::int64_t seed = -1;

  CLI::App* run = app.add_subcommand("run", "run a scenario and write outputs");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--methods", methods_list, "comma-separated method subset");
  run->add_option("--steps", steps, "override step count");
  run->add_option("--seed", seed, "override RNG seed");
  run->add_option("--samples", samples, "override volume/containment sample count");
  run->add_option("--family", family_spec,
                  "remainder family: canonical | canonical+K | exhaustive");

  CLI::App* check = app.add_subcommand("check", "validate a scenario file");
  check->add_option("--scenario", scenario_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    zonest::Scenario sc = zonest::Scenario::load(scenario_path);
    if (app.got_subcommand(check)) {
      sc.validate();
      std::cout << "scenario ok: model=" << sc.model_name
                << " steps=" << sc.steps << " methods=" << sc.methods.size()
                << "\n";
      return 0;
    }
    if (!methods_list.empty()) sc.methods = parse_method_list(methods_list);
    if (steps > 0) sc.steps = steps;
    if (seed >= 0) sc.seed = static_cast<std::uint64_t>(seed);
    if (samples >= 0) sc.samples = samples;
    if (!family_spec.empty())
      sc.family = zonest::family_from_string(family_spec, sc.seed);
    return zonest::run_scenario(sc, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
