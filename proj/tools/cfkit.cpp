// Copyright 2026 The cfkit Authors
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfkit/workbench.hpp"

namespace {

int emit(const cfkit::CommandResult& r, const std::string& output = {}) {
  if (output.empty()) {
    std::cout << r.out;
  } else if (!r.out.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << output << "\n";
      return cfkit::kExitUsage;
    }
    f << r.out;
  }
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cfkit: finite CF-approximation spaces and their domains"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cfkit 0.1.0");

  std::string path;
  bool oracle = false;
  std::vector<std::string> check_paths;
  std::size_t random_count = 0;
  std::uint64_t seed = 0;
  std::size_t universe = 0, family = 0;
  bool topological = false;
  std::string format = "json";
  std::string output;

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("path", path, "Instance file")->required();

  auto* closed = app.add_subcommand("closed-sets", "List the CF-closed sets of a cf_space instance");
  closed->add_option("path", path, "Instance file")->required();
  closed->add_flag("--oracle", oracle, "Use the exponential engine and compare with the reduced one");

  auto* check = app.add_subcommand("check", "Run the invariant battery");
  check->add_option("paths", check_paths, "Instance files or directories");
  check->add_option("--random", random_count, "Number of seeded random instances");
  check->add_option("--seed", seed, "Seed for random instances");

  auto* gen = app.add_subcommand("gen", "Generate a random cf_space instance");
  gen->add_option("--universe,-n", universe, "Universe size (at most 10)")->required();
  gen->add_option("--family,-k", family, "Family size (at most 8)")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_flag("--topological", topological, "Make the relation a preorder");
  gen->add_option("--output,-o", output, "Write to a file instead of stdout");

  auto* exp = app.add_subcommand("export", "Export an instance as canonical JSON or DOT");
  exp->add_option("path", path, "Instance file")->required();
  exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--output,-o", output, "Write to a file instead of stdout");

  auto* represent = app.add_subcommand("represent", "Build the canonical CF-space of a poset");
  represent->add_option("path", path, "Poset instance file")->required();
  represent->add_option("--output,-o", output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cfkit::kExitUsage;
  }

  const cfkit::Guards guards = cfkit::Guards::from_env();
  if (*validate) return emit(cfkit::cmd_validate(path, guards));
  if (*closed) return emit(cfkit::cmd_closed_sets(path, oracle, guards));
  if (*check) {
    if (check_paths.empty() && random_count == 0) {
      std::cerr << "check: give instance paths, --random N, or both\n";
      return cfkit::kExitUsage;
    }
    return emit(cfkit::cmd_check(check_paths, random_count, seed, guards));
  }
  if (*gen) return emit(cfkit::cmd_gen(universe, family, seed, topological), output);
  if (*exp) {
    const auto f = format == "dot" ? cfkit::ExportFormat::dot : cfkit::ExportFormat::json;
    return emit(cfkit::cmd_export(path, f, guards), output);
  }
  if (*represent) return emit(cfkit::cmd_represent(path, guards), output);
  return cfkit::kExitUsage;
}
