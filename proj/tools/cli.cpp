// Copyright 2026 The dlworkbench Authors
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

#include "cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dlw/engine.hpp"
#include "dlw/fixtures.hpp"
#include "dlw/parser.hpp"
#include "dlw/simulation.hpp"
#include "dlw/transforms.hpp"

namespace dlw::cli {
namespace {

namespace fs = std::filesystem;

// Bad input found after flag parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Logic logic_or_throw(const std::string& name) {
  auto logic = parse_logic(name);
  if (!logic) {
    throw UsageError("unknown logic '" + name +
                     "' (partial, partialstar, delta, deltastar)");
  }
  return *logic;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("DL_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-') {
    throw UsageError(std::string("DL_SEED is not an unsigned integer: ") +
                     env);
  }
  return v;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw UsageError("cannot write " + path.string());
}

struct InferArgs {
  std::string file;
  std::string logic;
  bool trace = false;
};

int cmd_infer(const InferArgs& a, std::ostream& out) {
  const Logic logic = logic_or_throw(a.logic);
  const Engine engine(load_theory(a.file));
  if (a.trace) {
    InferenceTrace trace;
    engine.extension(logic, &trace);
    out << format_trace(trace);
  } else {
    out << format_conclusions(engine.extension(logic));
  }
  return kExitOk;
}

struct TransformArgs {
  std::string file;
  std::string direction;
  std::string logic = "partial";
  std::string output;
};

int cmd_transform(const TransformArgs& a, std::ostream& out,
                  std::ostream& err) {
  auto kind = parse_transform(a.direction);
  if (!kind) {
    throw UsageError("unknown transform '" + a.direction +
                     "' (ntd2td, td2ntd, thm1, conjecture)");
  }
  const Logic logic = logic_or_throw(a.logic);
  const TransformReport report =
      run_transform(*kind, load_theory(a.file), logic);

  std::ostringstream size;
  size << "size " << report.input_size << " -> " << report.output_size;
  if (report.input_size > 0) {
    size << " ratio " << std::fixed << std::setprecision(3)
         << static_cast<double>(report.output_size) /
                static_cast<double>(report.input_size);
  }
  size << '\n';

  const std::string text = render_theory(report.output);
  if (a.output.empty()) {
    out << text;
    err << size.str();
  } else {
    write_file(a.output, text);
    write_file(a.output + ".map", format_mapping(report));
    out << "wrote " << a.output << " and " << a.output << ".map\n"
        << size.str();
  }
  return kExitOk;
}

struct SimcheckArgs {
  std::string file1, logic1, file2, logic2;
  std::string additions = "facts";
  std::size_t max_additions = 4096;
  std::optional<std::uint64_t> seed;
  bool sigma_d1_only = false;
  unsigned threads = 1;
};

AdditionKind kind_of(const Theory& a) {
  if (a.rules().empty() && a.superiority().empty()) {
    return AdditionKind::kFacts;
  }
  if (a.facts().empty()) return AdditionKind::kRules;
  return AdditionKind::kTheories;
}

int cmd_simcheck(const SimcheckArgs& a, std::ostream& out) {
  const Logic l1 = logic_or_throw(a.logic1);
  const Logic l2 = logic_or_throw(a.logic2);
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  const Theory d1 = load_theory(a.file1);
  const Theory d2 = load_theory(a.file2);

  AdditionClass additions = AdditionClass::empty();
  const std::string& spec = a.additions;
  if (spec == "facts") {
    additions = AdditionClass::facts(language_of(d1), seed, a.max_additions);
  } else if (spec == "empty") {
    additions = AdditionClass::empty();
  } else if (spec.starts_with("fixture:")) {
    const std::string name = spec.substr(8);
    const Fixture* f = find_fixture(name);
    if (f == nullptr) throw UsageError("no fixture named '" + name + "'");
    if (!f->addition) {
      throw UsageError("fixture '" + name + "' has no addition");
    }
    additions = AdditionClass::explicit_list(kind_of(*f->addition),
                                             {*f->addition});
  } else if (spec.starts_with("file:")) {
    Theory addition = load_theory(spec.substr(5));
    const AdditionKind kind = kind_of(addition);
    additions = AdditionClass::explicit_list(kind, {std::move(addition)});
  } else {
    throw UsageError("unknown addition class '" + spec +
                     "' (facts, empty, fixture:<name>, file:<path>)");
  }

  SimulationOptions options;
  options.restrict_to_source_language = a.sigma_d1_only;
  options.threads = a.threads;
  SimulationVerdict verdict;
  try {
    verdict = check_simulation(d1, l1, d2, l2, additions, options);
  } catch (const LanguageSeparationError& e) {
    throw UsageError(e.what());
  }
  out << "# dlw simcheck seed " << seed << '\n';
  out << format_verdict(verdict, l1, l2);
  return verdict.equivalent ? kExitOk : kExitCounterexample;
}

int cmd_fixtures_list(std::ostream& out) {
  for (const Fixture& f : builtin_fixtures()) {
    out << f.name << '\t' << f.description << '\n';
  }
  return kExitOk;
}

int cmd_fixtures_run(const std::vector<std::string>& names,
                     std::ostream& out) {
  std::vector<const Fixture*> selected;
  if (names.empty()) {
    for (const Fixture& f : builtin_fixtures()) selected.push_back(&f);
  }
  for (const std::string& name : names) {
    const Fixture* f = find_fixture(name);
    if (f == nullptr) throw UsageError("no fixture named '" + name + "'");
    selected.push_back(f);
  }
  int code = kExitOk;
  for (const Fixture* f : selected) {
    const FixtureResult r = run_fixture(*f);
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked
        << " checks)\n";
    for (const std::string& failure : r.failures) {
      out << "  " << failure << '\n';
    }
    if (!r.passed()) code = kExitCounterexample;
  }
  return code;
}

int cmd_fixtures_export(const std::string& dir, std::ostream& out) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + dir + ": " + ec.message());
  for (const auto& [name, text] : fixture_files()) {
    write_file(fs::path(dir) / name, text);
  }
  out << "wrote " << fixture_files().size() << " files to " << dir << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Defeasible logic workbench", "dlw"};
  app.require_subcommand(1);

  InferArgs infer;
  auto* infer_cmd =
      app.add_subcommand("infer", "Print the extension of a theory");
  infer_cmd->add_option("file", infer.file, "Theory (.dl)")->required();
  infer_cmd->add_option("--logic,-l", infer.logic, "Logic")->required();
  infer_cmd->add_flag("--trace", infer.trace,
                      "Print the inference trace instead");

  TransformArgs transform;
  auto* transform_cmd =
      app.add_subcommand("transform", "Rewrite a theory for another logic");
  transform_cmd->add_option("file", transform.file, "Theory (.dl)")
      ->required();
  transform_cmd
      ->add_option("direction", transform.direction,
                   "ntd2td, td2ntd, thm1 or conjecture")
      ->required();
  transform_cmd->add_option("--logic,-l", transform.logic,
                            "Source logic for thm1 and conjecture");
  transform_cmd->add_option("--output,-o", transform.output,
                            "Write the theory here and the mapping to <output>.map");

  SimcheckArgs sim;
  std::uint64_t seed_value = 0;
  auto* sim_cmd = app.add_subcommand(
      "simcheck", "Check that theory2/logic2 simulates theory1/logic1");
  sim_cmd->add_option("theory1", sim.file1)->required();
  sim_cmd->add_option("logic1", sim.logic1)->required();
  sim_cmd->add_option("theory2", sim.file2)->required();
  sim_cmd->add_option("logic2", sim.logic2)->required();
  sim_cmd->add_option("--additions,-a", sim.additions,
                      "facts, empty, fixture:<name> or file:<path>");
  sim_cmd->add_option("--max-additions", sim.max_additions,
                      "Sample size when the fact base is too large to enumerate")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = sim_cmd->add_option("--seed", seed_value,
                                       "Sampling seed (default: $DL_SEED or 0)");
  sim_cmd->add_flag("--sigma-d1-only", sim.sigma_d1_only,
                    "Compare over the language of theory1 only");
  sim_cmd->add_option("--threads,-j", sim.threads)->check(CLI::Range(1u, 256u));

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "Built-in reference theories");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->add_subcommand("list", "Name and description of each");
  std::vector<std::string> run_names;
  auto* run_cmd =
      fixtures_cmd->add_subcommand("run", "Check fixture expectations");
  run_cmd->add_option("names", run_names, "Fixtures (default: all)");
  std::string export_dir;
  auto* export_cmd =
      fixtures_cmd->add_subcommand("export", "Write the fixture files");
  export_cmd->add_option("dir", export_dir)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dlw: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*infer_cmd) return cmd_infer(infer, out);
    if (*transform_cmd) return cmd_transform(transform, out, err);
    if (*sim_cmd) {
      if (*seed_opt) sim.seed = seed_value;
      return cmd_simcheck(sim, out);
    }
    if (fixtures_cmd->got_subcommand("list")) return cmd_fixtures_list(out);
    if (*run_cmd) return cmd_fixtures_run(run_names, out);
    if (*export_cmd) return cmd_fixtures_export(export_dir, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dlw: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dlw::cli
