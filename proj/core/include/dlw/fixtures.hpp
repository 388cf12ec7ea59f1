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

// Reference theories with known conclusions. The text of every fixture is
// compiled in; `dlw fixtures export` writes it out as the files under
// fixtures/ in the source tree.
//
// File set of a fixture `name`:
//   name.dl                 the theory
//   name.add.dl             optional addition, checked against name.dl + it
//   name.expect             conclusions that must be derived
//   name.<transform>.expect conclusions of the transformed theory
//
// An expectation line `<sign><tag> <literal>` is checked under the logic
// that owns the tag; Delta lines are checked under all four logics.

#ifndef DLW_FIXTURES_HPP_
#define DLW_FIXTURES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlw/tags.hpp"
#include "dlw/theory.hpp"
#include "dlw/transforms.hpp"

namespace dlw {

struct Fixture {
  std::string name;
  std::string description;
  Theory theory;
  std::optional<Theory> addition;
  std::vector<TaggedConclusion> expected;
  std::optional<TransformKind> transform;
  std::vector<TaggedConclusion> transformed_expected;

  /// theory + addition, or just the theory.
  Theory combined() const;
};

/// File name -> contents, sorted by name.
const std::map<std::string, std::string>& fixture_files();

/// Parsed from fixture_files(), in name order.
const std::vector<Fixture>& builtin_fixtures();
const Fixture* find_fixture(std::string_view name);

/// Parses an expectation file. Blank lines and `#` comments are skipped.
/// Throws std::invalid_argument naming the line on malformed input.
std::vector<TaggedConclusion> parse_expectations(std::string_view text);

struct FixtureResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

FixtureResult run_fixture(const Fixture& fixture);

}  // namespace dlw

#endif  // DLW_FIXTURES_HPP_
