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

#include "dlw/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "dlw/engine.hpp"
#include "dlw/parser.hpp"

namespace dlw {
namespace {

const std::map<std::string, std::string> kFiles = {
    {"ambiguity.dl", R"(# Ambiguity about p blocks or propagates into q.
r1: => p.
r2: => ~p.
r3: => q.
r4: ~p => ~q.
)"},
    {"ambiguity.expect", R"(-partial p
-partial ~p
+partial q
-partial ~q
+partialstar q
-partialstar ~q
-delta q
-delta ~p
-delta ~q
+sigma p
+sigma ~p
+sigma q
+sigma ~q
)"},
    {"empty.dl", R"(# No rules and no facts, only a declared atom.
language p.
)"},
    {"empty.expect", R"(-Delta p
-Delta ~p
-partial p
-partial ~p
-partialstar p
-partialstar ~p
-delta p
-delta ~p
-sigma p
-sigma ~p
-deltastar p
-deltastar ~p
-sigmastar p
-sigmastar ~p
)"},
    {"platypus.dl", R"(# Each rule against mammal is beaten by a different rule for it.
fact monotreme.
fact hasFur.
fact laysEggs.
fact hasBill.
r1: monotreme => mammal.
r2: hasFur => mammal.
r3: laysEggs => ~mammal.
r4: hasBill => ~mammal.
r1 > r3.
r2 > r4.
)"},
    {"platypus.expect", R"(+Delta monotreme
+Delta hasFur
+Delta laysEggs
+Delta hasBill
-Delta mammal
-Delta ~mammal
+partial mammal
-partial ~mammal
+delta mammal
-delta ~mammal
-partialstar mammal
-partialstar ~mammal
-deltastar mammal
-deltastar ~mammal
)"},
    {"team-addition.dl", R"(# Empty theory over p; the addition separates team from single defeat.
language p.
)"},
    {"team-addition.add.dl", R"(r1: => p.
r2: => p.
r3: => ~p.
r4: => ~p.
r1 > r3.
r2 > r4.
)"},
    {"team-addition.expect", R"(+partial p
-partial ~p
-partialstar p
-partialstar ~p
+delta p
-delta ~p
-deltastar p
-deltastar ~p
)"},
    {"two-teams.dl", R"(# Two teams of two; each opposing rule loses to one rule of the other team.
r1: => p.
r2: => p.
r3: => ~p.
r4: => ~p.
r1 > r3.
r2 > r4.
)"},
    {"two-teams.expect", R"(+partial p
-partial ~p
-partialstar p
-partialstar ~p
)"},
    {"two-teams.ntd2td.expect", R"(-partial p
-partial ~p
)"},
    {"two-teams-td2ntd.dl", R"(# Same theory, run through td2ntd.
# R3 for (r_i, r_j) tests strict(q) for the head q of r_j, so the
# pairs (r3, r1), (r3, r2), (r4, r1), (r4, r2) test $strict_p and the
# pairs (r1, r3), (r1, r4), (r2, r3), (r2, r4) test $strict_np.
r1: => p.
r2: => p.
r3: => ~p.
r4: => ~p.
r1 > r3.
r2 > r4.
)"},
    {"two-teams-td2ntd.expect", R"(+partial p
-partial ~p
)"},
    {"two-teams-td2ntd.td2ntd.expect", R"(+partialstar $d_r3_r1
+partialstar $d_r4_r2
+partialstar $d_r3
+partialstar $d_r4
+partialstar p
-partialstar ~p
)"},
    {"ambiguity-addition.dl", R"(# Ambiguity blocking against propagation under a rule addition.
language p, q.
r1: => p.
r2: => ~p.
)"},
    {"ambiguity-addition.add.dl", R"(r3: => ~p.
r4: => q.
r5: ~p => ~q.
)"},
    {"ambiguity-addition.expect", R"(-Delta p
-Delta ~p
-Delta q
-Delta ~q
+partial q
+partialstar q
-delta q
-deltastar q
)"},
    {"support-pair.dl", R"(# Two unbeaten opposing rules: both sides supported, neither proved.
=> q.
=> ~q.
)"},
    {"support-pair.expect", R"(+sigma q
+sigma ~q
+sigmastar q
+sigmastar ~q
-partial q
-partial ~q
-partialstar q
-partialstar ~q
-delta q
-delta ~q
-deltastar q
-deltastar ~q
)"},
};

std::string first_comment(const std::string& text) {
  if (!text.starts_with("# ")) return "";
  return text.substr(2, text.find('\n') - 2);
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  for (const auto& [file, text] : kFiles) {
    if (!file.ends_with(".dl") || file.ends_with(".add.dl")) continue;
    Fixture f;
    f.name = file.substr(0, file.size() - 3);
    f.description = first_comment(text);
    f.theory = parse_theory(text);
    if (auto it = kFiles.find(f.name + ".add.dl"); it != kFiles.end()) {
      f.addition = parse_theory(it->second);
    }
    if (auto it = kFiles.find(f.name + ".expect"); it != kFiles.end()) {
      f.expected = parse_expectations(it->second);
    }
    for (TransformKind kind :
         {TransformKind::kNtdToTd, TransformKind::kTdToNtd,
          TransformKind::kConclusionTable, TransformKind::kConjecture}) {
      auto it = kFiles.find(f.name + "." + std::string(transform_name(kind)) +
                            ".expect");
      if (it == kFiles.end()) continue;
      f.transform = kind;
      f.transformed_expected = parse_expectations(it->second);
    }
    out.push_back(std::move(f));
  }
  return out;
}

void check(const Theory& theory, const std::vector<TaggedConclusion>& lines,
           const std::string& what, FixtureResult& result) {
  const Engine engine(theory);
  std::map<Logic, Extension> cache;
  auto ext = [&](Logic logic) -> const Extension& {
    auto it = cache.find(logic);
    if (it == cache.end()) {
      it = cache.emplace(logic, engine.extension(logic)).first;
    }
    return it->second;
  };
  for (const TaggedConclusion& c : lines) {
    std::vector<Logic> logics;
    if (auto owner = owning_logic(c.tag.symbol)) {
      logics.push_back(*owner);
    } else {
      logics.assign(kAllLogics.begin(), kAllLogics.end());
    }
    for (Logic logic : logics) {
      ++result.checked;
      if (!ext(logic).contains(c)) {
        result.failures.push_back(what + ": " + std::string(logic_name(logic)) +
                                  " does not derive " + c.str());
      }
    }
  }
}

}  // namespace

Theory Fixture::combined() const {
  return addition ? add(theory, *addition) : theory;
}

const std::map<std::string, std::string>& fixture_files() { return kFiles; }

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
  const auto& all = builtin_fixtures();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Fixture& f) { return f.name == name; });
  return it == all.end() ? nullptr : &*it;
}

std::vector<TaggedConclusion> parse_expectations(std::string_view text) {
  std::vector<TaggedConclusion> out;
  int number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++number;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#' || line == "\r") continue;
    auto c = parse_conclusion(line);
    if (!c) {
      throw std::invalid_argument("line " + std::to_string(number) +
                                  ": not a conclusion: " + std::string(line));
    }
    out.push_back(*c);
  }
  return out;
}

FixtureResult run_fixture(const Fixture& fixture) {
  FixtureResult result;
  result.name = fixture.name;
  check(fixture.combined(), fixture.expected, fixture.name, result);
  if (fixture.transform) {
    const TransformReport report =
        run_transform(*fixture.transform, fixture.theory);
    check(report.output, fixture.transformed_expected,
          fixture.name + "." + std::string(transform_name(*fixture.transform)),
          result);
  }
  return result;
}

}  // namespace dlw
