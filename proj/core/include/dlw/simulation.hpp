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

// Checking that one theory/logic pair simulates another: for every addition
// A of a class, D1 + A under L1 and D2 + A under L2 must draw the same strict
// (Delta) and defeasible (main tag) conclusions about the source language.

#ifndef DLW_SIMULATION_HPP_
#define DLW_SIMULATION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlw/engine.hpp"
#include "dlw/tags.hpp"
#include "dlw/theory.hpp"

namespace dlw {

/// Every subset of `base` as a fact-only theory. Subset i contains the k-th
/// literal of base (in sorted order) iff bit k of i is set.
std::vector<Theory> fact_additions(const LiteralSet& base);

enum class AdditionKind { kEmpty, kFacts, kRules, kTheories };

std::string_view addition_kind_name(AdditionKind kind);

/// A class of additions. Fact classes over a base of at most
/// kExhaustiveFactBase literals are enumerated exhaustively; larger bases are
/// sampled with a seeded generator and report exhaustive() == false. Rule
/// and theory classes are explicit lists.
class AdditionClass {
 public:
  static constexpr std::size_t kExhaustiveFactBase = 16;

  static AdditionClass empty();
  static AdditionClass facts(const LiteralSet& base, std::uint64_t seed = 0,
                             std::size_t samples = 4096);
  static AdditionClass explicit_list(AdditionKind kind,
                                     std::vector<Theory> additions);

  AdditionKind kind() const { return kind_; }
  std::size_t size() const;
  Theory at(std::size_t index) const;
  bool exhaustive() const { return exhaustive_; }
  std::uint64_t seed() const { return seed_; }
  /// log2 of the number of fact additions the class stands for; 0 for
  /// explicit lists.
  std::size_t base_size() const { return base_.size(); }

 private:
  AdditionKind kind_ = AdditionKind::kEmpty;
  std::vector<Literal> base_;
  std::vector<std::vector<char>> sampled_;  // used when !exhaustive_
  std::vector<Theory> explicit_;
  bool exhaustive_ = true;
  std::uint64_t seed_ = 0;
};

/// Sigma(A) intersect Sigma(D2) is a subset of Sigma(D1).
bool check_language_separation(const Theory& d1, const Theory& d2,
                               const Theory& addition);

enum class Strength { kStrict, kDefeasible };

/// A conclusion with the logic-specific tag replaced by its role.
struct NeutralConclusion {
  Literal literal;
  Strength strength;
  Sign sign;

  /// e.g. `defeasible+ mammal`, `strict- ~p`.
  std::string str() const;

  auto operator<=>(const NeutralConclusion&) const = default;
  bool operator==(const NeutralConclusion&) const = default;
};

/// Delta <-> Delta, main tag of the first logic <-> main tag of the second.
/// Support tags have no counterpart and are dropped.
class TagCorrespondence {
 public:
  TagCorrespondence(Logic first, Logic second)
      : first_(first), second_(second) {}

  Logic first() const { return first_; }
  Logic second() const { return second_; }
  bool covers(Logic logic) const {
    return logic == first_ || logic == second_;
  }
  std::optional<Strength> strength_of(Symbol symbol) const;
  /// The tag a logic uses for a neutral conclusion.
  static Tag tag_in(Logic logic, Strength strength, Sign sign);

 private:
  Logic first_;
  Logic second_;
};

using ComparableConclusions = std::set<NeutralConclusion>;

/// Restricts the extension to `sigma` and to the tags the correspondence
/// relates, renamed to their neutral form.
ComparableConclusions conclusions_modulo_tags(const Extension& extension,
                                              const LiteralSet& sigma,
                                              const TagCorrespondence& corr);

struct Counterexample {
  std::size_t addition_index = 0;
  Theory addition;
  NeutralConclusion conclusion;
  /// 1 or 2: the side that draws `conclusion`; the other side does not.
  int concluding_side = 1;
  TaggedConclusion tagged;  // `conclusion` in the concluding side's logic
};

struct SimulationVerdict {
  bool equivalent = true;
  std::optional<Counterexample> counterexample;
  std::size_t additions_checked = 0;
  AdditionKind kind = AdditionKind::kEmpty;
  bool exhaustive = true;
  std::uint64_t seed = 0;
};

struct SimulationOptions {
  /// Compare only over Sigma(D1) instead of Sigma(D1) + Sigma(A).
  bool restrict_to_source_language = false;
  /// Additions evaluated concurrently; the verdict does not depend on it.
  unsigned threads = 1;
};

/// Thrown when an addition of the class breaks language separation.
class LanguageSeparationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks every addition of the class in order and stops at the first one
/// on which the two sides disagree. The reported disagreement is the
/// smallest differing neutral conclusion (ordered by literal).
SimulationVerdict check_simulation(const Theory& d1, Logic l1,
                                   const Theory& d2, Logic l2,
                                   const AdditionClass& additions,
                                   const SimulationOptions& options = {});

/// Recomputes both sides on the counterexample's addition and reports
/// whether the same disagreement shows up.
bool replay_counterexample(const Theory& d1, Logic l1, const Theory& d2,
                           Logic l2, const Counterexample& counterexample,
                           const SimulationOptions& options = {});

/// Line-oriented report. The first line is `equivalent` or
/// `not-equivalent`.
std::string format_verdict(const SimulationVerdict& verdict, Logic l1,
                           Logic l2);

}  // namespace dlw

#endif  // DLW_SIMULATION_HPP_
