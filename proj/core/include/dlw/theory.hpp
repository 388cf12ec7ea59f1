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

#ifndef DLW_THEORY_HPP_
#define DLW_THEORY_HPP_

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlw/literal.hpp"

namespace dlw {

enum class ArrowKind { kStrict, kDefeasible, kDefeater };

/// `->`, `=>` or `~>`.
std::string_view arrow_text(ArrowKind kind);

/// A labelled rule `label: body arrow head`. The body is kept sorted and
/// free of duplicates so that two rules with the same literal set compare
/// equal regardless of how they were written.
class Rule {
 public:
  Rule() = default;
  Rule(std::string label, std::vector<Literal> body, ArrowKind arrow,
       Literal head);

  const std::string& label() const { return label_; }
  const std::vector<Literal>& body() const { return body_; }
  ArrowKind arrow() const { return arrow_; }
  const Literal& head() const { return head_; }

  bool is_strict() const { return arrow_ == ArrowKind::kStrict; }
  bool is_defeater() const { return arrow_ == ArrowKind::kDefeater; }
  /// Member of R_sd: strict or defeasible.
  bool supports() const { return arrow_ != ArrowKind::kDefeater; }

  Rule relabeled(std::string label) const;

  bool operator==(const Rule&) const = default;

 private:
  std::string label_;
  std::vector<Literal> body_;
  ArrowKind arrow_ = ArrowKind::kDefeasible;
  Literal head_;
};

struct SuperiorityPair {
  std::string superior;
  std::string inferior;

  auto operator<=>(const SuperiorityPair&) const = default;
  bool operator==(const SuperiorityPair&) const = default;
};

/// A propositional defeasible theory (facts, rules, superiority). The
/// declared atoms extend the language beyond the symbols that occur in the
/// theory, so an empty theory can still talk about `p`.
///
/// Mutators exist for construction only; well-formedness is checked by
/// validate() rather than enforced on every insertion.
class Theory {
 public:
  const LiteralSet& facts() const { return facts_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::set<SuperiorityPair>& superiority() const { return superiority_; }
  const std::set<std::string>& declared_atoms() const { return declared_; }

  void add_fact(Literal fact) { facts_.insert(std::move(fact)); }
  void add_rule(Rule rule) { rules_.push_back(std::move(rule)); }
  void add_superiority(std::string superior, std::string inferior) {
    superiority_.insert({std::move(superior), std::move(inferior)});
  }
  void declare_atom(std::string atom) { declared_.insert(std::move(atom)); }

  bool empty() const {
    return facts_.empty() && rules_.empty() && superiority_.empty() &&
           declared_.empty();
  }

  /// Index of the rule with this label, or -1.
  int find_rule(std::string_view label) const;

  bool operator==(const Theory&) const = default;

 private:
  LiteralSet facts_;
  std::vector<Rule> rules_;
  std::set<SuperiorityPair> superiority_;
  std::set<std::string> declared_;
};

struct Violation {
  enum class Kind {
    kSuperiorityCycle,
    kDanglingLabel,
    kDuplicateLabel,
    kBadIdentifier,
    kNonOpposingSuperiority,  // lint only
  };
  Kind kind;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Thrown when an operation needs a well-formed theory and does not get one.
class TheoryError : public std::runtime_error {
 public:
  explicit TheoryError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Well-formedness: unique labels, superiority names existing rules and is
/// acyclic, atoms and labels are identifiers. Empty result means ok.
std::vector<Violation> validate(const Theory& theory);

/// Warnings that do not affect inference, e.g. superiority between rules
/// whose heads do not oppose.
std::vector<Violation> lint(const Theory& theory);

/// All literals occurring in the theory plus the declared atoms, closed
/// under complement.
LiteralSet language_of(const Theory& theory);

/// Atoms of language_of().
std::set<std::string> atoms_of(const Theory& theory);

/// D + A: componentwise union. Rules of A whose labels are already taken are
/// renamed `<label>_<k>` with the smallest free k >= 2, and A's superiority
/// pairs follow the renaming. Throws TheoryError if the union is not well
/// formed (for instance a superiority cycle across D and A).
Theory add(const Theory& base, const Theory& addition);

/// Symbol count: one per fact and declared atom, |body| + 2 per rule (body
/// literals, arrow, head) and two per superiority pair.
std::size_t theory_size(const Theory& theory);

}  // namespace dlw

#endif  // DLW_THEORY_HPP_
