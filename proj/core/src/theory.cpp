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

#include "dlw/theory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dlw {

std::string_view arrow_text(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::kStrict: return "->";
    case ArrowKind::kDefeasible: return "=>";
    case ArrowKind::kDefeater: return "~>";
  }
  return "=>";
}

Rule::Rule(std::string label, std::vector<Literal> body, ArrowKind arrow,
           Literal head)
    : label_(std::move(label)),
      body_(std::move(body)),
      arrow_(arrow),
      head_(std::move(head)) {
  std::sort(body_.begin(), body_.end());
  body_.erase(std::unique(body_.begin(), body_.end()), body_.end());
}

Rule Rule::relabeled(std::string label) const {
  Rule copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

int Theory::find_rule(std::string_view label) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].label() == label) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::string describe_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "ill-formed theory";
  for (const Violation& v : violations) os << "; " << v.message;
  return os.str();
}

// Finds one cycle in the superiority graph, returned as a label path whose
// last element repeats the first. Empty if the graph is acyclic.
std::vector<std::string> find_superiority_cycle(
    const std::set<SuperiorityPair>& pairs) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [sup, inf] : pairs) {
    succ[sup].push_back(inf);
    succ.try_emplace(inf);
  }
  enum Color { kWhite, kGrey, kBlack };
  std::map<std::string, Color> color;
  std::vector<std::string> path;
  std::vector<std::string> cycle;

  auto dfs = [&](auto&& self, const std::string& node) -> bool {
    color[node] = kGrey;
    path.push_back(node);
    for (const std::string& next : succ[node]) {
      if (color[next] == kGrey) {
        auto start = std::find(path.begin(), path.end(), next);
        cycle.assign(start, path.end());
        cycle.push_back(next);
        return true;
      }
      if (color[next] == kWhite && self(self, next)) return true;
    }
    path.pop_back();
    color[node] = kBlack;
    return false;
  };
  for (const auto& [node, unused] : succ) {
    if (color[node] == kWhite && dfs(dfs, node)) break;
  }
  return cycle;
}

}  // namespace

TheoryError::TheoryError(std::vector<Violation> violations)
    : std::runtime_error(describe_violations(violations)),
      violations_(std::move(violations)) {}

std::vector<Violation> validate(const Theory& theory) {
  std::vector<Violation> out;
  using Kind = Violation::Kind;

  auto check_literal = [&](const Literal& q) {
    if (!is_identifier(q.atom())) {
      out.push_back({Kind::kBadIdentifier, "bad atom '" + q.atom() + "'"});
    }
  };
  for (const Literal& f : theory.facts()) check_literal(f);
  for (const std::string& atom : theory.declared_atoms()) {
    check_literal(Literal(atom));
  }

  std::set<std::string> labels;
  for (const Rule& r : theory.rules()) {
    if (!is_identifier(r.label())) {
      out.push_back({Kind::kBadIdentifier, "bad label '" + r.label() + "'"});
    }
    if (!labels.insert(r.label()).second) {
      out.push_back({Kind::kDuplicateLabel, "duplicate label " + r.label()});
    }
    for (const Literal& a : r.body()) check_literal(a);
    check_literal(r.head());
  }

  for (const auto& [sup, inf] : theory.superiority()) {
    for (const std::string* l : {&sup, &inf}) {
      if (!labels.contains(*l)) {
        out.push_back({Kind::kDanglingLabel,
                       "superiority " + sup + " > " + inf +
                           " names unknown rule " + *l});
      }
    }
  }

  auto cycle = find_superiority_cycle(theory.superiority());
  if (!cycle.empty()) {
    std::string msg = "superiority cycle ";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) msg += " > ";
      msg += cycle[i];
    }
    out.push_back({Kind::kSuperiorityCycle, msg});
  }
  return out;
}

std::vector<Violation> lint(const Theory& theory) {
  std::vector<Violation> out;
  for (const auto& [sup, inf] : theory.superiority()) {
    int i = theory.find_rule(sup);
    int j = theory.find_rule(inf);
    if (i < 0 || j < 0) continue;
    const Literal& a = theory.rules()[i].head();
    const Literal& b = theory.rules()[j].head();
    if (a.complement() != b) {
      out.push_back({Violation::Kind::kNonOpposingSuperiority,
                     "superiority " + sup + " > " + inf +
                         " relates rules whose heads do not oppose; it has "
                         "no effect"});
    }
  }
  return out;
}

LiteralSet language_of(const Theory& theory) {
  LiteralSet lits = theory.facts();
  for (const Rule& r : theory.rules()) {
    lits.insert(r.body().begin(), r.body().end());
    lits.insert(r.head());
  }
  for (const std::string& atom : theory.declared_atoms()) {
    lits.insert(Literal(atom));
  }
  return close_under_complement(lits);
}

std::set<std::string> atoms_of(const Theory& theory) {
  std::set<std::string> atoms;
  for (const Literal& q : language_of(theory)) atoms.insert(q.atom());
  return atoms;
}

Theory add(const Theory& base, const Theory& addition) {
  Theory out = base;
  for (const Literal& f : addition.facts()) out.add_fact(f);
  for (const std::string& a : addition.declared_atoms()) out.declare_atom(a);

  std::set<std::string> taken;
  for (const Rule& r : base.rules()) taken.insert(r.label());
  std::set<std::string> incoming;
  for (const Rule& r : addition.rules()) incoming.insert(r.label());

  std::map<std::string, std::string> renamed;
  for (const Rule& r : addition.rules()) {
    std::string label = r.label();
    if (taken.contains(label)) {
      for (int k = 2;; ++k) {
        std::string candidate = r.label() + "_" + std::to_string(k);
        if (!taken.contains(candidate) && !incoming.contains(candidate)) {
          label = std::move(candidate);
          break;
        }
      }
      renamed.emplace(r.label(), label);
    }
    taken.insert(label);
    out.add_rule(r.relabeled(label));
  }

  auto map_label = [&](const std::string& l) {
    auto it = renamed.find(l);
    return it == renamed.end() ? l : it->second;
  };
  for (const auto& [sup, inf] : addition.superiority()) {
    out.add_superiority(map_label(sup), map_label(inf));
  }

  if (auto violations = validate(out); !violations.empty()) {
    throw TheoryError(std::move(violations));
  }
  return out;
}

std::size_t theory_size(const Theory& theory) {
  std::size_t size = theory.facts().size() + theory.declared_atoms().size() +
                     2 * theory.superiority().size();
  for (const Rule& r : theory.rules()) size += r.body().size() + 2;
  return size;
}

}  // namespace dlw
