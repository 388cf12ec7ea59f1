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

#include "dlw/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dlw {

// ---------------------------------------------------------------------------
// Extension

namespace {

std::size_t slot(Tag tag) {
  return static_cast<std::size_t>(tag.symbol) * 2 +
         (tag.sign == Sign::kPlus ? 0 : 1);
}

}  // namespace

namespace {
std::vector<Literal> sorted_unique(std::vector<Literal> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
}  // namespace

Extension::Extension(Logic logic, std::vector<Literal> language)
    : logic_(logic),
      language_(std::make_shared<const std::vector<Literal>>(
          sorted_unique(std::move(language)))) {
  for (Symbol s : symbols_of(logic_)) {
    bits_[slot(plus(s))].assign(language_->size(), 0);
    bits_[slot(minus(s))].assign(language_->size(), 0);
  }
}

int Extension::index_of(const Literal& q) const {
  auto it = std::lower_bound(language_->begin(), language_->end(), q);
  if (it == language_->end() || *it != q) return -1;
  return static_cast<int>(it - language_->begin());
}

std::vector<char>& Extension::bits(Tag tag) { return bits_[slot(tag)]; }
const std::vector<char>& Extension::bits(Tag tag) const {
  return bits_[slot(tag)];
}

bool Extension::contains(Tag tag, int literal) const {
  const auto& b = bits(tag);
  return literal >= 0 && static_cast<std::size_t>(literal) < b.size() &&
         b[literal] != 0;
}

bool Extension::contains(Tag tag, const Literal& q) const {
  return contains(tag, index_of(q));
}

bool Extension::insert(Tag tag, int literal) {
  auto& b = bits(tag);
  if (b.empty() && !language_->empty()) {
    throw std::invalid_argument("tag " + tag.str() + " is not part of " +
                                std::string(logic_name(logic_)));
  }
  if (b[literal]) return false;
  b[literal] = 1;
  ++count_;
  return true;
}

bool Extension::insert(const TaggedConclusion& c) {
  int i = index_of(c.literal);
  if (i < 0) {
    throw std::invalid_argument("literal " + c.literal.str() +
                                " is outside the extension's language");
  }
  return insert(c.tag, i);
}

LiteralSet Extension::literals(Tag tag) const {
  LiteralSet out;
  const auto& b = bits(tag);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) out.insert((*language_)[i]);
  }
  return out;
}

std::vector<TaggedConclusion> Extension::conclusions() const {
  std::vector<std::pair<std::string, TaggedConclusion>> keyed;
  for (Symbol s : symbols_of(logic_)) {
    for (Tag tag : {plus(s), minus(s)}) {
      const auto& b = bits(tag);
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!b[i]) continue;
        TaggedConclusion c{tag, (*language_)[i]};
        keyed.emplace_back(c.str(), c);
      }
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TaggedConclusion> out;
  out.reserve(keyed.size());
  for (auto& [key, c] : keyed) out.push_back(std::move(c));
  return out;
}

bool Extension::subset_of(const Extension& other) const {
  if (logic_ != other.logic_ || language() != other.language()) {
    throw std::invalid_argument("extensions are not comparable");
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    for (std::size_t i = 0; i < bits_[k].size(); ++i) {
      if (bits_[k][i] && !other.bits_[k][i]) return false;
    }
  }
  return true;
}

bool Extension::operator==(const Extension& other) const {
  return logic_ == other.logic_ && language() == other.language() &&
         bits_ == other.bits_;
}

// ---------------------------------------------------------------------------
// Engine

struct Engine::Compiled {
  struct CompiledRule {
    int head;
    std::vector<int> body;
    ArrowKind arrow;
    std::vector<int> beats;  // sorted indices s with this > s
  };

  std::vector<Literal> language;
  std::vector<int> complement;
  std::vector<char> is_fact;
  std::vector<CompiledRule> rules;
  std::vector<std::vector<int>> strict_for;      // R_s[q]
  std::vector<std::vector<int>> supporting_for;  // R_sd[q]
  std::vector<std::vector<int>> all_for;         // R[q]

  bool superior(int r, int s) const {
    const auto& b = rules[r].beats;
    return std::binary_search(b.begin(), b.end(), s);
  }
};

namespace {

using Compiled = Engine::Compiled;

/// Evaluates the inference conditions against a fixed conclusion set E.
class ClauseEvaluator {
 public:
  ClauseEvaluator(const Compiled& c, const Extension& e) : c_(c), e_(e) {}

  bool has(Tag tag, int q) const { return e_.contains(tag, q); }

  bool body_all(int rule, Tag tag) const {
    for (int a : c_.rules[rule].body) {
      if (!has(tag, a)) return false;
    }
    return true;
  }
  bool body_any(int rule, Tag tag) const {
    for (int a : c_.rules[rule].body) {
      if (has(tag, a)) return true;
    }
    return false;
  }

  // The returned string is the clause that fired, empty if none did.

  std::string plus_definite(int q) const {
    if (c_.is_fact[q]) return ".1";
    for (int r : c_.strict_for[q]) {
      if (body_all(r, plus(Symbol::kDefinite))) return ".2";
    }
    return {};
  }

  std::string minus_definite(int q) const {
    if (c_.is_fact[q]) return {};
    for (int r : c_.strict_for[q]) {
      if (!body_any(r, minus(Symbol::kDefinite))) return {};
    }
    return ".2";
  }

  // +partial / +delta: team defeat. `attack` is the tag whose absence
  // (negative form) disables an opposing rule: partial for partial, sigma
  // for delta.
  std::string plus_team(int q, Symbol d, Symbol attack) const {
    if (has(plus(Symbol::kDefinite), q)) return ".1";
    int nq = c_.complement[q];
    bool applicable = false;
    for (int r : c_.supporting_for[q]) {
      if (body_all(r, plus(d))) {
        applicable = true;
        break;
      }
    }
    if (!applicable || !has(minus(Symbol::kDefinite), nq)) return {};
    bool used_team = false;
    for (int s : c_.all_for[nq]) {
      if (body_any(s, minus(attack))) continue;
      bool beaten = false;
      for (int t : c_.supporting_for[q]) {
        if (c_.superior(t, s) && body_all(t, plus(d))) {
          beaten = true;
          break;
        }
      }
      if (!beaten) return {};
      used_team = true;
    }
    if (used_team) return ".2.3.2";
    return c_.all_for[nq].empty() ? ".2" : ".2.3.1";
  }

  std::string minus_team(int q, Symbol d, Symbol attack) const {
    if (!has(minus(Symbol::kDefinite), q)) return {};
    bool all_fail = true;
    for (int r : c_.supporting_for[q]) {
      if (!body_any(r, minus(d))) {
        all_fail = false;
        break;
      }
    }
    if (all_fail) return ".2.1";
    int nq = c_.complement[q];
    if (has(plus(Symbol::kDefinite), nq)) return ".2.2";
    for (int s : c_.all_for[nq]) {
      if (!body_all(s, plus(attack))) continue;
      bool unbeaten = true;
      for (int t : c_.supporting_for[q]) {
        if (!body_any(t, minus(d)) && c_.superior(t, s)) {
          unbeaten = false;
          break;
        }
      }
      if (unbeaten) return ".2.3";
    }
    return {};
  }

  // +partial* / +delta*: a single rule must beat every live opponent.
  std::string plus_single(int q, Symbol d, Symbol attack) const {
    if (has(plus(Symbol::kDefinite), q)) return ".1";
    int nq = c_.complement[q];
    if (!has(minus(Symbol::kDefinite), nq)) return {};
    for (int r : c_.supporting_for[q]) {
      if (!body_all(r, plus(d))) continue;
      bool wins = true;
      for (int s : c_.all_for[nq]) {
        if (!body_any(s, minus(attack)) && !c_.superior(r, s)) {
          wins = false;
          break;
        }
      }
      if (wins) return ".2";
    }
    return {};
  }

  std::string minus_single(int q, Symbol d, Symbol attack) const {
    if (!has(minus(Symbol::kDefinite), q)) return {};
    int nq = c_.complement[q];
    bool opposed_strictly = has(plus(Symbol::kDefinite), nq);
    for (int r : c_.supporting_for[q]) {
      if (body_any(r, minus(d)) || opposed_strictly) continue;
      bool blocked = false;
      for (int s : c_.all_for[nq]) {
        if (body_all(s, plus(attack)) && !c_.superior(r, s)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) return {};
    }
    return ".2";
  }

  // +sigma / +sigma*: `d` is the main tag of the same logic.
  std::string plus_support(int q, Symbol sigma, Symbol d) const {
    if (has(plus(Symbol::kDefinite), q)) return ".1";
    int nq = c_.complement[q];
    for (int r : c_.supporting_for[q]) {
      if (!body_all(r, plus(sigma))) continue;
      bool supported = true;
      for (int s : c_.all_for[nq]) {
        if (!body_any(s, minus(d)) && c_.superior(s, r)) {
          supported = false;
          break;
        }
      }
      if (supported) return ".2";
    }
    return {};
  }

  std::string minus_support(int q, Symbol sigma, Symbol d) const {
    if (!has(minus(Symbol::kDefinite), q)) return {};
    int nq = c_.complement[q];
    for (int r : c_.supporting_for[q]) {
      if (body_any(r, minus(sigma))) continue;
      bool overruled = false;
      for (int s : c_.all_for[nq]) {
        if (c_.superior(s, r) && body_all(s, plus(d))) {
          overruled = true;
          break;
        }
      }
      if (!overruled) return {};
    }
    return ".2";
  }

  std::string evaluate(Tag tag, int q) const {
    bool pos = tag.sign == Sign::kPlus;
    switch (tag.symbol) {
      case Symbol::kDefinite:
        return pos ? plus_definite(q) : minus_definite(q);
      case Symbol::kPartial:
        return pos ? plus_team(q, Symbol::kPartial, Symbol::kPartial)
                   : minus_team(q, Symbol::kPartial, Symbol::kPartial);
      case Symbol::kDelta:
        return pos ? plus_team(q, Symbol::kDelta, Symbol::kSigma)
                   : minus_team(q, Symbol::kDelta, Symbol::kSigma);
      case Symbol::kPartialStar:
        return pos ? plus_single(q, Symbol::kPartialStar, Symbol::kPartialStar)
                   : minus_single(q, Symbol::kPartialStar,
                                  Symbol::kPartialStar);
      case Symbol::kDeltaStar:
        return pos ? plus_single(q, Symbol::kDeltaStar, Symbol::kSigmaStar)
                   : minus_single(q, Symbol::kDeltaStar, Symbol::kSigmaStar);
      case Symbol::kSigma:
        return pos ? plus_support(q, Symbol::kSigma, Symbol::kDelta)
                   : minus_support(q, Symbol::kSigma, Symbol::kDelta);
      case Symbol::kSigmaStar:
        return pos ? plus_support(q, Symbol::kSigmaStar, Symbol::kDeltaStar)
                   : minus_support(q, Symbol::kSigmaStar, Symbol::kDeltaStar);
    }
    return {};
  }

 private:
  const Compiled& c_;
  const Extension& e_;
};

}  // namespace

Engine::Engine(const Theory& theory) : compiled_(std::make_unique<Compiled>()) {
  if (auto violations = validate(theory); !violations.empty()) {
    throw TheoryError(std::move(violations));
  }
  Compiled& c = *compiled_;
  LiteralSet lang = language_of(theory);
  c.language.assign(lang.begin(), lang.end());
  auto index = [&](const Literal& q) {
    return static_cast<int>(
        std::lower_bound(c.language.begin(), c.language.end(), q) -
        c.language.begin());
  };
  const std::size_t n = c.language.size();
  c.complement.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.complement[i] = index(c.language[i].complement());
  }
  c.is_fact.assign(n, 0);
  for (const Literal& f : theory.facts()) c.is_fact[index(f)] = 1;

  c.strict_for.resize(n);
  c.supporting_for.resize(n);
  c.all_for.resize(n);
  std::map<std::string, int> by_label;
  for (const Rule& r : theory.rules()) {
    Compiled::CompiledRule cr;
    cr.head = index(r.head());
    cr.arrow = r.arrow();
    for (const Literal& a : r.body()) cr.body.push_back(index(a));
    int id = static_cast<int>(c.rules.size());
    by_label.emplace(r.label(), id);
    c.all_for[cr.head].push_back(id);
    if (r.supports()) c.supporting_for[cr.head].push_back(id);
    if (r.is_strict()) c.strict_for[cr.head].push_back(id);
    c.rules.push_back(std::move(cr));
  }
  for (const auto& [sup, inf] : theory.superiority()) {
    c.rules[by_label.at(sup)].beats.push_back(by_label.at(inf));
  }
  for (auto& r : c.rules) std::sort(r.beats.begin(), r.beats.end());
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

const std::vector<Literal>& Engine::language() const {
  return compiled_->language;
}

Extension Engine::empty_extension(Logic logic) const {
  return Extension(logic, compiled_->language);
}

Extension Engine::step(const Extension& current, InferenceTrace* trace,
                       std::size_t iteration) const {
  if (current.language() != compiled_->language) {
    throw std::invalid_argument("extension is over a different language");
  }
  Extension next = current;
  ClauseEvaluator eval(*compiled_, current);
  const Logic logic = current.logic();
  const int n = static_cast<int>(compiled_->language.size());
  for (Symbol s : symbols_of(logic)) {
    for (Tag tag : {plus(s), minus(s)}) {
      for (int q = 0; q < n; ++q) {
        if (current.contains(tag, q)) continue;
        std::string clause = eval.evaluate(tag, q);
        if (clause.empty()) continue;
        next.insert(tag, q);
        if (trace) {
          trace->push_back(
              {iteration, {tag, compiled_->language[q]}, tag.str() + clause});
        }
      }
    }
  }
  return next;
}

Extension Engine::extension(Logic logic, InferenceTrace* trace) const {
  Extension current = empty_extension(logic);
  std::size_t iterations = 0;
  for (;;) {
    Extension next = step(current, trace, iterations + 1);
    if (next.size() == current.size()) break;
    current = std::move(next);
    ++iterations;
  }
  current.set_iterations(iterations);
  return current;
}

Extension step(const Theory& theory, Logic logic, const Extension& current) {
  Engine engine(theory);
  if (current.logic() != logic) {
    throw std::invalid_argument("extension belongs to another logic");
  }
  return engine.step(current);
}

Extension extension(const Theory& theory, Logic logic) {
  return Engine(theory).extension(logic);
}

bool prove(const Theory& theory, Logic logic, const TaggedConclusion& c) {
  if (!logic_has_symbol(logic, c.tag.symbol)) {
    throw std::invalid_argument("tag " + c.tag.str() + " does not belong to " +
                                std::string(logic_name(logic)));
  }
  LiteralSet lang = language_of(theory);
  if (!lang.contains(c.literal)) {
    Theory widened = theory;
    widened.declare_atom(c.literal.atom());
    return extension(widened, logic).contains(c);
  }
  return extension(theory, logic).contains(c);
}

std::size_t iteration_bound(Logic logic, std::size_t language_size) {
  return 2 * symbols_of(logic).size() * language_size;
}

std::string format_conclusions(const Extension& extension) {
  std::string out;
  for (const TaggedConclusion& c : extension.conclusions()) {
    out += c.str();
    out += '\n';
  }
  return out;
}

std::string format_trace(const InferenceTrace& trace) {
  std::ostringstream os;
  for (const TraceEntry& t : trace) {
    os << t.iteration << '\t' << t.conclusion.str() << '\t' << t.clause
       << '\n';
  }
  return os.str();
}

}  // namespace dlw
