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

#include "dlw/simulation.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "dlw/parser.hpp"

namespace dlw {

std::vector<Theory> fact_additions(const LiteralSet& base) {
  if (base.size() >= 63) throw std::length_error("fact base too large");
  const std::vector<Literal> lits(base.begin(), base.end());
  std::vector<Theory> out;
  const std::uint64_t n = std::uint64_t{1} << lits.size();
  out.reserve(n);
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    Theory a;
    for (std::size_t k = 0; k < lits.size(); ++k) {
      if (mask >> k & 1) a.add_fact(lits[k]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::string_view addition_kind_name(AdditionKind kind) {
  switch (kind) {
    case AdditionKind::kEmpty: return "empty";
    case AdditionKind::kFacts: return "facts";
    case AdditionKind::kRules: return "rules";
    case AdditionKind::kTheories: return "theories";
  }
  return "";
}

// ---------------------------------------------------------------------------
// AdditionClass

AdditionClass AdditionClass::empty() {
  AdditionClass c;
  c.kind_ = AdditionKind::kEmpty;
  return c;
}

AdditionClass AdditionClass::facts(const LiteralSet& base, std::uint64_t seed,
                                   std::size_t samples) {
  AdditionClass c;
  c.kind_ = AdditionKind::kFacts;
  c.base_.assign(base.begin(), base.end());
  c.seed_ = seed;
  if (c.base_.size() > kExhaustiveFactBase) {
    c.exhaustive_ = false;
    std::mt19937_64 rng(seed);
    c.sampled_.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      std::vector<char> pick(c.base_.size());
      for (char& bit : pick) bit = static_cast<char>(rng() >> 63);
      c.sampled_.push_back(std::move(pick));
    }
  }
  return c;
}

AdditionClass AdditionClass::explicit_list(AdditionKind kind,
                                           std::vector<Theory> additions) {
  AdditionClass c;
  c.kind_ = kind;
  c.explicit_ = std::move(additions);
  return c;
}

std::size_t AdditionClass::size() const {
  switch (kind_) {
    case AdditionKind::kEmpty: return 1;
    case AdditionKind::kFacts:
      return exhaustive_ ? std::size_t{1} << base_.size() : sampled_.size();
    default: return explicit_.size();
  }
}

Theory AdditionClass::at(std::size_t index) const {
  switch (kind_) {
    case AdditionKind::kEmpty: return Theory{};
    case AdditionKind::kFacts: {
      Theory a;
      for (std::size_t k = 0; k < base_.size(); ++k) {
        bool take = exhaustive_ ? (index >> k & 1) != 0
                                : sampled_.at(index)[k] != 0;
        if (take) a.add_fact(base_[k]);
      }
      return a;
    }
    default: return explicit_.at(index);
  }
}

// ---------------------------------------------------------------------------

bool check_language_separation(const Theory& d1, const Theory& d2,
                               const Theory& addition) {
  const LiteralSet sigma1 = language_of(d1);
  const LiteralSet sigma2 = language_of(d2);
  for (const Literal& q : language_of(addition)) {
    if (sigma2.contains(q) && !sigma1.contains(q)) return false;
  }
  return true;
}

std::string NeutralConclusion::str() const {
  std::string out = strength == Strength::kStrict ? "strict" : "defeasible";
  out += sign == Sign::kPlus ? "+ " : "- ";
  return out + literal.str();
}

std::optional<Strength> TagCorrespondence::strength_of(Symbol symbol) const {
  if (symbol == Symbol::kDefinite) return Strength::kStrict;
  if (symbol == main_symbol(first_) || symbol == main_symbol(second_)) {
    return Strength::kDefeasible;
  }
  return std::nullopt;
}

Tag TagCorrespondence::tag_in(Logic logic, Strength strength, Sign sign) {
  return {sign, strength == Strength::kStrict ? Symbol::kDefinite
                                              : main_symbol(logic)};
}

ComparableConclusions conclusions_modulo_tags(const Extension& extension,
                                              const LiteralSet& sigma,
                                              const TagCorrespondence& corr) {
  if (!corr.covers(extension.logic())) {
    throw std::invalid_argument("tag correspondence does not cover " +
                                std::string(logic_name(extension.logic())));
  }
  ComparableConclusions out;
  for (const Literal& q : sigma) {
    int i = extension.index_of(q);
    if (i < 0) continue;
    for (Strength strength : {Strength::kStrict, Strength::kDefeasible}) {
      for (Sign sign : {Sign::kPlus, Sign::kMinus}) {
        Tag tag = TagCorrespondence::tag_in(extension.logic(), strength, sign);
        if (extension.contains(tag, i)) out.insert({q, strength, sign});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// check_simulation

namespace {

std::optional<Counterexample> compare_on(const Theory& d1, Logic l1,
                                         const Theory& d2, Logic l2,
                                         const Theory& addition,
                                         std::size_t index,
                                         const SimulationOptions& options) {
  const Theory left = add(d1, addition);
  const Theory right = add(d2, addition);
  LiteralSet sigma = language_of(d1);
  if (!options.restrict_to_source_language) {
    LiteralSet extra = language_of(addition);
    sigma.insert(extra.begin(), extra.end());
  }
  const TagCorrespondence corr(l1, l2);
  const auto c1 =
      conclusions_modulo_tags(Engine(left).extension(l1), sigma, corr);
  const auto c2 =
      conclusions_modulo_tags(Engine(right).extension(l2), sigma, corr);
  if (c1 == c2) return std::nullopt;

  std::vector<NeutralConclusion> only1, only2;
  std::set_difference(c1.begin(), c1.end(), c2.begin(), c2.end(),
                      std::back_inserter(only1));
  std::set_difference(c2.begin(), c2.end(), c1.begin(), c1.end(),
                      std::back_inserter(only2));
  Counterexample cx;
  cx.addition_index = index;
  cx.addition = addition;
  if (!only1.empty() && (only2.empty() || only1.front() < only2.front())) {
    cx.conclusion = only1.front();
    cx.concluding_side = 1;
  } else {
    cx.conclusion = only2.front();
    cx.concluding_side = 2;
  }
  cx.tagged = {TagCorrespondence::tag_in(cx.concluding_side == 1 ? l1 : l2,
                                         cx.conclusion.strength,
                                         cx.conclusion.sign),
               cx.conclusion.literal};
  return cx;
}

}  // namespace

SimulationVerdict check_simulation(const Theory& d1, Logic l1,
                                   const Theory& d2, Logic l2,
                                   const AdditionClass& additions,
                                   const SimulationOptions& options) {
  SimulationVerdict verdict;
  verdict.kind = additions.kind();
  verdict.exhaustive = additions.exhaustive();
  verdict.seed = additions.seed();

  const std::size_t total = additions.size();
  const std::size_t threads = std::max(1u, options.threads);
  const std::size_t batch = threads * 16;
  for (std::size_t begin = 0; begin < total; begin += batch) {
    const std::size_t end = std::min(total, begin + batch);
    std::vector<Theory> chunk;
    for (std::size_t i = begin; i < end; ++i) {
      chunk.push_back(additions.at(i));
      if (!check_language_separation(d1, d2, chunk.back())) {
        throw LanguageSeparationError(
            "addition " + std::to_string(i) +
            " uses symbols private to the simulating theory");
      }
    }
    std::vector<std::optional<Counterexample>> results(chunk.size());
    auto work = [&](std::size_t worker) {
      for (std::size_t k = worker; k < chunk.size(); k += threads) {
        results[k] = compare_on(d1, l1, d2, l2, chunk[k], begin + k, options);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
      ++verdict.additions_checked;
      if (results[k]) {
        verdict.equivalent = false;
        verdict.counterexample = std::move(results[k]);
        return verdict;
      }
    }
  }
  return verdict;
}

bool replay_counterexample(const Theory& d1, Logic l1, const Theory& d2,
                           Logic l2, const Counterexample& counterexample,
                           const SimulationOptions& options) {
  auto again = compare_on(d1, l1, d2, l2, counterexample.addition,
                          counterexample.addition_index, options);
  return again && again->conclusion == counterexample.conclusion &&
         again->concluding_side == counterexample.concluding_side;
}

std::string format_verdict(const SimulationVerdict& verdict, Logic l1,
                           Logic l2) {
  std::ostringstream os;
  os << (verdict.equivalent ? "equivalent" : "not-equivalent") << '\n';
  os << "logics " << logic_name(l1) << ' ' << logic_name(l2) << '\n';
  os << "additions " << addition_kind_name(verdict.kind) << ' '
     << verdict.additions_checked
     << (verdict.exhaustive ? " exhaustive" : " sampled") << '\n';
  if (!verdict.exhaustive) os << "seed " << verdict.seed << '\n';
  if (const auto& cx = verdict.counterexample) {
    const Logic concluding = cx->concluding_side == 1 ? l1 : l2;
    const Logic other = cx->concluding_side == 1 ? l2 : l1;
    os << "counterexample\n";
    os << "  addition-index " << cx->addition_index << '\n';
    os << "  literal " << cx->conclusion.literal << '\n';
    os << "  disagreement " << cx->conclusion.str() << '\n';
    os << "  side" << cx->concluding_side << ' ' << logic_name(concluding)
       << " concludes " << cx->tagged << '\n';
    os << "  side" << (3 - cx->concluding_side) << ' ' << logic_name(other)
       << " does not conclude "
       << TaggedConclusion{TagCorrespondence::tag_in(
                               other, cx->conclusion.strength,
                               cx->conclusion.sign),
                           cx->conclusion.literal}
       << '\n';
    os << "  addition-begin\n";
    std::istringstream text(render_theory(cx->addition));
    for (std::string line; std::getline(text, line);) {
      os << "    " << line << '\n';
    }
    os << "  addition-end\n";
  }
  return os.str();
}

}  // namespace dlw
