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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock and include theory
// generation.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dlw/engine.hpp"
#include "dlw/fixtures.hpp"
#include "dlw/random_theory.hpp"
#include "dlw/simulation.hpp"
#include "dlw/transforms.hpp"

namespace {

using namespace dlw;
using Clock = std::chrono::steady_clock;

constexpr int kSmallCorpus = 200;  // <= 3 atoms, <= 6 rules
constexpr int kLargeCorpus = 500;  // <= 4 atoms, <= 8 rules
constexpr double kFixtureLimitS = 1.0;

Theory small_theory(int seed) {
  return random_theory(corpus_params(seed, 3, 6, 2));
}
Theory large_theory(int seed) {
  return random_theory(corpus_params(seed, 4, 8, 2));
}

Literal lit(const std::string& s) {
  return s[0] == '~' ? Literal(s.substr(1), false) : Literal(s);
}

TaggedConclusion tc(const std::string& s) { return *parse_conclusion(s); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

void require_all(const Extension& e, const std::vector<std::string>& lines,
                 Outcome& o) {
  for (const auto& line : lines) {
    o.expect(e.contains(tc(line)), std::string(logic_name(e.logic())) +
                                       " misses " + line);
  }
}

bool same_modulo_tags(const Extension& a, const Extension& b,
                      const LiteralSet& sigma) {
  TagCorrespondence corr(a.logic(), b.logic());
  return conclusions_modulo_tags(a, sigma, corr) ==
         conclusions_modulo_tags(b, sigma, corr);
}

Outcome platypus() {
  Outcome o;
  const Engine e(find_fixture("platypus")->theory);
  require_all(e.extension(Logic::kPartial), {"+partial mammal"}, o);
  require_all(e.extension(Logic::kDelta), {"+delta mammal"}, o);
  require_all(e.extension(Logic::kPartialStar),
              {"-partialstar mammal", "-partialstar ~mammal"}, o);
  require_all(e.extension(Logic::kDeltaStar),
              {"-deltastar mammal", "-deltastar ~mammal"}, o);
  return o;
}

Outcome ambiguity() {
  Outcome o;
  const Engine e(find_fixture("ambiguity")->theory);
  require_all(e.extension(Logic::kPartial),
              {"+partial q", "-partial ~q", "-partial ~p"}, o);
  require_all(e.extension(Logic::kDelta),
              {"-delta q", "-delta ~q", "+sigma p", "+sigma ~p", "+sigma q",
               "+sigma ~q"},
              o);
  return o;
}

Outcome two_teams() {
  Outcome o;
  const Theory d = find_fixture("two-teams")->theory;
  const TransformReport t = ntd_to_td(d);
  o.expect(t.output.rules().size() == 16,
           "rules " + std::to_string(t.output.rules().size()));
  o.expect(t.output.superiority().size() == 4,
           "pairs " + std::to_string(t.output.superiority().size()));
  const Extension target = Engine(t.output).extension(Logic::kPartial);
  require_all(target, {"-partial p", "-partial ~p"}, o);
  const Extension source = Engine(d).extension(Logic::kPartialStar);
  o.expect(same_modulo_tags(source, target, language_of(d)),
           "transform disagrees with the source under partialstar");
  return o;
}

Outcome two_teams_td2ntd() {
  Outcome o;
  const Theory d = find_fixture("two-teams-td2ntd")->theory;
  const TransformReport t = td_to_ntd(d);
  const Extension target = Engine(t.output).extension(Logic::kPartialStar);
  require_all(target,
              {"+partialstar $d_r3", "+partialstar $d_r4", "+partialstar p"},
              o);
  const Extension source = Engine(d).extension(Logic::kPartial);
  require_all(source, {"+partial p"}, o);
  o.expect(same_modulo_tags(source, target, language_of(d)),
           "transform disagrees with the source under partial");
  return o;
}

Outcome conclusion_table() {
  Outcome o;
  for (int seed = 1; seed <= kSmallCorpus && o.ok; ++seed) {
    const Theory d = small_theory(seed);
    const LiteralSet sigma = language_of(d);
    const Engine engine(d);
    for (Logic l1 : kAllLogics) {
      const Extension e1 = engine.extension(l1);
      const Engine table(conclusion_table_theory(e1, sigma));
      for (Logic l2 : kAllLogics) {
        if (!same_modulo_tags(e1, table.extension(l2), sigma)) {
          o.fail("seed " + std::to_string(seed) + " " +
                 std::string(logic_name(l1)) + " -> " +
                 std::string(logic_name(l2)));
        }
      }
    }
  }
  return o;
}

// Runs the whole corpus for every pair so the report says how many
// theories fail for which pair, not just the first one.
Outcome fact_simulation(TransformReport (*transform)(const Theory&),
                        std::initializer_list<std::pair<Logic, Logic>> pairs) {
  Outcome o;
  std::string summary;
  for (auto [l1, l2] : pairs) {
    int failures = 0;
    std::string first;
    for (int seed = 1; seed <= kSmallCorpus; ++seed) {
      const Theory d = small_theory(seed);
      const Theory t = transform(d).output;
      const auto additions = AdditionClass::facts(language_of(d));
      if (!additions.exhaustive()) o.fail("fact class not exhaustive");
      const SimulationVerdict v = check_simulation(d, l1, t, l2, additions);
      if (v.equivalent) continue;
      if (failures++ == 0) {
        first = "seed " + std::to_string(seed) + " addition " +
                std::to_string(v.counterexample->addition_index) + " on " +
                v.counterexample->conclusion.str();
      }
    }
    if (!summary.empty()) summary += "; ";
    summary += std::string(logic_name(l1)) + "/" +
               std::string(logic_name(l2)) + " " + std::to_string(failures) +
               " of " + std::to_string(kSmallCorpus) + " fail";
    if (failures > 0) {
      summary += " (first: " + first + ")";
      o.ok = false;
    }
  }
  if (!o.ok && o.detail.empty()) o.detail = summary;
  return o;
}

Outcome rule_addition() {
  Outcome o;
  const Fixture& f = *find_fixture("ambiguity-addition");
  const Engine e(f.combined());
  require_all(e.extension(Logic::kPartial), {"+partial q"}, o);
  require_all(e.extension(Logic::kPartialStar), {"+partialstar q"}, o);
  require_all(e.extension(Logic::kDelta), {"-delta q"}, o);
  require_all(e.extension(Logic::kDeltaStar), {"-deltastar q"}, o);
  const auto additions =
      AdditionClass::explicit_list(AdditionKind::kRules, {*f.addition});
  const Logic blocking[] = {Logic::kPartial, Logic::kPartialStar};
  const Logic propagating[] = {Logic::kDelta, Logic::kDeltaStar};
  for (Logic b : blocking) {
    for (Logic p : propagating) {
      for (auto [l1, l2] : {std::pair{b, p}, std::pair{p, b}}) {
        const auto v = check_simulation(f.theory, l1, f.theory, l2, additions);
        o.expect(!v.equivalent && v.counterexample->conclusion.literal ==
                                      lit("q"),
                 std::string(logic_name(l1)) + " vs " +
                     std::string(logic_name(l2)));
      }
    }
  }
  return o;
}

Outcome team_addition() {
  Outcome o;
  const Engine e(find_fixture("team-addition")->combined());
  require_all(e.extension(Logic::kPartial), {"+partial p"}, o);
  require_all(e.extension(Logic::kPartialStar), {"-partialstar p"}, o);
  return o;
}

// Signed tags ordered weakest-first by the inference-strength lattice: if
// (weak, strong) is listed then +weak is contained in +strong and -strong
// in -weak.
struct Edge {
  Logic weak_logic;
  Symbol weak;
  Logic strong_logic;
  Symbol strong;
};
constexpr Edge kLattice[] = {
    {Logic::kDeltaStar, Symbol::kDefinite, Logic::kDeltaStar,
     Symbol::kDeltaStar},
    {Logic::kDeltaStar, Symbol::kDeltaStar, Logic::kDelta, Symbol::kDelta},
    {Logic::kDelta, Symbol::kDelta, Logic::kPartial, Symbol::kPartial},
    {Logic::kPartial, Symbol::kPartial, Logic::kDelta, Symbol::kSigma},
    {Logic::kDelta, Symbol::kSigma, Logic::kDeltaStar, Symbol::kSigmaStar},
    {Logic::kDeltaStar, Symbol::kDeltaStar, Logic::kPartialStar,
     Symbol::kPartialStar},
    {Logic::kPartialStar, Symbol::kPartialStar, Logic::kDeltaStar,
     Symbol::kSigmaStar},
};

Outcome lattice() {
  Outcome o;
  for (int seed = 1; seed <= kLargeCorpus && o.ok; ++seed) {
    const Theory d = large_theory(seed);
    const Engine engine(d);
    std::vector<Extension> ext;
    for (Logic l : kAllLogics) ext.push_back(engine.extension(l));
    auto of = [&](Logic l) -> const Extension& {
      return ext[static_cast<int>(l)];
    };
    for (const Edge& edge : kLattice) {
      const auto& weak = of(edge.weak_logic);
      const auto& strong = of(edge.strong_logic);
      for (std::size_t i = 0; i < engine.language().size(); ++i) {
        const int q = static_cast<int>(i);
        if (weak.contains(plus(edge.weak), q) &&
            !strong.contains(plus(edge.strong), q)) {
          o.fail("seed " + std::to_string(seed) + " +" +
                 std::string(symbol_name(edge.weak)) + " not in +" +
                 std::string(symbol_name(edge.strong)));
        }
        if (strong.contains(minus(edge.strong), q) &&
            !weak.contains(minus(edge.weak), q)) {
          o.fail("seed " + std::to_string(seed) + " -" +
                 std::string(symbol_name(edge.strong)) + " not in -" +
                 std::string(symbol_name(edge.weak)));
        }
      }
    }
  }
  return o;
}

Outcome coherence_consistency() {
  Outcome o;
  for (int seed = 1; seed <= kLargeCorpus && o.ok; ++seed) {
    const Theory d = large_theory(seed);
    const Engine engine(d);
    const auto& lang = engine.language();
    for (Logic l : kAllLogics) {
      const Extension e = engine.extension(l);
      for (std::size_t i = 0; i < lang.size(); ++i) {
        const int q = static_cast<int>(i);
        const int nq = e.index_of(lang[i].complement());
        for (Symbol s : symbols_of(l)) {
          o.expect(!(e.contains(plus(s), q) && e.contains(minus(s), q)),
                   "seed " + std::to_string(seed) + " incoherent " +
                       std::string(symbol_name(s)) + " " + lang[i].str());
        }
        const Symbol d_main = main_symbol(l);
        if (e.contains(plus(d_main), q) && e.contains(plus(d_main), nq)) {
          o.expect(e.contains(plus(Symbol::kDefinite), q) &&
                       e.contains(plus(Symbol::kDefinite), nq),
                   "seed " + std::to_string(seed) + " inconsistent " +
                       std::string(logic_name(l)) + " " + lang[i].str());
        }
      }
    }
  }
  return o;
}

Outcome size_bound() {
  Outcome o;
  for (int seed = 1; seed <= kLargeCorpus && o.ok; ++seed) {
    const Theory d = large_theory(seed);
    const std::size_t n = theory_size(d);
    const std::size_t a = theory_size(ntd_to_td(d).output);
    const std::size_t b = theory_size(td_to_ntd(d).output);
    o.expect(a <= kNtdToTdSizeFactor * n * n,
             "seed " + std::to_string(seed) + " ntd2td " + std::to_string(a) +
                 " for input " + std::to_string(n));
    o.expect(b <= kTdToNtdSizeFactor * n * n,
             "seed " + std::to_string(seed) + " td2ntd " + std::to_string(b) +
                 " for input " + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_s;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  using L = Logic;
  const std::vector<Criterion> criteria = {
      {1, "platypus", kFixtureLimitS, platypus},
      {2, "ambiguity", kFixtureLimitS, ambiguity},
      {3, "ntd2td worked example", kFixtureLimitS, two_teams},
      {4, "td2ntd worked example", kFixtureLimitS, two_teams_td2ntd},
      {5, "conclusion table, 200 theories x 16 logic pairs", 120, conclusion_table},
      {6, "ntd2td simulation under fact additions, 200 theories", 600,
       [] {
         return fact_simulation(
             ntd_to_td, {{L::kPartialStar, L::kPartial},
                         {L::kDeltaStar, L::kDelta}});
       }},
      {7, "td2ntd simulation under fact additions, 200 theories", 600,
       [] {
         return fact_simulation(
             td_to_ntd, {{L::kPartial, L::kPartialStar},
                         {L::kDelta, L::kDeltaStar}});
       }},
      {8, "ambiguity non-simulation under rule addition", kFixtureLimitS,
       rule_addition},
      {9, "team defeat counterexample addition", kFixtureLimitS,
       team_addition},
      {10, "inference-strength lattice, 500 theories", 300, lattice},
      {11, "coherence and consistency, 500 theories", 0,
       coherence_consistency},
      {12, "quadratic size bound, 500 theories", 0, size_bound},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " +
             std::to_string(c.limit_s) + " s");
    }
    std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL",
                c.number, c.name, secs, o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
