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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dlw/engine.hpp"
#include "dlw/fixtures.hpp"
#include "test_support.hpp"

namespace dlw {
namespace {

using testing::lit;
using testing::tc;

// Reference evaluator: the inference conditions written out over plain sets,
// one function per signed tag, with no indexing. Tags are "D" (Delta), "d"
// (main) and "s" (support).
class Reference {
 public:
  using Set = std::set<std::pair<std::string, Literal>>;

  Reference(const Theory& theory, Logic logic)
      : theory_(theory), logic_(logic), sigma_(language_of(theory)) {
    team_ = logic == Logic::kPartial || logic == Logic::kDelta;
    // Tag consulted for attacking rules: the main tag when ambiguity is
    // blocked, support when it propagates.
    attack_ = (logic == Logic::kDelta || logic == Logic::kDeltaStar) ? "s" : "d";
  }

  Set fixpoint() const {
    Set e;
    for (;;) {
      Set next = apply(e);
      if (next == e) return e;
      e = std::move(next);
    }
  }

  // Translation to engine conclusions.
  std::set<TaggedConclusion> tagged(const Set& e) const {
    std::set<TaggedConclusion> out;
    for (const auto& [tag, q] : e) {
      Symbol s = tag[1] == 'D' ? Symbol::kDefinite
                 : tag[1] == 'd' ? main_symbol(logic_)
                                 : *support_symbol(logic_);
      out.insert({{tag[0] == '+' ? Sign::kPlus : Sign::kMinus, s}, q});
    }
    return out;
  }

 private:
  Set apply(const Set& e) const {
    Set out;
    const bool support = support_symbol(logic_).has_value();
    for (const Literal& q : sigma_) {
      if (plus_D(e, q)) out.insert({"+D", q});
      if (minus_D(e, q)) out.insert({"-D", q});
      if (plus_d(e, q)) out.insert({"+d", q});
      if (minus_d(e, q)) out.insert({"-d", q});
      if (support && plus_s(e, q)) out.insert({"+s", q});
      if (support && minus_s(e, q)) out.insert({"-s", q});
    }
    return out;
  }

  static bool has(const Set& e, const std::string& tag, const Literal& q) {
    return e.contains({tag, q});
  }
  static bool all(const Set& e, const Rule& r, const std::string& tag) {
    for (const Literal& a : r.body()) {
      if (!has(e, tag, a)) return false;
    }
    return true;
  }
  static bool some(const Set& e, const Rule& r, const std::string& tag) {
    for (const Literal& a : r.body()) {
      if (has(e, tag, a)) return true;
    }
    return false;
  }
  bool sup(const Rule& a, const Rule& b) const {
    return theory_.superiority().contains({a.label(), b.label()});
  }
  bool fact(const Literal& q) const { return theory_.facts().contains(q); }

  std::vector<Rule> strict(const Literal& q) const {
    std::vector<Rule> out;
    for (const Rule& r : theory_.rules()) {
      if (r.head() == q && r.arrow() == ArrowKind::kStrict) out.push_back(r);
    }
    return out;
  }
  std::vector<Rule> supporting(const Literal& q) const {
    std::vector<Rule> out;
    for (const Rule& r : theory_.rules()) {
      if (r.head() == q && r.arrow() != ArrowKind::kDefeater) out.push_back(r);
    }
    return out;
  }
  std::vector<Rule> any(const Literal& q) const {
    std::vector<Rule> out;
    for (const Rule& r : theory_.rules()) {
      if (r.head() == q) out.push_back(r);
    }
    return out;
  }

  bool plus_D(const Set& e, const Literal& q) const {
    if (fact(q)) return true;
    for (const Rule& r : strict(q)) {
      if (all(e, r, "+D")) return true;
    }
    return false;
  }
  bool minus_D(const Set& e, const Literal& q) const {
    if (fact(q)) return false;
    for (const Rule& r : strict(q)) {
      if (!some(e, r, "-D")) return false;
    }
    return true;
  }

  bool plus_d(const Set& e, const Literal& q) const {
    if (has(e, "+D", q)) return true;
    const Literal nq = q.complement();
    if (!has(e, "-D", nq)) return false;
    const std::string neg_attack = "-" + attack_;
    if (team_) {
      bool applicable = false;
      for (const Rule& r : supporting(q)) applicable |= all(e, r, "+d");
      if (!applicable) return false;
      for (const Rule& s : any(nq)) {
        if (some(e, s, neg_attack)) continue;
        bool beaten = false;
        for (const Rule& t : supporting(q)) {
          beaten |= all(e, t, "+d") && sup(t, s);
        }
        if (!beaten) return false;
      }
      return true;
    }
    for (const Rule& r : supporting(q)) {
      if (!all(e, r, "+d")) continue;
      bool wins = true;
      for (const Rule& s : any(nq)) {
        wins &= some(e, s, neg_attack) || sup(r, s);
      }
      if (wins) return true;
    }
    return false;
  }

  bool minus_d(const Set& e, const Literal& q) const {
    if (!has(e, "-D", q)) return false;
    const Literal nq = q.complement();
    const std::string pos_attack = "+" + attack_;
    if (team_) {
      bool all_fail = true;
      for (const Rule& r : supporting(q)) all_fail &= some(e, r, "-d");
      if (all_fail || has(e, "+D", nq)) return true;
      for (const Rule& s : any(nq)) {
        if (!all(e, s, pos_attack)) continue;
        bool unbeaten = true;
        for (const Rule& t : supporting(q)) {
          unbeaten &= some(e, t, "-d") || !sup(t, s);
        }
        if (unbeaten) return true;
      }
      return false;
    }
    for (const Rule& r : supporting(q)) {
      if (some(e, r, "-d") || has(e, "+D", nq)) continue;
      bool blocked = false;
      for (const Rule& s : any(nq)) {
        blocked |= all(e, s, pos_attack) && !sup(r, s);
      }
      if (!blocked) return false;
    }
    return true;
  }

  bool plus_s(const Set& e, const Literal& q) const {
    if (has(e, "+D", q)) return true;
    for (const Rule& r : supporting(q)) {
      if (!all(e, r, "+s")) continue;
      bool ok = true;
      for (const Rule& s : any(q.complement())) {
        ok &= some(e, s, "-d") || !sup(s, r);
      }
      if (ok) return true;
    }
    return false;
  }

  bool minus_s(const Set& e, const Literal& q) const {
    if (!has(e, "-D", q)) return false;
    for (const Rule& r : supporting(q)) {
      if (some(e, r, "-s")) continue;
      bool beaten = false;
      for (const Rule& s : any(q.complement())) {
        beaten |= all(e, s, "+d") && sup(s, r);
      }
      if (!beaten) return false;
    }
    return true;
  }

  const Theory& theory_;
  Logic logic_;
  LiteralSet sigma_;
  bool team_;
  std::string attack_;
};

std::set<TaggedConclusion> as_set(const Extension& e) {
  auto c = e.conclusions();
  return {c.begin(), c.end()};
}

void expect_contains(const Extension& e,
                     std::initializer_list<const char*> lines) {
  for (const char* line : lines) {
    EXPECT_TRUE(e.contains(tc(line)))
        << logic_name(e.logic()) << " misses " << line;
  }
}

const Theory& fixture(const char* name) {
  const Fixture* f = find_fixture(name);
  if (f == nullptr) throw std::logic_error(name);
  return f->theory;
}

TEST(EngineExamplesTest, Platypus) {
  const Engine e(fixture("platypus"));
  expect_contains(e.extension(Logic::kPartial), {"+partial mammal"});
  expect_contains(e.extension(Logic::kDelta), {"+delta mammal"});
  expect_contains(e.extension(Logic::kPartialStar),
                  {"-partialstar mammal", "-partialstar ~mammal"});
  expect_contains(e.extension(Logic::kDeltaStar),
                  {"-deltastar mammal", "-deltastar ~mammal"});
}

TEST(EngineExamplesTest, Ambiguity) {
  const Engine e(fixture("ambiguity"));
  expect_contains(e.extension(Logic::kPartial),
                  {"+partial q", "-partial ~q", "-partial ~p"});
  expect_contains(e.extension(Logic::kPartialStar),
                  {"+partialstar q", "-partialstar ~q"});
  expect_contains(e.extension(Logic::kDelta),
                  {"-delta q", "-delta ~p", "-delta ~q", "+sigma p",
                   "+sigma ~p", "+sigma q", "+sigma ~q"});
}

TEST(EngineExamplesTest, SingleFact) {
  const Extension e = extension(parse_theory("fact q."), Logic::kPartial);
  EXPECT_EQ(as_set(e),
            (std::set<TaggedConclusion>{tc("+Delta q"), tc("+partial q"),
                                        tc("-Delta ~q"), tc("-partial ~q")}));
}

TEST(EngineExamplesTest, FirstStepOnPlatypus) {
  const Engine engine(fixture("platypus"));
  const Extension one = engine.step(engine.empty_extension(Logic::kPartial));
  std::set<TaggedConclusion> expected;
  for (const char* f : {"monotreme", "hasFur", "laysEggs", "hasBill"}) {
    expected.insert({plus(Symbol::kDefinite), lit(f)});
    expected.insert({minus(Symbol::kDefinite), lit(f).complement()});
  }
  expected.insert(tc("-Delta mammal"));
  expected.insert(tc("-Delta ~mammal"));
  EXPECT_EQ(as_set(one), expected);
}

TEST(EngineExamplesTest, SupportPairConcludesNoMainTagOnEitherSide) {
  const Theory d = parse_theory("=> q.\n=> ~q.\n");
  for (Logic l : kAllLogics) {
    const Extension e = extension(d, l);
    const Symbol m = main_symbol(l);
    EXPECT_FALSE(e.contains(plus(m), lit("q")) &&
                 e.contains(plus(m), lit("~q")));
    if (auto s = support_symbol(l)) {
      EXPECT_TRUE(e.contains(plus(*s), lit("q")));
      EXPECT_TRUE(e.contains(plus(*s), lit("~q")));
    }
  }
}

TEST(EngineExamplesTest, DefeatersNeverSupport) {
  const Theory d = parse_theory("r1: ~> p.\n");
  for (Logic l : kAllLogics) {
    const Extension e = extension(d, l);
    EXPECT_TRUE(e.contains(minus(main_symbol(l)), lit("p"))) << logic_name(l);
  }
}

TEST(EngineExamplesTest, DefeaterBlocksButCanBeOverruled) {
  const Theory blocked = parse_theory("r1: => p.\nr2: ~> ~p.\n");
  EXPECT_TRUE(prove(blocked, Logic::kPartial, tc("-partial p")));
  const Theory overruled =
      parse_theory("r1: => p.\nr2: ~> ~p.\nr1 > r2.\n");
  EXPECT_TRUE(prove(overruled, Logic::kPartial, tc("+partial p")));
  EXPECT_TRUE(prove(overruled, Logic::kPartialStar, tc("+partialstar p")));
}

TEST(EngineExamplesTest, ContradictoryFacts) {
  const Theory d = parse_theory("fact p.\nfact ~p.\n");
  for (Logic l : kAllLogics) {
    const Extension e = extension(d, l);
    EXPECT_TRUE(e.contains(plus(main_symbol(l)), lit("p")));
    EXPECT_TRUE(e.contains(plus(main_symbol(l)), lit("~p")));
  }
}

TEST(ProveTest, Examples) {
  EXPECT_TRUE(prove(fixture("platypus"), Logic::kPartial, tc("+partial mammal")));
  EXPECT_FALSE(prove(fixture("platypus"), Logic::kPartialStar,
                     tc("+partialstar mammal")));
  EXPECT_TRUE(prove(parse_theory("language p."), Logic::kDelta, tc("-delta p")));
}

TEST(ProveTest, RejectsForeignTags) {
  EXPECT_THROW(prove(fixture("platypus"), Logic::kPartial, tc("+delta mammal")),
               std::invalid_argument);
  EXPECT_THROW(prove(Theory{}, Logic::kDelta, tc("+sigmastar p")),
               std::invalid_argument);
}

TEST(ProveTest, LiteralOutsideTheLanguage) {
  EXPECT_TRUE(prove(Theory{}, Logic::kDelta, tc("-delta p")));
  EXPECT_TRUE(prove(fixture("platypus"), Logic::kPartial, tc("-Delta zebra")));
  EXPECT_FALSE(prove(fixture("platypus"), Logic::kPartial, tc("+partial zebra")));
}

TEST(ExtensionTest, InsertRejectsForeignTag) {
  Extension e(Logic::kPartial, {lit("p"), lit("~p")});
  EXPECT_TRUE(e.insert(tc("+partial p")));
  EXPECT_FALSE(e.insert(tc("+partial p")));
  EXPECT_THROW(e.insert(tc("+sigma p")), std::invalid_argument);
  EXPECT_EQ(e.size(), 1u);
}

TEST(FormatTest, ConclusionsAreSortedLines) {
  const std::string text =
      format_conclusions(extension(parse_theory("language p."), Logic::kDelta));
  EXPECT_EQ(text,
            "-Delta p\n-Delta ~p\n-delta p\n-delta ~p\n-sigma p\n-sigma ~p\n");
}

TEST(TraceTest, ClauseIdentifiers) {
  InferenceTrace trace;
  Engine(fixture("platypus")).extension(Logic::kPartial, &trace);
  std::map<std::string, std::string> clause;
  for (const TraceEntry& t : trace) clause[t.conclusion.str()] = t.clause;
  EXPECT_EQ(clause["+Delta monotreme"], "+Delta.1");
  EXPECT_EQ(clause["+partial monotreme"], "+partial.1");
  EXPECT_EQ(clause["+partial mammal"], "+partial.2.3.2");
  EXPECT_EQ(clause["-partial ~mammal"], "-partial.2.3");
  EXPECT_EQ(clause["-partial ~hasFur"], "-partial.2.1");
}

TEST(TraceTest, ReplayReproducesTheExtension) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Theory d = testing::medium_theory(seed);
    const Engine engine(d);
    for (Logic l : kAllLogics) {
      InferenceTrace trace;
      const Extension e = engine.extension(l, &trace);
      Extension replay = engine.empty_extension(l);
      std::size_t last = 0;
      for (const TraceEntry& t : trace) {
        ASSERT_GE(t.iteration, std::max<std::size_t>(last, 1));
        last = t.iteration;
        ASSERT_TRUE(t.clause.rfind(t.conclusion.tag.str() + ".", 0) == 0)
            << t.clause;
        EXPECT_TRUE(replay.insert(t.conclusion)) << "duplicate " << t.conclusion;
      }
      EXPECT_EQ(replay, e) << "seed " << seed;
      EXPECT_EQ(last, e.iterations());
    }
  }
}

// Property suites over random theories.

class EnginePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(EnginePropertyTest, MatchesReferenceEvaluator) {
  const int block = GetParam();
  for (int seed = block * 100 + 1; seed <= block * 100 + 100; ++seed) {
    const Theory d = testing::medium_theory(seed);
    const Engine engine(d);
    for (Logic l : kAllLogics) {
      const Reference ref(d, l);
      ASSERT_EQ(as_set(engine.extension(l)), ref.tagged(ref.fixpoint()))
          << "seed " << seed << " logic " << logic_name(l) << "\n"
          << render_theory(d);
    }
  }
}

TEST_P(EnginePropertyTest, StepIsMonotone) {
  const int block = GetParam();
  std::mt19937_64 rng(block);
  for (int seed = block * 100 + 1; seed <= block * 100 + 100; ++seed) {
    const Theory d = testing::medium_theory(seed);
    const Engine engine(d);
    for (Logic l : kAllLogics) {
      std::vector<Extension> prefix{engine.empty_extension(l)};
      while (true) {
        Extension next = engine.step(prefix.back());
        if (next == prefix.back()) break;
        prefix.push_back(std::move(next));
      }
      for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
        ASSERT_TRUE(prefix[i].subset_of(prefix[i + 1]));
        ASSERT_TRUE(engine.step(prefix[i]).subset_of(engine.step(prefix[i + 1])));
      }
      // A random subset of the fixpoint steps into a subset of it.
      const Extension& top = prefix.back();
      Extension part = engine.empty_extension(l);
      for (const TaggedConclusion& c : top.conclusions()) {
        if (rng() & 1) part.insert(c);
      }
      ASSERT_TRUE(engine.step(part).subset_of(engine.step(top)))
          << "seed " << seed;
    }
  }
}

TEST_P(EnginePropertyTest, FixpointIsIdempotentAndBounded) {
  const int block = GetParam();
  for (int seed = block * 100 + 1; seed <= block * 100 + 100; ++seed) {
    const Theory d = testing::medium_theory(seed);
    const Engine engine(d);
    for (Logic l : kAllLogics) {
      const Extension e = engine.extension(l);
      ASSERT_EQ(engine.step(e), e);
      ASSERT_EQ(step(d, l, e), e);
      ASSERT_LE(e.iterations(), iteration_bound(l, engine.language().size()));
    }
  }
}

TEST_P(EnginePropertyTest, DeltaFragmentAgreesAcrossLogics) {
  const int block = GetParam();
  for (int seed = block * 100 + 1; seed <= block * 100 + 100; ++seed) {
    const Theory d = testing::medium_theory(seed);
    const Engine engine(d);
    const Extension base = engine.extension(Logic::kPartial);
    for (Logic l : kAllLogics) {
      const Extension e = engine.extension(l);
      for (Tag t : {plus(Symbol::kDefinite), minus(Symbol::kDefinite)}) {
        ASSERT_EQ(e.literals(t), base.literals(t)) << "seed " << seed;
      }
    }
  }
}

TEST_P(EnginePropertyTest, CoherenceAndConsistency) {
  const int block = GetParam();
  for (int seed = block * 100 + 1; seed <= block * 100 + 100; ++seed) {
    const Theory d = testing::medium_theory(seed);
    const Engine engine(d);
    for (Logic l : kAllLogics) {
      const Extension e = engine.extension(l);
      for (const Literal& q : engine.language()) {
        for (Symbol s : symbols_of(l)) {
          ASSERT_FALSE(e.contains(plus(s), q) && e.contains(minus(s), q))
              << "seed " << seed << " " << symbol_name(s) << " " << q;
        }
        const Symbol m = main_symbol(l);
        if (e.contains(plus(m), q) && e.contains(plus(m), q.complement())) {
          ASSERT_TRUE(e.contains(plus(Symbol::kDefinite), q) &&
                      e.contains(plus(Symbol::kDefinite), q.complement()))
              << "seed " << seed << " " << q;
        }
      }
    }
  }
}

// Fig. 2 ordering, weakest first: +weak is contained in +strong and -strong
// in -weak.
TEST_P(EnginePropertyTest, InferenceStrengthLattice) {
  struct Edge {
    Logic wl;
    Symbol w;
    Logic sl;
    Symbol s;
  };
  const Edge edges[] = {
      {Logic::kDeltaStar, Symbol::kDefinite, Logic::kDeltaStar, Symbol::kDeltaStar},
      {Logic::kDeltaStar, Symbol::kDeltaStar, Logic::kDelta, Symbol::kDelta},
      {Logic::kDelta, Symbol::kDelta, Logic::kPartial, Symbol::kPartial},
      {Logic::kPartial, Symbol::kPartial, Logic::kDelta, Symbol::kSigma},
      {Logic::kDelta, Symbol::kSigma, Logic::kDeltaStar, Symbol::kSigmaStar},
      {Logic::kDeltaStar, Symbol::kDeltaStar, Logic::kPartialStar, Symbol::kPartialStar},
      {Logic::kPartialStar, Symbol::kPartialStar, Logic::kDeltaStar, Symbol::kSigmaStar},
  };
  const int block = GetParam();
  for (int seed = block * 100 + 1; seed <= block * 100 + 100; ++seed) {
    const Engine engine(testing::medium_theory(seed));
    std::map<Logic, Extension> ext;
    for (Logic l : kAllLogics) ext.emplace(l, engine.extension(l));
    for (const Edge& e : edges) {
      const Extension& weak = ext.at(e.wl);
      const Extension& strong = ext.at(e.sl);
      for (const Literal& q : engine.language()) {
        if (weak.contains(plus(e.w), q)) {
          ASSERT_TRUE(strong.contains(plus(e.s), q))
              << "seed " << seed << " +" << symbol_name(e.w) << " " << q;
        }
        if (strong.contains(minus(e.s), q)) {
          ASSERT_TRUE(weak.contains(minus(e.w), q))
              << "seed " << seed << " -" << symbol_name(e.s) << " " << q;
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Blocks, EnginePropertyTest, ::testing::Range(0, 10));

}  // namespace
}  // namespace dlw
