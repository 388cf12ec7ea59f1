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

#include "dlw/random_theory.hpp"

#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace dlw {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n) by rejection.
  std::size_t below(std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::string atom_name(std::size_t index) {
  static constexpr const char* kNames[] = {"p", "q", "r", "s",
                                           "t", "u", "v", "w"};
  if (index < 8) return kNames[index];
  return "a" + std::to_string(index);
}

Theory random_theory(const RandomTheoryParams& params) {
  Theory theory;
  if (params.atoms == 0) return theory;
  Rng rng(params.seed);
  if (params.declare_atoms) {
    for (std::size_t i = 0; i < params.atoms; ++i) {
      theory.declare_atom(atom_name(i));
    }
  }
  auto literal = [&] {
    return Literal(atom_name(rng.below(params.atoms)), rng.chance(0.5));
  };

  const std::size_t facts = rng.below(params.max_facts + 1);
  for (std::size_t i = 0; i < facts; ++i) theory.add_fact(literal());

  for (std::size_t i = 0; i < params.rules; ++i) {
    std::vector<Literal> body(rng.below(params.max_body + 1));
    for (Literal& b : body) b = literal();
    ArrowKind arrow = ArrowKind::kDefeasible;
    if (rng.chance(params.strict_fraction)) {
      arrow = ArrowKind::kStrict;
    } else if (rng.chance(params.defeater_fraction)) {
      arrow = ArrowKind::kDefeater;
    }
    theory.add_rule(Rule("r" + std::to_string(i + 1), std::move(body), arrow,
                         literal()));
  }

  std::vector<std::size_t> order(params.rules);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  const auto& rules = theory.rules();
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const Rule& hi = rules[order[a]];
      const Rule& lo = rules[order[b]];
      if (hi.head() != lo.head().complement()) continue;
      if (rng.chance(params.superiority_density)) {
        theory.add_superiority(hi.label(), lo.label());
      }
    }
  }
  return theory;
}

RandomTheoryParams corpus_params(std::uint64_t seed, std::size_t max_atoms,
                                 std::size_t max_rules,
                                 std::size_t max_facts) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  RandomTheoryParams params;
  params.atoms = 1 + rng.below(max_atoms);
  params.rules = rng.below(max_rules + 1);
  params.max_facts = max_facts;
  params.seed = seed;
  return params;
}

}  // namespace dlw
