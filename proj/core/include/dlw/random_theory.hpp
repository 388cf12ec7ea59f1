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

// Seeded generator of small well-formed theories for property tests and
// benchmarks. The output depends only on the parameters, on every platform:
// the engine is mt19937_64 and the reductions are done by hand rather than
// through the implementation-defined std distributions.

#ifndef DLW_RANDOM_THEORY_HPP_
#define DLW_RANDOM_THEORY_HPP_

#include <cstdint>
#include <string>

#include "dlw/theory.hpp"

namespace dlw {

struct RandomTheoryParams {
  std::size_t atoms = 3;
  std::size_t rules = 6;
  std::size_t max_facts = 0;
  std::size_t max_body = 2;
  /// Chance that a pair of opposing rules is ordered by superiority.
  double superiority_density = 0.5;
  double defeater_fraction = 0.15;
  double strict_fraction = 0.2;
  /// Declare all `atoms` atoms, so the language does not depend on which
  /// ones happen to occur.
  bool declare_atoms = false;
  std::uint64_t seed = 0;
};

/// p, q, r, s, t, u, v, w, then a8, a9, ...
std::string atom_name(std::size_t index);

/// Rules r1..rn over the first `atoms` atoms.
/// Superiority is a random subset of a random total order on the rules,
/// restricted to rules with opposing heads, so it is acyclic by
/// construction.
Theory random_theory(const RandomTheoryParams& params);

/// Parameters for the seed-th theory of a corpus: between 1 and max_atoms
/// atoms and between 0 and max_rules rules, both drawn from the seed.
RandomTheoryParams corpus_params(std::uint64_t seed, std::size_t max_atoms,
                                 std::size_t max_rules,
                                 std::size_t max_facts = 0);

}  // namespace dlw

#endif  // DLW_RANDOM_THEORY_HPP_
