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

// Bottom-up evaluation of the four logics. The consequence operator T_D is
// applied to the whole conclusion set at once, starting from the empty set,
// until nothing changes; the result is the least fixed point. All tags of a
// logic (Delta, the main tag and, for the ambiguity-propagating logics, the
// support tag) are computed together because their inference conditions
// refer to each other.

#ifndef DLW_ENGINE_HPP_
#define DLW_ENGINE_HPP_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "dlw/tags.hpp"
#include "dlw/theory.hpp"

namespace dlw {

/// A set of tagged conclusions of one logic over a fixed language. Literals
/// are addressed by their position in the language, which the constructor
/// sorts.
class Extension {
 public:
  Extension(Logic logic, std::vector<Literal> language);

  Logic logic() const { return logic_; }
  const std::vector<Literal>& language() const { return *language_; }
  /// Position of q in language(), or -1.
  int index_of(const Literal& q) const;

  bool contains(Tag tag, int literal) const;
  bool contains(Tag tag, const Literal& q) const;
  bool contains(const TaggedConclusion& c) const {
    return contains(c.tag, c.literal);
  }
  /// Returns true if the conclusion was not present. The tag must belong to
  /// the logic.
  bool insert(Tag tag, int literal);
  bool insert(const TaggedConclusion& c);

  LiteralSet literals(Tag tag) const;
  /// Every conclusion, ordered like the CLI listing (by rendered text).
  std::vector<TaggedConclusion> conclusions() const;
  std::size_t size() const { return count_; }

  /// Number of applications of T_D that added something before the fixed
  /// point was reached. Zero for sets not produced by extension().
  std::size_t iterations() const { return iterations_; }
  void set_iterations(std::size_t n) { iterations_ = n; }

  /// Set inclusion; both sides must be over the same logic and language.
  bool subset_of(const Extension& other) const;
  bool operator==(const Extension& other) const;

 private:
  std::vector<char>& bits(Tag tag);
  const std::vector<char>& bits(Tag tag) const;

  Logic logic_;
  std::shared_ptr<const std::vector<Literal>> language_;
  // Indexed by symbol * 2 + sign; unused tags stay empty.
  std::array<std::vector<char>, kSymbolCount * 2> bits_;
  std::size_t count_ = 0;
  std::size_t iterations_ = 0;
};

struct TraceEntry {
  std::size_t iteration;
  TaggedConclusion conclusion;
  /// Inference clause that produced it, e.g. `+partial.2.3.2`.
  std::string clause;
};

using InferenceTrace = std::vector<TraceEntry>;

/// A theory indexed for evaluation. Construction validates the theory and
/// throws TheoryError if it is ill-formed. Immutable afterwards.
class Engine {
 public:
  explicit Engine(const Theory& theory);
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  const std::vector<Literal>& language() const;

  Extension empty_extension(Logic logic) const;

  /// E united with T_D(E). `current` must be over this engine's language.
  Extension step(const Extension& current, InferenceTrace* trace = nullptr,
                 std::size_t iteration = 0) const;

  /// Least fixed point of T_D for the logic.
  Extension extension(Logic logic, InferenceTrace* trace = nullptr) const;

  struct Compiled;  // opaque

 private:
  std::unique_ptr<Compiled> compiled_;
};

Extension step(const Theory& theory, Logic logic, const Extension& current);
Extension extension(const Theory& theory, Logic logic);

/// Membership of c in the extension of the theory. A literal outside the
/// theory's language is answered against the theory with that atom declared.
/// Throws std::invalid_argument if c's tag does not belong to the logic.
bool prove(const Theory& theory, Logic logic, const TaggedConclusion& c);

/// Upper bound on the number of productive iterations: the number of signed
/// tags of the logic times the size of the language.
std::size_t iteration_bound(Logic logic, std::size_t language_size);

/// One conclusion per line in the CLI format, lexicographically sorted.
std::string format_conclusions(const Extension& extension);
std::string format_trace(const InferenceTrace& trace);

}  // namespace dlw

#endif  // DLW_ENGINE_HPP_
