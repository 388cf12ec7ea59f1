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

#ifndef DLW_TAGS_HPP_
#define DLW_TAGS_HPP_

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "dlw/literal.hpp"

namespace dlw {

enum class Sign { kPlus, kMinus };

/// Proof symbols. kDefinite is the monotonic tag (Delta); the others are the
/// defeasible tags and the two support tags.
enum class Symbol {
  kDefinite,
  kPartial,
  kPartialStar,
  kDelta,
  kSigma,
  kDeltaStar,
  kSigmaStar,
};

inline constexpr std::size_t kSymbolCount = 7;

/// Spelling used in conclusion listings: Delta, partial, partialstar, ...
std::string_view symbol_name(Symbol symbol);
std::optional<Symbol> parse_symbol(std::string_view name);

struct Tag {
  Sign sign = Sign::kPlus;
  Symbol symbol = Symbol::kDefinite;

  Tag negated() const {
    return {sign == Sign::kPlus ? Sign::kMinus : Sign::kPlus, symbol};
  }
  std::string str() const;

  auto operator<=>(const Tag&) const = default;
  bool operator==(const Tag&) const = default;
};

inline constexpr Tag plus(Symbol s) { return {Sign::kPlus, s}; }
inline constexpr Tag minus(Symbol s) { return {Sign::kMinus, s}; }

struct TaggedConclusion {
  Tag tag;
  Literal literal;

  /// `<sign><tag> <literal>`, e.g. `+partial mammal`, `-delta ~q`.
  std::string str() const;

  auto operator<=>(const TaggedConclusion&) const = default;
  bool operator==(const TaggedConclusion&) const = default;
};

/// Parses one line of the conclusion listing format.
std::optional<TaggedConclusion> parse_conclusion(std::string_view line);

/// The four logics. Each is named after its main defeasible tag.
enum class Logic { kPartial, kPartialStar, kDelta, kDeltaStar };

inline constexpr std::array<Logic, 4> kAllLogics = {
    Logic::kPartial, Logic::kPartialStar, Logic::kDelta, Logic::kDeltaStar};

Symbol main_symbol(Logic logic);
/// sigma for DL(delta), sigma* for DL(delta*), nothing otherwise.
std::optional<Symbol> support_symbol(Logic logic);
/// Delta, the main symbol and (if any) the support symbol, in that order.
std::span<const Symbol> symbols_of(Logic logic);
bool logic_has_symbol(Logic logic, Symbol symbol);
/// True for the two logics with team defeat.
bool uses_team_defeat(Logic logic);
/// True for the two ambiguity-propagating logics.
bool propagates_ambiguity(Logic logic);

std::string_view logic_name(Logic logic);
std::optional<Logic> parse_logic(std::string_view name);

/// The logic in which a symbol is the main or support tag. Delta has no owner.
std::optional<Logic> owning_logic(Symbol symbol);

inline std::ostream& operator<<(std::ostream& os, const TaggedConclusion& c) {
  return os << c.str();
}
inline std::ostream& operator<<(std::ostream& os, Logic logic) {
  return os << logic_name(logic);
}

}  // namespace dlw

#endif  // DLW_TAGS_HPP_
