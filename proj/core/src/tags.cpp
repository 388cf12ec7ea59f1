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

#include "dlw/tags.hpp"

namespace dlw {
namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "Delta", "partial", "partialstar", "delta",
    "sigma", "deltastar", "sigmastar"};

constexpr std::array<Symbol, 2> kPartialSymbols = {Symbol::kDefinite,
                                                   Symbol::kPartial};
constexpr std::array<Symbol, 2> kPartialStarSymbols = {Symbol::kDefinite,
                                                       Symbol::kPartialStar};
constexpr std::array<Symbol, 3> kDeltaSymbols = {
    Symbol::kDefinite, Symbol::kDelta, Symbol::kSigma};
constexpr std::array<Symbol, 3> kDeltaStarSymbols = {
    Symbol::kDefinite, Symbol::kDeltaStar, Symbol::kSigmaStar};

}  // namespace

std::string_view symbol_name(Symbol symbol) {
  return kSymbolNames[static_cast<std::size_t>(symbol)];
}

std::optional<Symbol> parse_symbol(std::string_view name) {
  for (std::size_t i = 0; i < kSymbolNames.size(); ++i) {
    if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

std::string Tag::str() const {
  std::string out(1, sign == Sign::kPlus ? '+' : '-');
  out += symbol_name(symbol);
  return out;
}

std::string TaggedConclusion::str() const {
  return tag.str() + " " + literal.str();
}

std::optional<TaggedConclusion> parse_conclusion(std::string_view line) {
  while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  if (line.size() < 3 || (line[0] != '+' && line[0] != '-')) {
    return std::nullopt;
  }
  auto space = line.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  auto symbol = parse_symbol(line.substr(1, space - 1));
  if (!symbol) return std::nullopt;
  std::string_view lit = line.substr(space + 1);
  bool positive = true;
  if (!lit.empty() && lit[0] == '~') {
    positive = false;
    lit.remove_prefix(1);
  }
  if (!is_identifier(lit)) return std::nullopt;
  return TaggedConclusion{
      {line[0] == '+' ? Sign::kPlus : Sign::kMinus, *symbol},
      Literal(std::string(lit), positive)};
}

Symbol main_symbol(Logic logic) {
  switch (logic) {
    case Logic::kPartial: return Symbol::kPartial;
    case Logic::kPartialStar: return Symbol::kPartialStar;
    case Logic::kDelta: return Symbol::kDelta;
    case Logic::kDeltaStar: return Symbol::kDeltaStar;
  }
  return Symbol::kPartial;
}

std::optional<Symbol> support_symbol(Logic logic) {
  switch (logic) {
    case Logic::kDelta: return Symbol::kSigma;
    case Logic::kDeltaStar: return Symbol::kSigmaStar;
    default: return std::nullopt;
  }
}

std::span<const Symbol> symbols_of(Logic logic) {
  switch (logic) {
    case Logic::kPartial: return kPartialSymbols;
    case Logic::kPartialStar: return kPartialStarSymbols;
    case Logic::kDelta: return kDeltaSymbols;
    case Logic::kDeltaStar: return kDeltaStarSymbols;
  }
  return {};
}

bool logic_has_symbol(Logic logic, Symbol symbol) {
  for (Symbol s : symbols_of(logic)) {
    if (s == symbol) return true;
  }
  return false;
}

bool uses_team_defeat(Logic logic) {
  return logic == Logic::kPartial || logic == Logic::kDelta;
}

bool propagates_ambiguity(Logic logic) {
  return logic == Logic::kDelta || logic == Logic::kDeltaStar;
}

std::string_view logic_name(Logic logic) {
  return symbol_name(main_symbol(logic));
}

std::optional<Logic> parse_logic(std::string_view name) {
  for (Logic logic : kAllLogics) {
    if (logic_name(logic) == name) return logic;
  }
  return std::nullopt;
}

std::optional<Logic> owning_logic(Symbol symbol) {
  switch (symbol) {
    case Symbol::kDefinite: return std::nullopt;
    case Symbol::kPartial: return Logic::kPartial;
    case Symbol::kPartialStar: return Logic::kPartialStar;
    case Symbol::kDelta:
    case Symbol::kSigma: return Logic::kDelta;
    case Symbol::kDeltaStar:
    case Symbol::kSigmaStar: return Logic::kDeltaStar;
  }
  return std::nullopt;
}

}  // namespace dlw
