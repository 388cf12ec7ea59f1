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

// Theory-to-theory transformations between the logics.
//
// Every generated atom starts with `$` and never coincides with an atom of
// the source theory, which keeps the simulating theory's private symbols
// out of reach of additions written over the source language.

#ifndef DLW_TRANSFORMS_HPP_
#define DLW_TRANSFORMS_HPP_

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlw/engine.hpp"
#include "dlw/theory.hpp"

namespace dlw {

/// Deterministic fresh names. atom("h", {"r1"}) is `$h_r1`,
/// label("n", {"r1", "r3"}) is `n$r1$r3`. The same key always yields the
/// same name; distinct keys never share one (a `_<k>` suffix is appended on
/// a clash), and no atom equals an atom of the source theory.
class FreshSymbols {
 public:
  explicit FreshSymbols(const Theory& source);

  std::string atom(std::string_view kind,
                   std::initializer_list<std::string_view> parts);
  std::string label(std::string_view kind,
                    std::initializer_list<std::string_view> parts);

 private:
  std::string intern(std::map<std::string, std::string>& memo,
                     std::set<std::string>& used, std::string key,
                     std::string name);

  std::map<std::string, std::string> atom_memo_;
  std::map<std::string, std::string> label_memo_;
  std::set<std::string> atoms_used_;
  std::set<std::string> labels_used_;
};

struct MappingRow {
  std::string source;  // rule label or literal of the input
  std::string role;    // p, s, n, h, R1, NF, one, ...
  std::string generated;

  bool operator==(const MappingRow&) const = default;
};

struct TransformReport {
  Theory output;
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::vector<MappingRow> mapping;
};

/// Tab-separated `source role generated` with a header line.
std::string format_mapping(const TransformReport& report);

/// How conclusion_table_theory treats a literal q with +d q whose Delta
/// status is undecided (possible when a strict cycle through q keeps -Delta q
/// from being derived while a defeasible rule proves q). kComplete adds
/// `=> q` next to the loop `q -> q`; kReject throws.
enum class TableGap { kComplete, kReject };

/// Builds a theory whose conclusions over `sigma` reproduce `conclusions`
/// in any logic: facts for +Delta, `q -> q` where Delta is undecided,
/// `=> q` for defeasibly-only provable q and `q => q` where the main tag is
/// undecided. Throws std::invalid_argument if sigma leaves the extension's
/// language, and under kReject on the gap described above.
Theory conclusion_table_theory(const Extension& conclusions,
                               const LiteralSet& sigma,
                               TableGap gap = TableGap::kComplete);

/// Non-team-defeat behaviour expressed with team defeat: every rule r gets a
/// private head h(r) (rule p(r), same arrow, plus `h(r) -> q`), and each
/// opposing rule r' attacks h(r) through n(r, r').
TransformReport ntd_to_td(const Theory& theory);

/// Team-defeat behaviour expressed without team defeat, via defeat markers
/// d(r_i, r_j), d(r), fail(r), one(q) and strict(q).
TransformReport td_to_ntd(const Theory& theory);

/// size(output) <= factor * size(input)^2 for every input.
///
/// ntd_to_td: with n = size(D) and m <= n/2 rules, the output has
/// |F| + sum(|B_r| + 2 + 3) + sum over opposing pairs (|B_r'| + 2) + 4|>|
/// symbols (declared atoms are carried over), at most
/// n + 2.5n + n^2/2 + 2n <= 6n^2.
inline constexpr std::size_t kNtdToTdSizeFactor = 6;
/// td_to_ntd: ordered pairs contribute sum(|B_i| + |B_j| + 14) <= 4.5n^2;
/// facts, points 2-3, the per-rule fail/NF/F group, one(q) rules and the
/// per-literal team rules (|Sigma| <= 2n) add at most 18.5n, so the output
/// stays below 23n^2 for n >= 1.
inline constexpr std::size_t kTdToNtdSizeFactor = 23;

/// Exhaustive table construction over all A subset of Sigma, using the
/// main tag of `logic`. Exponential; refuses theories with more than
/// kConjectureAtomCap atoms (std::length_error).
inline constexpr std::size_t kConjectureAtomCap = 8;
Theory conjecture_transform(const Theory& theory, Logic logic);

enum class TransformKind { kNtdToTd, kTdToNtd, kConclusionTable, kConjecture };

/// ntd2td, td2ntd, thm1, conjecture.
std::string_view transform_name(TransformKind kind);
std::optional<TransformKind> parse_transform(std::string_view name);

/// Runs any transformation and wraps it in a report. `logic` is the source
/// logic for thm1 and conjecture and is ignored otherwise.
TransformReport run_transform(TransformKind kind, const Theory& theory,
                              Logic logic = Logic::kPartial);

}  // namespace dlw

#endif  // DLW_TRANSFORMS_HPP_
