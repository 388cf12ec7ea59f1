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

#ifndef DLW_LITERAL_HPP_
#define DLW_LITERAL_HPP_

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

namespace dlw {

/// A signed proposition. `~p` is the complement of `p` and vice versa.
class Literal {
 public:
  Literal() = default;
  explicit Literal(std::string atom, bool positive = true)
      : atom_(std::move(atom)), positive_(positive) {}

  const std::string& atom() const { return atom_; }
  bool positive() const { return positive_; }

  Literal complement() const { return Literal(atom_, !positive_); }

  /// Textual form used by the `.dl` format and conclusion listings.
  std::string str() const { return positive_ ? atom_ : "~" + atom_; }

  /// Identifier-safe encoding (`p` / `np`) used when building fresh names.
  std::string mangled() const { return positive_ ? atom_ : "n" + atom_; }

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;

 private:
  std::string atom_;
  bool positive_ = true;
};

inline Literal complement(const Literal& q) { return q.complement(); }

inline std::ostream& operator<<(std::ostream& os, const Literal& q) {
  return os << q.str();
}

using LiteralSet = std::set<Literal>;

/// Adds the complement of every member.
LiteralSet close_under_complement(const LiteralSet& literals);

/// True for names accepted as atoms and labels: [A-Za-z0-9_$]+.
bool is_identifier(std::string_view name);

}  // namespace dlw

#endif  // DLW_LITERAL_HPP_
