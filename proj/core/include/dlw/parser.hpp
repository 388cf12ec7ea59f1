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

// Text format for theories (`.dl`). One statement per line, `#` starts a
// comment:
//
//   language p, q.          declare atoms
//   fact ~p.                fact
//   r1: a, ~b -> c.         strict rule (label optional)
//   r2: => c.               defeasible rule with empty body
//   r3: a ~> ~c.            defeater
//   r2 > r3.                superiority
//
// Unlabelled rules get `_r1`, `_r2`, ... in source order, skipping labels
// the file already uses.

#ifndef DLW_PARSER_HPP_
#define DLW_PARSER_HPP_

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlw/theory.hpp"

namespace dlw {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message,
             const std::string& source = "");
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct TheoryDocument {
  std::string source;
  Theory theory;
  /// 1-based source line of each rule, parallel to theory.rules().
  std::vector<int> rule_lines;
  std::map<SuperiorityPair, int> superiority_lines;
};

/// Parses and validates. Throws ParseError on syntax errors and on
/// validation violations (reported at the offending statement).
TheoryDocument parse_document(std::string_view text);
Theory parse_theory(std::string_view text);

/// Canonical text: language line, facts, rules in order, superiority pairs
/// sorted. parse_theory(render_theory(d)) == d for every valid d.
std::string render_theory(const Theory& theory);

/// Reads and parses a file; ParseError messages are prefixed by the path.
Theory load_theory(const std::filesystem::path& path);

}  // namespace dlw

#endif  // DLW_PARSER_HPP_
