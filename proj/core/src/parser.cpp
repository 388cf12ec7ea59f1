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

#include "dlw/parser.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace dlw {
namespace {

enum class TokenKind { kIdent, kComma, kColon, kDot, kTilde, kGt, kArrow };

struct Token {
  TokenKind kind;
  std::string text;
  int column;
  ArrowKind arrow = ArrowKind::kDefeasible;
};

bool ident_char(char c) { return is_identifier(std::string_view(&c, 1)); }

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({TokenKind::kIdent, std::string(line.substr(i, j - i)),
                     col});
      i = j;
      continue;
    }
    char next = i + 1 < line.size() ? line[i + 1] : '\0';
    if (next == '>' && (c == '-' || c == '=' || c == '~')) {
      Token t{TokenKind::kArrow, std::string(line.substr(i, 2)), col};
      t.arrow = c == '-'   ? ArrowKind::kStrict
                : c == '=' ? ArrowKind::kDefeasible
                           : ArrowKind::kDefeater;
      out.push_back(std::move(t));
      i += 2;
      continue;
    }
    switch (c) {
      case ',': out.push_back({TokenKind::kComma, ",", col}); break;
      case ':': out.push_back({TokenKind::kColon, ":", col}); break;
      case '.': out.push_back({TokenKind::kDot, ".", col}); break;
      case '~': out.push_back({TokenKind::kTilde, "~", col}); break;
      case '>': out.push_back({TokenKind::kGt, ">", col}); break;
      default:
        throw ParseError(line_no, col,
                         std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no, int end_column)
      : tokens_(std::move(tokens)), line_(line_no), end_col_(end_column) {}

  bool at(TokenKind kind, std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() &&
           tokens_[pos_ + ahead].kind == kind;
  }
  bool at_keyword(std::string_view word) const {
    return at(TokenKind::kIdent) && tokens_[pos_].text == word &&
           (at(TokenKind::kIdent, 1) || at(TokenKind::kTilde, 1));
  }

  [[noreturn]] void fail(const std::string& what) const {
    int col = pos_ < tokens_.size() ? tokens_[pos_].column : end_col_;
    std::string found = pos_ < tokens_.size()
                            ? "'" + tokens_[pos_].text + "'"
                            : "end of line";
    throw ParseError(line_, col, "expected " + what + ", found " + found);
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (!at(kind)) fail(what);
    return tokens_[pos_++];
  }

  Literal literal() {
    bool positive = true;
    if (at(TokenKind::kTilde)) {
      positive = false;
      ++pos_;
    }
    return Literal(expect(TokenKind::kIdent, "literal").text, positive);
  }

  void end() {
    expect(TokenKind::kDot, "'.'");
    if (pos_ != tokens_.size()) fail("end of statement");
  }

  std::size_t pos_ = 0;

 private:
  std::vector<Token> tokens_;
  int line_;
  int end_col_;
};

struct PendingRule {
  std::optional<std::string> label;
  std::vector<Literal> body;
  ArrowKind arrow;
  Literal head;
  int line;
};

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message,
                       const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ":") +
                         std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

TheoryDocument parse_document(std::string_view text) {
  TheoryDocument doc;
  doc.source = std::string(text);
  Theory& theory = doc.theory;
  std::vector<PendingRule> pending;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos
                                            : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    LineParser p(std::move(tokens), line_no,
                 static_cast<int>(line.size()) + 1);

    if (p.at_keyword("fact")) {
      ++p.pos_;
      Literal f = p.literal();
      p.end();
      theory.add_fact(std::move(f));
    } else if (p.at_keyword("language")) {
      ++p.pos_;
      do {
        theory.declare_atom(p.expect(TokenKind::kIdent, "atom").text);
      } while (p.at(TokenKind::kComma) && ++p.pos_);
      p.end();
    } else if (p.at(TokenKind::kIdent) && p.at(TokenKind::kGt, 1)) {
      std::string sup = p.expect(TokenKind::kIdent, "label").text;
      ++p.pos_;
      std::string inf = p.expect(TokenKind::kIdent, "label").text;
      p.end();
      doc.superiority_lines[{sup, inf}] = line_no;
      theory.add_superiority(std::move(sup), std::move(inf));
    } else {
      PendingRule rule{std::nullopt, {}, ArrowKind::kDefeasible, {}, line_no};
      if (p.at(TokenKind::kIdent) && p.at(TokenKind::kColon, 1)) {
        rule.label = p.expect(TokenKind::kIdent, "label").text;
        ++p.pos_;
      }
      if (!p.at(TokenKind::kArrow)) {
        rule.body.push_back(p.literal());
        while (p.at(TokenKind::kComma)) {
          ++p.pos_;
          rule.body.push_back(p.literal());
        }
      }
      rule.arrow = p.expect(TokenKind::kArrow, "arrow").arrow;
      rule.head = p.literal();
      p.end();
      pending.push_back(std::move(rule));
    }
  }

  std::set<std::string> used;
  for (const PendingRule& r : pending) {
    if (r.label) used.insert(*r.label);
  }
  int next_auto = 1;
  for (PendingRule& r : pending) {
    if (!r.label) {
      std::string candidate;
      do {
        candidate = "_r" + std::to_string(next_auto++);
      } while (used.contains(candidate));
      used.insert(candidate);
      r.label = candidate;
    }
    theory.add_rule(Rule(*r.label, std::move(r.body), r.arrow, r.head));
    doc.rule_lines.push_back(r.line);
  }

  auto violations = validate(theory);
  if (!violations.empty()) {
    // Report the first violation at the most specific line we know.
    const Violation& v = violations.front();
    int line = 0;
    const std::string padded = v.message + " ";
    for (const auto& [pair, l] : doc.superiority_lines) {
      if (padded.find(" " + pair.superior + " > " + pair.inferior + " ") !=
          std::string::npos) {
        line = l;
        break;
      }
    }
    if (line == 0 && v.kind == Violation::Kind::kDuplicateLabel) {
      std::string label = v.message.substr(v.message.rfind(' ') + 1);
      for (std::size_t i = 0; i < theory.rules().size(); ++i) {
        if (theory.rules()[i].label() == label) line = doc.rule_lines[i];
      }
    }
    throw ParseError(line == 0 ? 1 : line, 1, v.message);
  }
  return doc;
}

Theory parse_theory(std::string_view text) {
  return parse_document(text).theory;
}

std::string render_theory(const Theory& theory) {
  std::ostringstream os;
  if (!theory.declared_atoms().empty()) {
    os << "language ";
    bool first = true;
    for (const std::string& atom : theory.declared_atoms()) {
      os << (first ? "" : ", ") << atom;
      first = false;
    }
    os << ".\n";
  }
  for (const Literal& f : theory.facts()) os << "fact " << f << ".\n";
  for (const Rule& r : theory.rules()) {
    os << r.label() << ":";
    for (std::size_t i = 0; i < r.body().size(); ++i) {
      os << (i == 0 ? " " : ", ") << r.body()[i];
    }
    os << " " << arrow_text(r.arrow()) << " " << r.head() << ".\n";
  }
  for (const auto& [sup, inf] : theory.superiority()) {
    os << sup << " > " << inf << ".\n";
  }
  return os.str();
}

Theory load_theory(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_theory(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

}  // namespace dlw
