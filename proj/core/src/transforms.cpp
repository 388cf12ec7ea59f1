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

#include "dlw/transforms.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace dlw {

// ---------------------------------------------------------------------------
// Fresh names

FreshSymbols::FreshSymbols(const Theory& source)
    : atoms_used_(atoms_of(source)) {}

std::string FreshSymbols::intern(std::map<std::string, std::string>& memo,
                                 std::set<std::string>& used, std::string key,
                                 std::string name) {
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::string candidate = name;
  for (int k = 2; used.contains(candidate); ++k) {
    candidate = name + "_" + std::to_string(k);
  }
  used.insert(candidate);
  memo.emplace(std::move(key), candidate);
  return candidate;
}

std::string FreshSymbols::atom(std::string_view kind,
                               std::initializer_list<std::string_view> parts) {
  std::string key(kind);
  std::string name = "$" + std::string(kind);
  for (std::string_view p : parts) {
    key += '\0';
    key += p;
    name += '_';
    name += p;
  }
  return intern(atom_memo_, atoms_used_, std::move(key), std::move(name));
}

std::string FreshSymbols::label(std::string_view kind,
                                std::initializer_list<std::string_view> parts) {
  std::string key(kind);
  std::string name(kind);
  for (std::string_view p : parts) {
    key += '\0';
    key += p;
    name += '$';
    name += p;
  }
  return intern(label_memo_, labels_used_, std::move(key), std::move(name));
}

std::string format_mapping(const TransformReport& report) {
  std::ostringstream os;
  os << "source\trole\tgenerated\n";
  for (const MappingRow& row : report.mapping) {
    os << row.source << '\t' << row.role << '\t' << row.generated << '\n';
  }
  return os.str();
}

namespace {

void carry_language(const Theory& from, Theory& to) {
  for (const std::string& atom : from.declared_atoms()) to.declare_atom(atom);
}

TransformReport finish(const Theory& input, Theory output,
                       std::vector<MappingRow> mapping) {
  TransformReport report;
  report.input_size = theory_size(input);
  report.output_size = theory_size(output);
  report.output = std::move(output);
  report.mapping = std::move(mapping);
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------
// Conclusion table

Theory conclusion_table_theory(const Extension& conclusions,
                               const LiteralSet& sigma, TableGap gap) {
  const Symbol d = main_symbol(conclusions.logic());
  Theory out;
  FreshSymbols fresh(out);
  for (const Literal& q : sigma) {
    if (conclusions.index_of(q) < 0) {
      throw std::invalid_argument(q.str() +
                                  " is outside the extension's language");
    }
    out.declare_atom(q.atom());
    const bool plus_def = conclusions.contains(plus(Symbol::kDefinite), q);
    const bool minus_def = conclusions.contains(minus(Symbol::kDefinite), q);
    const bool plus_d = conclusions.contains(plus(d), q);
    const bool minus_d = conclusions.contains(minus(d), q);

    if (plus_def) {
      out.add_fact(q);
    } else if (!minus_def) {
      out.add_rule(Rule(fresh.label("sl", {q.mangled()}), {q},
                        ArrowKind::kStrict, q));
    }

    if (plus_d && !plus_def && !minus_def && gap == TableGap::kReject) {
      throw std::invalid_argument("+" + std::string(symbol_name(d)) + " " +
                                  q.str() + " without a Delta verdict");
    }
    if (plus_d && !plus_def) {
      out.add_rule(Rule(fresh.label("da", {q.mangled()}), {},
                        ArrowKind::kDefeasible, q));
    } else if (!plus_d && !minus_d) {
      out.add_rule(Rule(fresh.label("dl", {q.mangled()}), {q},
                        ArrowKind::kDefeasible, q));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Non-team defeat inside a team-defeat logic

TransformReport ntd_to_td(const Theory& theory) {
  if (auto v = validate(theory); !v.empty()) throw TheoryError(std::move(v));
  FreshSymbols fresh(theory);
  Theory out;
  std::vector<MappingRow> mapping;
  for (const Literal& f : theory.facts()) out.add_fact(f);
  carry_language(theory, out);

  const auto& rules = theory.rules();
  for (const Rule& r : rules) {
    const std::string h = fresh.atom("h", {r.label()});
    const std::string p = fresh.label("p", {r.label()});
    const std::string s = fresh.label("s", {r.label()});
    mapping.push_back({r.label(), "h", h});
    mapping.push_back({r.label(), "p", p});
    mapping.push_back({r.label(), "s", s});
    out.add_rule(Rule(p, r.body(), r.arrow(), Literal(h)));
    out.add_rule(Rule(s, {Literal(h)}, ArrowKind::kStrict, r.head()));
    for (const Rule& opp : rules) {
      if (opp.head() != r.head().complement()) continue;
      const std::string n = fresh.label("n", {r.label(), opp.label()});
      mapping.push_back({r.label() + "," + opp.label(), "n", n});
      out.add_rule(Rule(n, opp.body(), opp.arrow(), Literal(h, false)));
    }
  }

  for (const auto& [sup, inf] : theory.superiority()) {
    const Rule& a = rules[theory.find_rule(sup)];
    const Rule& b = rules[theory.find_rule(inf)];
    if (a.head() != b.head().complement()) continue;
    out.add_superiority(fresh.label("p", {sup}), fresh.label("n", {sup, inf}));
    out.add_superiority(fresh.label("n", {inf, sup}), fresh.label("p", {inf}));
  }
  return finish(theory, std::move(out), std::move(mapping));
}

// ---------------------------------------------------------------------------
// Team defeat inside a non-team-defeat logic

TransformReport td_to_ntd(const Theory& theory) {
  if (auto v = validate(theory); !v.empty()) throw TheoryError(std::move(v));
  FreshSymbols fresh(theory);
  Theory out;
  std::vector<MappingRow> mapping;
  const auto& rules = theory.rules();
  const LiteralSet sigma = language_of(theory);

  // 1. facts
  for (const Literal& f : theory.facts()) out.add_fact(f);
  carry_language(theory, out);

  auto strict_atom = [&](const Literal& q) {
    return Literal(fresh.atom("strict", {q.mangled()}));
  };

  // 2. strict rules only feed strict(q); ns(q) keeps them out of
  //    defeasible reasoning.
  LiteralSet strict_heads;
  for (const Literal& q : sigma) {
    bool any = false;
    for (const Rule& r : rules) {
      if (!r.is_strict() || r.head() != q) continue;
      const std::string ns = fresh.label("ns", {q.mangled()});
      if (!any) {
        mapping.push_back({q.str(), "strict", strict_atom(q).atom()});
        mapping.push_back({q.str(), "ns", ns});
        out.add_rule(Rule(ns, {}, ArrowKind::kDefeasible,
                          strict_atom(q).complement()));
        any = true;
      }
      const std::string s = fresh.label("s", {r.label()});
      mapping.push_back({r.label(), "s", s});
      out.add_rule(Rule(s, r.body(), ArrowKind::kStrict, strict_atom(q)));
      out.add_superiority(ns, s);
    }
    if (any) strict_heads.insert(q);
  }

  // 3. strict(q) -> q
  for (const Literal& q : strict_heads) {
    const std::string label = fresh.label("st", {q.mangled()});
    mapping.push_back({q.str(), "st", label});
    out.add_rule(Rule(label, {strict_atom(q)}, ArrowKind::kStrict, q));
  }

  // 4. defeat markers. r_i is a rule for ~q; r_j a strict or defeasible rule
  //    for q.
  for (const Rule& ri : rules) {
    const Literal q = ri.head().complement();
    const Literal d_i(fresh.atom("d", {ri.label()}));
    const Literal fail_i(fresh.atom("fail", {ri.label()}));
    mapping.push_back({ri.label(), "d", d_i.atom()});
    mapping.push_back({ri.label(), "fail", fail_i.atom()});
    for (const Rule& rj : rules) {
      if (rj.head() != q || !rj.supports()) continue;
      const Literal d_ij(fresh.atom("d", {ri.label(), rj.label()}));
      const std::string r1 = fresh.label("R1", {ri.label(), rj.label()});
      const std::string r2 = fresh.label("R2", {ri.label(), rj.label()});
      const std::string r3 = fresh.label("R3", {ri.label(), rj.label()});
      const std::string dc = fresh.label("dc", {ri.label(), rj.label()});
      const std::string pair = ri.label() + "," + rj.label();
      mapping.push_back({pair, "d", d_ij.atom()});
      mapping.push_back({pair, "R1", r1});
      mapping.push_back({pair, "R2", r2});
      mapping.push_back({pair, "R3", r3});
      mapping.push_back({pair, "dc", dc});
      out.add_rule(Rule(r1, ri.body(), ri.arrow(), d_ij.complement()));
      out.add_rule(Rule(r2, rj.body(), ArrowKind::kDefeasible, d_ij));
      out.add_rule(Rule(r3, {strict_atom(q)}, ArrowKind::kDefeasible, d_ij));
      out.add_rule(Rule(dc, {d_ij}, ArrowKind::kDefeasible, d_i));
      if (theory.superiority().contains({rj.label(), ri.label()})) {
        out.add_superiority(r2, r1);
      }
      out.add_superiority(r3, r1);
    }
    const std::string fc = fresh.label("fc", {ri.label()});
    const std::string nf = fresh.label("NF", {ri.label()});
    const std::string f = fresh.label("F", {ri.label()});
    mapping.push_back({ri.label(), "fc", fc});
    mapping.push_back({ri.label(), "NF", nf});
    mapping.push_back({ri.label(), "F", f});
    out.add_rule(Rule(fc, {fail_i}, ArrowKind::kDefeasible, d_i));
    out.add_rule(Rule(nf, ri.body(), ArrowKind::kDefeasible,
                      fail_i.complement()));
    out.add_rule(Rule(f, {}, ArrowKind::kDefeasible, fail_i));
    out.add_superiority(nf, f);
  }

  // 5. one(q): some strict or defeasible rule for q has a provable body.
  for (const Rule& r : rules) {
    if (!r.supports()) continue;
    const Literal one(fresh.atom("one", {r.head().mangled()}));
    const std::string label = fresh.label("one", {r.label()});
    mapping.push_back({r.label(), "one", label});
    out.add_rule(Rule(label, r.body(), ArrowKind::kDefeasible, one));
  }

  // 6. q holds when one(q) does and every rule for ~q is defeated.
  for (const Literal& q : sigma) {
    std::vector<Literal> body{Literal(fresh.atom("one", {q.mangled()}))};
    for (const Rule& r : rules) {
      if (r.head() == q.complement()) {
        body.emplace_back(fresh.atom("d", {r.label()}));
      }
    }
    const std::string label = fresh.label("team", {q.mangled()});
    mapping.push_back({q.str(), "team", label});
    out.add_rule(Rule(label, std::move(body), ArrowKind::kDefeasible, q));
  }

  return finish(theory, std::move(out), std::move(mapping));
}

// ---------------------------------------------------------------------------
// Exhaustive table construction

Theory conjecture_transform(const Theory& theory, Logic logic) {
  if (auto v = validate(theory); !v.empty()) throw TheoryError(std::move(v));
  const LiteralSet sigma_set = language_of(theory);
  const std::vector<Literal> sigma(sigma_set.begin(), sigma_set.end());
  if (sigma.size() / 2 > kConjectureAtomCap) {
    throw std::length_error("conjecture transform is capped at " +
                            std::to_string(kConjectureAtomCap) + " atoms");
  }
  const Symbol d = main_symbol(logic);
  FreshSymbols fresh(theory);
  Theory out;
  for (const Literal& f : theory.facts()) out.add_fact(f);
  carry_language(theory, out);

  std::vector<Literal> not_atoms;
  for (const Literal& q : sigma) {
    Literal not_q(fresh.atom("not", {q.mangled()}));
    not_atoms.push_back(not_q);
    out.add_rule(Rule(fresh.label("nn", {q.mangled()}), {q},
                      ArrowKind::kDefeasible, not_q.complement()));
    out.add_rule(
        Rule(fresh.label("nt", {q.mangled()}), {}, ArrowKind::kDefeasible,
             not_q));
  }

  std::size_t counter = 0;
  auto next_label = [&] { return fresh.label("c", {std::to_string(++counter)}); };
  const std::uint64_t subsets = std::uint64_t{1} << sigma.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Theory with_addition = theory;
    std::vector<Literal> added;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (mask >> i & 1) {
        with_addition.add_fact(sigma[i]);
        added.push_back(sigma[i]);
      }
    }
    const Extension e = Engine(with_addition).extension(logic);
    std::vector<Literal> hat = added;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (e.contains(minus(d), sigma[i])) hat.push_back(not_atoms[i]);
    }

    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const Literal& q = sigma[i];
      const bool in_a = (mask >> i & 1) != 0;
      const bool plus_def = e.contains(plus(Symbol::kDefinite), q);
      const bool minus_def = e.contains(minus(Symbol::kDefinite), q);
      if (plus_def && !in_a) {
        out.add_rule(Rule(next_label(), added, ArrowKind::kStrict, q));
      }
      if (!plus_def && !minus_def) {
        std::vector<Literal> body = added;
        body.push_back(q);
        out.add_rule(Rule(next_label(), std::move(body), ArrowKind::kStrict, q));
      }
      std::vector<Literal> hat_without_q;
      for (const Literal& a : hat) {
        if (a != q) hat_without_q.push_back(a);
      }
      const bool plus_d = e.contains(plus(d), q);
      const bool minus_d = e.contains(minus(d), q);
      if (plus_d && !in_a) {
        out.add_rule(Rule(next_label(), hat_without_q, ArrowKind::kDefeasible, q));
      }
      if (!plus_d && !minus_d) {
        hat_without_q.push_back(q);
        out.add_rule(Rule(next_label(), std::move(hat_without_q),
                          ArrowKind::kDefeasible, q));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view transform_name(TransformKind kind) {
  switch (kind) {
    case TransformKind::kNtdToTd: return "ntd2td";
    case TransformKind::kTdToNtd: return "td2ntd";
    case TransformKind::kConclusionTable: return "thm1";
    case TransformKind::kConjecture: return "conjecture";
  }
  return "";
}

std::optional<TransformKind> parse_transform(std::string_view name) {
  for (TransformKind k :
       {TransformKind::kNtdToTd, TransformKind::kTdToNtd,
        TransformKind::kConclusionTable, TransformKind::kConjecture}) {
    if (transform_name(k) == name) return k;
  }
  return std::nullopt;
}

TransformReport run_transform(TransformKind kind, const Theory& theory,
                              Logic logic) {
  switch (kind) {
    case TransformKind::kNtdToTd: return ntd_to_td(theory);
    case TransformKind::kTdToNtd: return td_to_ntd(theory);
    case TransformKind::kConclusionTable: {
      Extension e = Engine(theory).extension(logic);
      return finish(theory, conclusion_table_theory(e, language_of(theory)),
                    {});
    }
    case TransformKind::kConjecture:
      return finish(theory, conjecture_transform(theory, logic), {});
  }
  throw std::invalid_argument("unknown transform");
}

}  // namespace dlw
