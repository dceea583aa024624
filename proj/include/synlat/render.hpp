#pragma once

// DOT, JSON and ASCII-table output for automata and syntactic algebras.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synlat/atoms.hpp"
#include "synlat/canonical.hpp"
#include "synlat/dfa.hpp"
#include "synlat/reversibility.hpp"
#include "synlat/syntactic.hpp"

namespace synlat {

namespace render {

struct State {
  std::size_t id = 0;
  std::string label;
  bool final = false;
  std::vector<std::size_t> atomset;  // profile indices

  bool operator==(const State&) const = default;
};

struct Element {
  std::size_t id = 0;
  std::string witness;
  std::vector<std::vector<std::size_t>> images;  // one atom set per state in `states`

  bool operator==(const Element&) const = default;
};

struct Tables {
  std::vector<std::vector<std::uint32_t>> mul, meet, join;

  bool operator==(const Tables&) const = default;
};

struct Transition {
  std::size_t from = 0;
  std::string letter;
  std::size_t to = 0;

  bool operator==(const Transition&) const = default;
};

/// Serializable view of an automaton or an algebra. For an algebra `states`
/// are the residuals on which element images are given.
struct Document {
  std::string alphabet;
  std::string regex;
  std::string level;
  std::vector<State> states;
  std::vector<Transition> transitions;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  std::vector<Element> elements;
  Tables tables;

  bool operator==(const Document&) const = default;
};

inline void to_json(nlohmann::json& j, const State& s) {
  j = {{"id", s.id}, {"label", s.label}, {"final", s.final}, {"atomset", s.atomset}};
}
inline void from_json(const nlohmann::json& j, State& s) {
  j.at("id").get_to(s.id);
  j.at("label").get_to(s.label);
  j.at("final").get_to(s.final);
  j.at("atomset").get_to(s.atomset);
}

inline void to_json(nlohmann::json& j, const Element& e) {
  j = {{"id", e.id}, {"witness", e.witness}, {"images", e.images}};
}
inline void from_json(const nlohmann::json& j, Element& e) {
  j.at("id").get_to(e.id);
  j.at("witness").get_to(e.witness);
  j.at("images").get_to(e.images);
}

inline void to_json(nlohmann::json& j, const Transition& t) { j = nlohmann::json::array({t.from, t.letter, t.to}); }
inline void from_json(const nlohmann::json& j, Transition& t) {
  j.at(0).get_to(t.from);
  j.at(1).get_to(t.letter);
  j.at(2).get_to(t.to);
}

inline void to_json(nlohmann::json& j, const Tables& t) {
  j = nlohmann::json::object();
  if (!t.mul.empty()) j["mul"] = t.mul;
  if (!t.meet.empty()) j["meet"] = t.meet;
  if (!t.join.empty()) j["join"] = t.join;
}
inline void from_json(const nlohmann::json& j, Tables& t) {
  if (j.contains("mul")) j.at("mul").get_to(t.mul);
  if (j.contains("meet")) j.at("meet").get_to(t.meet);
  if (j.contains("join")) j.at("join").get_to(t.join);
}

inline void to_json(nlohmann::json& j, const Document& d) {
  j = {{"alphabet", d.alphabet}, {"regex", d.regex},       {"level", d.level},     {"states", d.states},
       {"transitions", d.transitions}, {"hasse", d.hasse}, {"elements", d.elements}, {"tables", d.tables}};
}
inline void from_json(const nlohmann::json& j, Document& d) {
  j.at("alphabet").get_to(d.alphabet);
  j.at("regex").get_to(d.regex);
  j.at("level").get_to(d.level);
  j.at("states").get_to(d.states);
  j.at("transitions").get_to(d.transitions);
  j.at("hasse").get_to(d.hasse);
  j.at("elements").get_to(d.elements);
  j.at("tables").get_to(d.tables);
}

// ---------------------------------------------------------------------------
// Building documents.

inline std::vector<State> residual_states(const ProfileTable& pt) {
  const Dfa& dfa = pt.base();
  std::vector<State> out;
  for (std::size_t q = 0; q < dfa.size(); ++q)
    out.push_back({q, dfa.label(state_id(q)), dfa.finals[q], residual_atoms(pt, state_id(q)).bits.indices()});
  return out;
}

inline Document dfa_document(const ProfileTable& pt, std::string regex) {
  const Dfa& dfa = pt.base();
  Document d{dfa.alphabet.letters(), std::move(regex), "dfa", residual_states(pt), {}, {}, {}, {}};
  for (std::size_t q = 0; q < dfa.size(); ++q)
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a)
      d.transitions.push_back({q, std::string(1, dfa.alphabet.letter(a)), index(dfa.delta[q][a])});
  return d;
}

inline Document automaton_document(const ProfileTable& pt, const CanonicalAutomaton& a, std::string regex,
                                   std::string level) {
  Document d{pt.alphabet().letters(), std::move(regex), std::move(level), {}, {}, a.order.covers, {}, {}};
  for (std::size_t i = 0; i < a.size(); ++i) d.states.push_back({i, a.labels[i], a.finals[i], a.states[i].bits.indices()});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < pt.alphabet().size(); ++c)
      d.transitions.push_back({i, std::string(1, pt.alphabet().letter(c)), a.delta[i][c]});
  return d;
}

inline Document monoid_document(const ProfileTable& pt, const SyntacticMonoid& m, std::string regex) {
  Document d{pt.alphabet().letters(), std::move(regex), "monoid", residual_states(pt), {}, {}, {}, {}};
  for (std::size_t e = 0; e < m.size(); ++e) {
    Element el{e, word_text(m.elements[e].witness), {}};
    for (StateId t : m.elements[e].map) el.images.push_back(residual_atoms(pt, t).bits.indices());
    d.elements.push_back(std::move(el));
  }
  d.tables.mul = m.cayley;
  return d;
}

template <class Witness>
std::vector<Element> algebra_elements(const ActionElements<Witness>& alg) {
  std::vector<Element> out;
  for (std::size_t e = 0; e < alg.size(); ++e) {
    Element el{e, to_string(alg.witnesses[e]), {}};
    for (auto id : alg.maps[e]) el.images.push_back(alg.image_pool[id].bits.indices());
    out.push_back(std::move(el));
  }
  return out;
}

inline Document semiring_document(const SyntacticSemiring& s, std::string regex) {
  Document d{s.table.alphabet().letters(), std::move(regex), "semiring", residual_states(s.table), {}, s.order.covers,
             algebra_elements(s), {}};
  d.tables.mul = s.mul_table;
  d.tables.meet = s.meet_table;
  return d;
}

inline Document lattice_document(const SyntacticLatticeAlgebra& a, std::string regex) {
  Document d{a.table.alphabet().letters(), std::move(regex), "lattice", residual_states(a.table), {}, a.order.covers,
             algebra_elements(a), {}};
  d.tables.mul = a.mul_table;
  d.tables.meet = a.meet_table;
  d.tables.join = a.join_table;
  return d;
}

inline std::string to_json_text(const Document& d) { return nlohmann::json(d).dump(2) + "\n"; }

inline Document parse_json_document(const std::string& text) { return nlohmann::json::parse(text).get<Document>(); }

// ---------------------------------------------------------------------------
// DOT.

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// One node per state (finals double-circled, the initial state bold), one
/// labelled edge per transition and undirected dashed edges for inclusion covers.
inline std::string to_dot(const Document& d, std::optional<std::size_t> initial = std::nullopt) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(d.level) << "\" {\n  rankdir=LR;\n";
  for (const auto& s : d.states) {
    os << "  " << s.id << " [label=\"" << dot_escape(s.label) << "\", shape=" << (s.final ? "doublecircle" : "circle");
    if (initial && *initial == s.id) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& t : d.transitions)
    os << "  " << t.from << " -> " << t.to << " [label=\"" << dot_escape(t.letter) << "\"];\n";
  for (const auto& [lo, hi] : d.hasse) os << "  " << lo << " -> " << hi << " [style=dashed, dir=none];\n";
  os << "}\n";
  return os.str();
}

/// Hasse diagram of an algebra: nodes are elements labelled by witness.
inline std::string elements_to_dot(const Document& d) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(d.level) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& e : d.elements) os << "  " << e.id << " [label=\"" << dot_escape(e.witness) << "\"];\n";
  for (const auto& [lo, hi] : d.hasse) os << "  " << lo << " -> " << hi << " [dir=none];\n";
  for (const auto& t : d.transitions)
    os << "  " << t.from << " -> " << t.to << " [label=\"" << dot_escape(t.letter) << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// ASCII tables.

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Code points, so that ∩ and ∪ count as one column.
inline std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

inline std::string format_table(const TextTable& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? " | " : "") << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - display_width(row[i]), ' ');
    }
    os << "\n";
  };
  line(t.header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 3 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
  for (const auto& r : t.rows) line(r);
  return os.str();
}

/// Name of a language: the label of the matching automaton state, else its profile indices.
inline std::string language_name(const CanonicalAutomaton& a, const AtomSet& x) {
  if (auto i = a.find(x)) return a.labels[*i];
  std::string s = "{";
  bool first = true;
  for (auto i : x.bits.indices()) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "}";
}

/// Residuals other than ∅ and A*, whose images carry all the information
/// when the remaining columns are derivable.
inline std::vector<std::size_t> nontrivial_residuals(const ProfileTable& pt) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < pt.base().size(); ++q) {
    AtomSet r = residual_atoms(pt, state_id(q));
    if (r != top(pt) && r != bottom(pt)) out.push_back(q);
  }
  return out;
}

inline std::string monoid_table(const ProfileTable& pt, const SyntacticMonoid& m) {
  const Dfa& dfa = pt.base();
  TextTable t;
  t.header.push_back("");
  for (std::size_t q = 0; q < dfa.size(); ++q) t.header.push_back(dfa.label(state_id(q)));
  for (const auto& e : m.elements) {
    std::vector<std::string> row{word_text(e.witness)};
    for (StateId r : e.map) row.push_back(dfa.label(r));
    t.rows.push_back(std::move(row));
  }
  return format_table(t);
}

/// Rows are elements by witness. Columns are the meet automaton's states, or
/// only the nontrivial residuals when `suppress` is set.
inline std::string semiring_table(const SyntacticSemiring& s, const MeetAutomaton& m, bool suppress) {
  TextTable t;
  t.header.push_back("");
  std::vector<AtomSet> cols;
  if (suppress) {
    for (auto q : nontrivial_residuals(s.table)) cols.push_back(residual_atoms(s.table, state_id(q)));
  } else {
    cols = m.states;
  }
  for (const auto& c : cols) t.header.push_back(language_name(m, c));
  for (std::size_t e = 0; e < s.size(); ++e) {
    std::vector<std::string> row{to_string(s.witnesses[e])};
    for (const auto& c : cols) row.push_back(language_name(m, semiring_image(s, e, c)));
    t.rows.push_back(std::move(row));
  }
  return format_table(t);
}

/// As semiring_table over the lattice automaton. Images on states that are
/// not residuals are those of the stored witness.
inline std::string lattice_table(const SyntacticLatticeAlgebra& a, const LatticeAutomaton& l, bool suppress) {
  TextTable t;
  t.header.push_back("");
  std::vector<AtomSet> cols;
  if (suppress) {
    for (auto q : nontrivial_residuals(a.table)) cols.push_back(residual_atoms(a.table, state_id(q)));
  } else {
    cols = l.states;
  }
  for (const auto& c : cols) t.header.push_back(language_name(l, c));
  for (std::size_t e = 0; e < a.size(); ++e) {
    std::vector<std::string> row{to_string(a.witnesses[e])};
    for (const auto& c : cols) row.push_back(language_name(l, witness_image(a, e, c)));
    t.rows.push_back(std::move(row));
  }
  return format_table(t);
}

inline std::string automaton_table(const Document& d) {
  TextTable t;
  t.header = {"", "state", "final"};
  for (const auto& tr : d.transitions)
    if (tr.from == d.transitions.front().from) t.header.push_back(tr.letter);
  for (const auto& s : d.states) {
    std::vector<std::string> row{std::to_string(s.id), s.label, s.final ? "yes" : ""};
    for (const auto& tr : d.transitions)
      if (tr.from == s.id) row.push_back(d.states[tr.to].label);
    t.rows.push_back(std::move(row));
  }
  std::string out = format_table(t);
  if (!d.hasse.empty()) {
    out += "\ncovers (lower < upper):\n";
    for (const auto& [lo, hi] : d.hasse) out += "  " + d.states[lo].label + " < " + d.states[hi].label + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reversibility verdict.

inline nlohmann::json atoms_json(const AtomSet& x) { return x.bits.indices(); }

inline nlohmann::json counterexample_json(const Dfa& dfa, const IdentityCounterexample& c) {
  return {{"p", word_text(c.p)},
          {"u", word_text(c.u)},
          {"v", word_text(c.v)},
          {"w", word_text(c.w)},
          {"state", dfa.label(c.q)},
          {"left", atoms_json(c.left)},
          {"right", atoms_json(c.right)}};
}

inline nlohmann::json verdict_json(const Dfa& dfa, const ReversibilityReport& r, const std::string& regex) {
  nlohmann::json j;
  j["regex"] = regex;
  j["alphabet"] = dfa.alphabet.letters();
  j["reversible"] = r.reversible;
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"f", dfa.label(w.f)}, {"g", dfa.label(w.g)}, {"h", dfa.label(w.h)},
                    {"x", word_text(w.x)}, {"y", word_text(w.y)}};
  } else {
    j["witness"] = nullptr;
  }
  j["identity_counterexample"] =
      r.identity_counterexample ? counterexample_json(dfa, *r.identity_counterexample) : nlohmann::json(nullptr);
  if (r.constructed) {
    auto c = counterexample_json(dfa, r.constructed->counterexample);
    c["case"] = r.constructed->case_number;
    c["s"] = word_text(r.constructed->s);
    c["r"] = word_text(r.constructed->r);
    j["constructed_counterexample"] = c;
  } else {
    j["constructed_counterexample"] = nullptr;
  }
  return j;
}

}  // namespace render

}  // namespace synlat
