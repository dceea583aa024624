#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "synlat/atoms.hpp"
#include "synlat/bitset.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"

namespace synlat {

/// Covering pairs (lower, upper) of a finite partial order.
struct HasseDiagram {
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  bool operator==(const HasseDiagram&) const = default;
};

/// Transitive reduction of `leq(i, j)` over 0..n-1. `leq` must be a partial order.
template <class Leq>
HasseDiagram hasse_by(std::size_t n, Leq&& leq) {
  std::vector<Bitset> above(n, Bitset(n)), below(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j)) {
        above[i].set(j);
        below[j].set(i);
      }
  HasseDiagram h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : above[i].indices())
      if ((above[i] & below[j]).none()) h.covers.emplace_back(i, j);
  return h;
}

inline HasseDiagram hasse(std::span<const AtomSet> states) {
  return hasse_by(states.size(), [&](std::size_t i, std::size_t j) { return leq(states[i], states[j]); });
}

/// A semiautomaton of languages closed under quotients and under meet (and,
/// for the lattice automaton, join). The first `residual_count` states are
/// the residuals of L in canonical-automaton order.
struct CanonicalAutomaton {
  std::vector<AtomSet> states;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> delta;  // delta[state][letter]
  std::size_t initial = 0;
  std::vector<bool> finals;
  HasseDiagram order;
  std::size_t residual_count = 0;

  std::size_t size() const noexcept { return states.size(); }

  std::optional<std::size_t> find(const AtomSet& x) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == x) return i;
    return std::nullopt;
  }
};

using MeetAutomaton = CanonicalAutomaton;
using LatticeAutomaton = CanonicalAutomaton;

namespace detail {

enum class ClosureOp { Meet, Join };

inline void close_pairwise(CanonicalAutomaton& a, ClosureOp op, std::size_t budget) {
  std::unordered_map<AtomSet, std::size_t, AtomSetHash> seen;
  for (std::size_t i = 0; i < a.states.size(); ++i) seen.emplace(a.states[i], i);
  for (std::size_t i = 0; i < a.states.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      AtomSet x = op == ClosureOp::Meet ? meet(a.states[i], a.states[j]) : join(a.states[i], a.states[j]);
      if (seen.contains(x)) continue;
      if (a.states.size() >= budget)
        throw BudgetExceeded("canonical automaton exceeds " + std::to_string(budget) + " states");
      seen.emplace(x, a.states.size());
      a.labels.push_back("(" + a.labels[j] + (op == ClosureOp::Meet ? " ∩ " : " ∪ ") + a.labels[i] + ")");
      a.states.push_back(std::move(x));
    }
}

inline void finish(const ProfileTable& pt, CanonicalAutomaton& a) {
  std::unordered_map<AtomSet, std::size_t, AtomSetHash> pos;
  for (std::size_t i = 0; i < a.states.size(); ++i) pos.emplace(a.states[i], i);
  const std::size_t k = pt.alphabet().size();
  a.delta.assign(a.size(), std::vector<std::size_t>(k));
  a.finals.assign(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a.finals[i] = contains_lambda(pt, a.states[i]);
    for (std::size_t c = 0; c < k; ++c) {
      auto it = pos.find(quotient_letter(pt, a.states[i], c));
      if (it == pos.end()) throw InconsistencyError("canonical automaton is not closed under quotients");
      a.delta[i][c] = it->second;
    }
  }
  a.order = hasse(a.states);
}

}  // namespace detail

/// States: residuals (canonical DFA order), then A*, then new intersections in
/// discovery order.
inline MeetAutomaton build_meet_automaton(const ProfileTable& pt, const Dfa& dfa,
                                          std::size_t budget = Budgets{}.elements) {
  if (!(pt.base() == dfa)) throw std::invalid_argument("profile table was built from a different automaton");
  MeetAutomaton m;
  for (std::size_t q = 0; q < dfa.size(); ++q) {
    m.states.push_back(residual_atoms(pt, state_id(q)));
    m.labels.push_back(dfa.label(state_id(q)));
  }
  m.residual_count = dfa.size();
  m.initial = index(dfa.initial);
  if (!m.find(top(pt))) {
    m.states.push_back(top(pt));
    m.labels.push_back("A*");
  }
  detail::close_pairwise(m, detail::ClosureOp::Meet, budget);
  detail::finish(pt, m);
  return m;
}

/// The meet automaton's states, then ∅ if missing, then new unions.
inline LatticeAutomaton build_lattice_automaton(const ProfileTable& pt, const Dfa& dfa,
                                                std::size_t budget = Budgets{}.elements) {
  LatticeAutomaton l = build_meet_automaton(pt, dfa, budget);
  if (!l.find(bottom(pt))) {
    l.states.push_back(bottom(pt));
    l.labels.push_back("%0");
  }
  detail::close_pairwise(l, detail::ClosureOp::Join, budget);
  detail::finish(pt, l);
  return l;
}

}  // namespace synlat
