#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "synlat/atoms.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"
#include "synlat/syntactic.hpp"

namespace synlat {

/// States f != g != h with f·x = g = g·x and g·y = h.
struct ForbiddenWitness {
  StateId f{}, g{}, h{};
  Word x, y;
};

/// Words p, u, v, w and a state q at which
///   x^ω y ∨ (x^ω z ∧ t)  and  x^ω y ∨ (x^ω t ∧ z)
/// differ after substituting p, u, v, w for x, y, z, t.
struct IdentityCounterexample {
  Word p, u, v, w;
  StateId q{};
  AtomSet left, right;
};

/// x ranges over the transformation monoid in index order, f over states.
/// If every letter fixes g then so does every word, so y is a single letter.
inline std::optional<ForbiddenWitness> find_forbidden_configuration(const Dfa& dfa, const SyntacticMonoid& m) {
  const std::size_t n = dfa.size(), k = dfa.alphabet.size();
  for (const auto& x : m.elements)
    for (std::size_t f = 0; f < n; ++f) {
      StateId g = x.map[f];
      if (index(g) == f || x.map[index(g)] != g) continue;
      for (std::size_t a = 0; a < k; ++a) {
        StateId h = dfa.next(g, a);
        if (h != g) return ForbiddenWitness{state_id(f), g, h, x.witness, Word(1, dfa.alphabet.letter(a))};
      }
    }
  return std::nullopt;
}

inline std::optional<ForbiddenWitness> find_forbidden_configuration(const Dfa& dfa, const Budgets& budgets = {}) {
  return find_forbidden_configuration(dfa, syntactic_monoid(dfa, budgets));
}

namespace detail {

struct IdentitySides {
  AtomSet left, right;
};

inline IdentitySides identity_sides(const ProfileTable& pt, const SyntacticMonoid& m, std::size_t p, std::size_t u,
                                    std::size_t v, std::size_t w, StateId q) {
  const std::size_t s = omega_power(m, p);
  auto at = [&](std::size_t e) { return residual_atoms(pt, m.elements[e].map[index(q)]); };
  AtomSet su = at(m.multiply(s, u));
  return {join(su, meet(at(m.multiply(s, v)), at(w))), join(su, meet(at(m.multiply(s, w)), at(v)))};
}

}  // namespace detail

/// Exhaustive check of the identity over all quadruples of monoid elements.
/// Every side is a union of residual languages, so the comparison works on
/// the residual atom sets of the states reached.
inline std::optional<IdentityCounterexample> check_reversibility_identity(const ProfileTable& pt,
                                                                          const SyntacticMonoid& m,
                                                                          const Budgets& budgets = {}) {
  const Dfa& dfa = pt.base();
  const std::size_t n = dfa.size(), size = m.size();
  const double quads = static_cast<double>(size) * size * size * size;
  if (quads > static_cast<double>(budgets.quadruples))
    throw BudgetExceeded("identity check needs " + std::to_string(static_cast<unsigned long long>(quads)) +
                         " quadruples, budget is " + std::to_string(budgets.quadruples));

  std::vector<Bitset> res(n);
  for (std::size_t q = 0; q < n; ++q) res[q] = residual_atoms(pt, state_id(q)).bits;
  // meets[a][b] = residual a ∩ residual b
  std::vector<std::vector<Bitset>> meets(n, std::vector<Bitset>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) meets[a][b] = res[a] & res[b];
  auto st = [&](std::size_t e, std::size_t q) { return index(m.elements[e].map[q]); };

  std::vector<std::size_t> omega(size);
  for (std::size_t p = 0; p < size; ++p) omega[p] = omega_power(m, p);

  for (std::size_t p = 0; p < size; ++p) {
    const std::size_t s = omega[p];
    for (std::size_t u = 0; u < size; ++u) {
      const std::size_t su = m.multiply(s, u);
      for (std::size_t v = 0; v < size; ++v) {
        const std::size_t sv = m.multiply(s, v);
        for (std::size_t w = 0; w < size; ++w) {
          const std::size_t sw = m.multiply(s, w);
          for (std::size_t q = 0; q < n; ++q) {
            const Bitset& y = res[st(su, q)];
            const Bitset& lhs = meets[st(sv, q)][st(w, q)];
            const Bitset& rhs = meets[st(sw, q)][st(v, q)];
            if (lhs == rhs || (lhs | y) == (rhs | y)) continue;
            auto sides = detail::identity_sides(pt, m, p, u, v, w, state_id(q));
            return IdentityCounterexample{m.elements[p].witness, m.elements[u].witness, m.elements[v].witness,
                                          m.elements[w].witness, state_id(q), sides.left, sides.right};
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// Shortest word in exactly one of the residuals at `a` and `b`.
inline Word separator_word(const Dfa& dfa, StateId a, StateId b) {
  auto w = distinguishing_word(rooted_at(dfa, a), rooted_at(dfa, b));
  if (!w) throw InconsistencyError("distinct states of a minimal automaton accept the same language");
  return *w;
}

struct ConstructedCounterexample {
  int case_number = 0;  // 1..4
  Word s, r;            // separators of (f, g) and of (g, h)
  IdentityCounterexample counterexample;
};

/// Builds a counterexample to the identity from a forbidden configuration,
/// with p = x and u, v, w chosen from the separators by which of f, g
/// contains s and which of g, h contains r.
inline ConstructedCounterexample construct_identity_counterexample(const ProfileTable& pt, const SyntacticMonoid& m,
                                                                   const ForbiddenWitness& fw) {
  const Dfa& dfa = pt.base();
  ConstructedCounterexample out;
  out.s = separator_word(dfa, fw.f, fw.g);
  out.r = separator_word(dfa, fw.g, fw.h);
  const bool s_in_f = dfa.is_final(run(dfa, fw.f, out.s));
  const bool r_in_g = dfa.is_final(run(dfa, fw.g, out.r));
  const Word& p = fw.x;
  Word u, v, w;
  if (s_in_f && r_in_g) {
    out.case_number = 1;
    u = out.s, v = out.r, w = out.s;
  } else if (s_in_f) {
    out.case_number = 2;
    u = out.s, v = fw.y + out.r, w = out.s;
  } else if (r_in_g) {
    out.case_number = 3;
    u = fw.y + out.r, v = out.s, w = p + out.r;
  } else {
    out.case_number = 4;
    u = out.r, v = out.s, w = p + out.s;
  }
  const Alphabet& al = dfa.alphabet;
  auto sides = detail::identity_sides(pt, m, m.element_of(p, al), m.element_of(u, al), m.element_of(v, al),
                                      m.element_of(w, al), fw.f);
  if (sides.left == sides.right)
    throw InconsistencyError("case construction did not separate the two sides of the identity");
  if (!contains_lambda(pt, sides.left) || contains_lambda(pt, sides.right))
    throw InconsistencyError("case construction separated the sides the wrong way");
  out.counterexample = {p, u, v, w, fw.f, sides.left, sides.right};
  return out;
}

struct ReversibilityReport {
  bool reversible = true;
  std::optional<ForbiddenWitness> witness;
  std::optional<IdentityCounterexample> identity_counterexample;  // first one in quadruple order
  std::optional<ConstructedCounterexample> constructed;           // from the witness
};

/// Decides reversibility by the forbidden configuration and checks the
/// identity independently; disagreement is an internal error.
inline ReversibilityReport is_reversible(const Dfa& dfa, const Budgets& budgets = {}) {
  ReversibilityReport rep;
  const SyntacticMonoid m = syntactic_monoid(dfa, budgets);
  const ProfileTable pt = build_profile_table(dfa, budgets.profiles);
  rep.witness = find_forbidden_configuration(dfa, m);
  rep.identity_counterexample = check_reversibility_identity(pt, m, budgets);
  rep.reversible = !rep.witness;
  if (rep.witness.has_value() != rep.identity_counterexample.has_value())
    throw InconsistencyError(rep.witness ? "forbidden configuration found but the identity holds"
                                         : "identity fails but no forbidden configuration exists");
  if (rep.witness) rep.constructed = construct_identity_counterexample(pt, m, *rep.witness);
  return rep;
}

}  // namespace synlat
