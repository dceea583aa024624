#pragma once

// Brute-force counterparts of the congruences and closures, for testing the
// engines. Word quotients come from raw runs of the automaton; no closure
// code is shared with syntactic.hpp.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "synlat/atoms.hpp"
#include "synlat/dfa.hpp"
#include "synlat/error.hpp"
#include "synlat/terms.hpp"

namespace synlat {

struct OracleConfig {
  std::size_t max_word_length = 2;
  std::size_t max_elements = 20000;
  std::uint64_t seed = 1;
};

enum class AlgebraLevel { Monoid, Semiring, Lattice };

inline std::string to_string(AlgebraLevel l) {
  switch (l) {
    case AlgebraLevel::Monoid: return "monoid";
    case AlgebraLevel::Semiring: return "semiring";
    case AlgebraLevel::Lattice: return "lattice";
  }
  return "?";
}

/// One image per residual.
using ElementImages = std::vector<AtomSet>;

namespace detail {

inline ElementImages word_images(const ProfileTable& pt, const Dfa& dfa, std::string_view u) {
  ElementImages out;
  for (std::size_t q = 0; q < dfa.size(); ++q) out.push_back(residual_atoms(pt, run(dfa, state_id(q), u)));
  return out;
}

inline ElementImages meet_images(const ProfileTable& pt, const Dfa& dfa, const MeetForm& m) {
  ElementImages out(dfa.size(), top(pt));
  for (const auto& u : m.words) {
    auto w = word_images(pt, dfa, u);
    for (std::size_t q = 0; q < out.size(); ++q) out[q] = meet(out[q], w[q]);
  }
  return out;
}

inline ElementImages lattice_images(const ProfileTable& pt, const Dfa& dfa, const LatticeForm& f) {
  ElementImages out(dfa.size(), bottom(pt));
  for (const auto& m : f.terms) {
    auto w = meet_images(pt, dfa, m);
    for (std::size_t q = 0; q < out.size(); ++q) out[q] = join(out[q], w[q]);
  }
  return out;
}

inline void close_pointwise(std::set<ElementImages>& s, bool is_meet, std::size_t budget) {
  std::vector<ElementImages> list(s.begin(), s.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementImages r(list[i].size());
      for (std::size_t q = 0; q < r.size(); ++q) r[q] = is_meet ? meet(list[i][q], list[j][q]) : join(list[i][q], list[j][q]);
      if (s.insert(r).second) {
        if (s.size() > budget) throw BudgetExceeded("oracle enumeration exceeds " + std::to_string(budget) + " elements");
        list.push_back(std::move(r));
      }
    }
}

}  // namespace detail

/// u and v act identically on every state.
inline bool oracle_monoid_congruent(const ProfileTable& pt, const Dfa& dfa, std::string_view u, std::string_view v) {
  (void)pt;
  for (std::size_t q = 0; q < dfa.size(); ++q)
    if (run(dfa, state_id(q), u) != run(dfa, state_id(q), v)) return false;
  return true;
}

inline bool oracle_semiring_congruent(const ProfileTable& pt, const Dfa& dfa, const MeetForm& u, const MeetForm& v) {
  return detail::meet_images(pt, dfa, u) == detail::meet_images(pt, dfa, v);
}

inline bool oracle_lattice_congruent(const ProfileTable& pt, const Dfa& dfa, const LatticeForm& u, const LatticeForm& v) {
  return detail::lattice_images(pt, dfa, u) == detail::lattice_images(pt, dfa, v);
}

/// All words up to the given length, shortlex order.
inline std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_length) continue;
    for (char c : alphabet.letters()) out.push_back(out[i] + c);
  }
  return out;
}

/// Element maps of every normal form whose words have length at most
/// cfg.max_word_length: the word maps; for semirings their meets (with ⊤);
/// for lattice algebras also the joins of those (with ⊥).
inline std::set<ElementImages> oracle_enumerate_elements(const ProfileTable& pt, const Dfa& dfa, AlgebraLevel level,
                                                         const OracleConfig& cfg) {
  std::set<ElementImages> s;
  for (const auto& u : words_up_to(dfa.alphabet, cfg.max_word_length)) s.insert(detail::word_images(pt, dfa, u));
  if (level == AlgebraLevel::Monoid) return s;
  s.insert(ElementImages(dfa.size(), top(pt)));
  detail::close_pointwise(s, true, cfg.max_elements);
  if (level == AlgebraLevel::Semiring) return s;
  s.insert(ElementImages(dfa.size(), bottom(pt)));
  detail::close_pointwise(s, false, cfg.max_elements);
  return s;
}

struct SaturatedEnumeration {
  std::set<ElementImages> elements;
  std::size_t word_length = 0;  // first k with equal sets at k and k+1
};

/// Raises the word-length bound until two consecutive bounds give the same set.
inline SaturatedEnumeration oracle_saturate(const ProfileTable& pt, const Dfa& dfa, AlgebraLevel level,
                                            OracleConfig cfg, std::size_t max_length) {
  cfg.max_word_length = 0;
  auto prev = oracle_enumerate_elements(pt, dfa, level, cfg);
  for (std::size_t k = 1; k <= max_length; ++k) {
    cfg.max_word_length = k;
    auto cur = oracle_enumerate_elements(pt, dfa, level, cfg);
    if (cur == prev) return {std::move(cur), k - 1};
    prev = std::move(cur);
  }
  throw BudgetExceeded("oracle enumeration did not saturate by word length " + std::to_string(max_length));
}

}  // namespace synlat
