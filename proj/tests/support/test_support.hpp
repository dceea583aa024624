#pragma once

// Helpers shared by the test programs: a direct regex matcher and random
// regexes, words, forms and terms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "synlat/alphabet.hpp"
#include "synlat/regex.hpp"
#include "synlat/terms.hpp"

namespace synlat::testing {

/// End positions reachable after matching `n` from position `from` of `w`.
inline std::set<std::size_t> match_ends(const RegexNode& n, std::string_view w, std::size_t from) {
  switch (n.kind) {
    case RegexKind::EmptySet: return {};
    case RegexKind::EmptyWord: return {from};
    case RegexKind::Letter:
      if (from < w.size() && w[from] == n.letter) return {from + 1};
      return {};
    case RegexKind::Concat: {
      std::set<std::size_t> cur{from};
      for (const auto& c : n.children) {
        std::set<std::size_t> next;
        for (auto p : cur)
          for (auto e : match_ends(*c, w, p)) next.insert(e);
        cur = std::move(next);
      }
      return cur;
    }
    case RegexKind::Union: {
      std::set<std::size_t> out;
      for (const auto& c : n.children)
        for (auto e : match_ends(*c, w, from)) out.insert(e);
      return out;
    }
    case RegexKind::Optional: {
      auto out = match_ends(*n.children[0], w, from);
      out.insert(from);
      return out;
    }
    case RegexKind::Star:
    case RegexKind::Plus: {
      std::set<std::size_t> out;
      if (n.kind == RegexKind::Star) out.insert(from);
      std::vector<std::size_t> todo{from};
      std::set<std::size_t> seen{from};
      while (!todo.empty()) {
        auto p = todo.back();
        todo.pop_back();
        for (auto e : match_ends(*n.children[0], w, p)) {
          out.insert(e);
          if (seen.insert(e).second) todo.push_back(e);
        }
      }
      return out;
    }
  }
  return {};
}

inline bool regex_matches(const RegexAst& ast, std::string_view w) { return match_ends(*ast.root, w, 0).contains(w.size()); }

/// Random regex pattern with at most `max_nodes` AST nodes.
inline std::string random_pattern(std::mt19937_64& rng, const Alphabet& al, std::size_t max_nodes) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::function<std::string(std::size_t)> gen = [&](std::size_t budget) -> std::string {
    if (budget <= 1) {
      std::size_t r = pick(al.size() + 2);
      if (r < al.size()) return std::string(1, al.letter(r));
      return r == al.size() ? "%e" : std::string(1, al.letter(pick(al.size())));
    }
    switch (pick(5)) {
      case 0: {
        std::size_t left = 1 + pick(budget - 1);
        return "(" + gen(left) + gen(std::max<std::size_t>(1, budget - 1 - left)) + ")";
      }
      case 1: {
        std::size_t left = 1 + pick(budget - 1);
        return "(" + gen(left) + "|" + gen(std::max<std::size_t>(1, budget - 1 - left)) + ")";
      }
      case 2: return "(" + gen(budget - 1) + ")*";
      case 3: return "(" + gen(budget - 1) + ")+";
      default: return "(" + gen(budget - 1) + ")?";
    }
  };
  return gen(1 + pick(max_nodes));
}

inline std::vector<Word> all_words(const Alphabet& al, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c : al.letters()) out.push_back(out[i] + c);
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, const Alphabet& al, std::size_t max_len) {
  Word w;
  std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) w += al.letter(rng() % al.size());
  return w;
}

inline MeetForm random_meet_form(std::mt19937_64& rng, const Alphabet& al, std::size_t max_words, std::size_t max_len) {
  std::vector<Word> ws;
  std::size_t n = 1 + rng() % max_words;
  for (std::size_t i = 0; i < n; ++i) ws.push_back(random_word(rng, al, max_len));
  return MeetForm::of(std::move(ws));
}

inline LatticeForm random_lattice_form(std::mt19937_64& rng, const Alphabet& al, std::size_t max_terms,
                                       std::size_t max_words, std::size_t max_len) {
  std::size_t n = rng() % (max_terms + 1);
  std::vector<MeetForm> ts;
  for (std::size_t i = 0; i < n; ++i) ts.push_back(random_meet_form(rng, al, max_words, max_len));
  if (rng() % 10 == 0) ts.push_back(MeetForm::top());
  return LatticeForm::of(std::move(ts));
}

/// Random term over letters, λ, ⊤, ⊥ and the operators allowed by `sig`.
inline Term random_term(std::mt19937_64& rng, const Alphabet& al, std::size_t depth, Signature sig) {
  auto leaf = [&]() {
    std::size_t r = rng() % (al.size() + 3);
    if (r < al.size()) return Term::letter(al.letter(r));
    if (r == al.size()) return Term::lambda();
    if (sig == Signature::Monoid) return Term::letter(al.letter(rng() % al.size()));
    if (r == al.size() + 1 || sig == Signature::Semiring) return Term::top();
    return Term::bottom();
  };
  if (depth == 0 || rng() % 4 == 0) return leaf();
  std::size_t ops = sig == Signature::Monoid ? 1 : sig == Signature::Semiring ? 2 : 3;
  auto l = random_term(rng, al, depth - 1, sig);
  auto r = random_term(rng, al, depth - 1, sig);
  switch (rng() % ops) {
    case 0: return Term::dot(l, r);
    case 1: return Term::meet(l, r);
    default: return Term::join(l, r);
  }
}

}  // namespace synlat::testing
