#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synlat/alphabet.hpp"

namespace synlat {

enum class StateId : std::uint32_t {};

constexpr std::size_t index(StateId s) noexcept { return static_cast<std::size_t>(s); }
constexpr StateId state_id(std::size_t i) noexcept { return static_cast<StateId>(i); }

/// Complete deterministic automaton. For the canonical automaton of a language
/// each state stands for one left quotient u^-1 L and `labels` names it.
struct Dfa {
  Alphabet alphabet;
  std::vector<std::vector<StateId>> delta;  // delta[state][letter index]
  StateId initial{};
  std::vector<bool> finals;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return delta.size(); }
  StateId next(StateId q, std::size_t letter) const { return delta[index(q)][letter]; }
  bool is_final(StateId q) const { return finals[index(q)]; }
  std::string label(StateId q) const {
    return index(q) < labels.size() && !labels[index(q)].empty() ? labels[index(q)]
                                                                  : "q" + std::to_string(index(q));
  }

  bool operator==(const Dfa&) const = default;
};

/// Throws std::invalid_argument unless the automaton is complete and well formed.
inline void validate(const Dfa& d) {
  if (d.size() == 0) throw std::invalid_argument("automaton has no states");
  if (d.finals.size() != d.size()) throw std::invalid_argument("final-state vector size mismatch");
  if (index(d.initial) >= d.size()) throw std::invalid_argument("initial state out of range");
  for (const auto& row : d.delta) {
    if (row.size() != d.alphabet.size()) throw std::invalid_argument("transition function is not total");
    for (StateId t : row)
      if (index(t) >= d.size()) throw std::invalid_argument("transition target out of range");
  }
}

inline StateId run(const Dfa& d, StateId from, std::string_view word) {
  StateId q = from;
  for (char c : word) q = d.next(q, d.alphabet.index_or_throw(c));
  return q;
}

inline bool accepts(const Dfa& d, std::string_view word) { return d.is_final(run(d, d.initial, word)); }

namespace detail {

/// Quotients `d` by the block partition, keeps blocks reachable from the
/// initial state and numbers them in BFS order (letters in alphabet order).
/// The lowest-numbered member represents each block.
inline Dfa renumber_bfs(const Dfa& d, const std::vector<std::size_t>& block_of,
                        std::size_t block_count) {
  std::vector<std::size_t> rep(block_count, SIZE_MAX);
  for (std::size_t q = 0; q < d.size(); ++q)
    if (rep[block_of[q]] == SIZE_MAX) rep[block_of[q]] = q;

  std::vector<std::size_t> new_id(block_count, SIZE_MAX);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{block_of[index(d.initial)]};
  new_id[queue.front()] = 0;
  order.push_back(queue.front());
  while (!queue.empty()) {
    std::size_t b = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      std::size_t t = block_of[index(d.delta[rep[b]][a])];
      if (new_id[t] == SIZE_MAX) {
        new_id[t] = order.size();
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }

  Dfa out;
  out.alphabet = d.alphabet;
  out.initial = state_id(0);
  out.delta.resize(order.size());
  out.finals.resize(order.size());
  out.labels.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t q = rep[order[i]];
    out.finals[i] = d.finals[q];
    if (q < d.labels.size()) out.labels[i] = d.labels[q];
    out.delta[i].resize(d.alphabet.size());
    for (std::size_t a = 0; a < d.alphabet.size(); ++a)
      out.delta[i][a] = state_id(new_id[block_of[index(d.delta[q][a])]]);
  }
  return out;
}

}  // namespace detail

/// Hopcroft partition refinement. The result has no two equivalent states, only
/// reachable ones, and is numbered in BFS order from the initial state.
/// Each block keeps the label of its lowest-numbered member.
inline Dfa minimize(const Dfa& d) {
  validate(d);
  const std::size_t n = d.size();
  const std::size_t k = d.alphabet.size();

  // inverse[a][q] = predecessors of q on letter a
  std::vector<std::vector<std::vector<std::size_t>>> inverse(k, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t a = 0; a < k; ++a) inverse[a][index(d.delta[q][a])].push_back(q);

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<std::size_t> fin, nonfin;
    for (std::size_t q = 0; q < n; ++q) (d.finals[q] ? fin : nonfin).push_back(q);
    for (auto* part : {&fin, &nonfin})
      if (!part->empty()) {
        for (std::size_t q : *part) block_of[q] = blocks.size();
        blocks.push_back(std::move(*part));
      }
  }

  std::vector<bool> in_work(blocks.size(), false);
  std::deque<std::size_t> work;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    work.push_back(b);
    in_work[b] = true;
  }

  std::vector<std::size_t> hits(n, 0);
  std::vector<std::size_t> touched;
  std::vector<bool> marked(n, false);
  while (!work.empty()) {
    std::size_t splitter = work.front();
    work.pop_front();
    in_work[splitter] = false;
    const std::vector<std::size_t> splitter_states = blocks[splitter];
    for (std::size_t a = 0; a < k; ++a) {
      touched.clear();
      for (std::size_t t : splitter_states)
        for (std::size_t p : inverse[a][t]) {
          if (marked[p]) continue;
          marked[p] = true;
          std::size_t b = block_of[p];
          if (hits[b]++ == 0) touched.push_back(b);
        }
      for (std::size_t b : touched) {
        if (hits[b] < blocks[b].size()) {
          std::vector<std::size_t> inside, outside;
          for (std::size_t q : blocks[b]) (marked[q] ? inside : outside).push_back(q);
          std::size_t nb = blocks.size();
          blocks[b] = std::move(outside);
          for (std::size_t q : inside) block_of[q] = nb;
          blocks.push_back(std::move(inside));
          in_work.push_back(false);
          if (in_work[b]) {
            work.push_back(nb);
            in_work[nb] = true;
          } else {
            std::size_t smaller = blocks[b].size() <= blocks[nb].size() ? b : nb;
            work.push_back(smaller);
            in_work[smaller] = true;
          }
        }
        hits[b] = 0;
      }
      for (std::size_t t : splitter_states)
        for (std::size_t p : inverse[a][t]) marked[p] = false;
    }
  }
  return detail::renumber_bfs(d, block_of, blocks.size());
}

/// Same automaton with `q` as the initial state, minimized. Its language is the
/// residual recognized from `q`.
inline Dfa rooted_at(const Dfa& d, StateId q) {
  Dfa copy = d;
  copy.initial = q;
  return minimize(copy);
}

namespace detail {

inline void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet == b.alphabet)) throw std::invalid_argument("automata are over different alphabets");
}

}  // namespace detail

/// Language equality by the Hopcroft-Karp union-find merge.
inline bool equivalent(const Dfa& d1, const Dfa& d2) {
  detail::require_same_alphabet(d1, d2);
  validate(d1);
  validate(d2);
  const std::size_t off = d1.size();
  std::vector<std::size_t> parent(d1.size() + d2.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto final_of = [&](std::size_t x) { return x < off ? d1.finals[x] : d2.finals[x - off]; };
  auto succ = [&](std::size_t x, std::size_t a) {
    return x < off ? index(d1.delta[x][a]) : off + index(d2.delta[x - off][a]);
  };

  std::vector<std::pair<std::size_t, std::size_t>> stack{{index(d1.initial), off + index(d2.initial)}};
  parent[find(off + index(d2.initial))] = find(index(d1.initial));
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (final_of(p) != final_of(q)) return false;
    for (std::size_t a = 0; a < d1.alphabet.size(); ++a) {
      std::size_t r1 = find(succ(p, a)), r2 = find(succ(q, a));
      if (r1 != r2) {
        parent[r2] = r1;
        stack.emplace_back(succ(p, a), succ(q, a));
      }
    }
  }
  return true;
}

/// Shortlex-least word in the symmetric difference of the two languages, if any.
inline std::optional<Word> distinguishing_word(const Dfa& d1, const Dfa& d2) {
  detail::require_same_alphabet(d1, d2);
  using Pair = std::pair<std::size_t, std::size_t>;
  std::map<Pair, std::pair<Pair, char>> parent;
  Pair start{index(d1.initial), index(d2.initial)};
  parent[start] = {start, 0};
  std::deque<Pair> queue{start};
  while (!queue.empty()) {
    Pair cur = queue.front();
    queue.pop_front();
    if (d1.finals[cur.first] != d2.finals[cur.second]) {
      Word w;
      for (Pair p = cur; p != start; p = parent[p].first) w.push_back(parent[p].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < d1.alphabet.size(); ++a) {
      Pair nxt{index(d1.delta[cur.first][a]), index(d2.delta[cur.second][a])};
      if (parent.emplace(nxt, std::pair{cur, d1.alphabet.letter(a)}).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

/// Minimal automaton of a finite language, built from its prefix tree.
inline Dfa finite_language_dfa(const Alphabet& alphabet, std::span<const Word> words) {
  Dfa d;
  d.alphabet = alphabet;
  const auto sink = state_id(0);
  d.delta.push_back(std::vector<StateId>(alphabet.size(), sink));
  d.finals.push_back(false);
  d.delta.push_back(std::vector<StateId>(alphabet.size(), sink));
  d.finals.push_back(false);
  d.initial = state_id(1);
  for (const Word& w : words) {
    StateId q = d.initial;
    for (char c : w) {
      std::size_t a = alphabet.index_or_throw(c);
      if (d.delta[index(q)][a] == sink) {
        d.delta[index(q)][a] = state_id(d.size());
        d.delta.push_back(std::vector<StateId>(alphabet.size(), sink));
        d.finals.push_back(false);
      }
      q = d.delta[index(q)][a];
    }
    d.finals[index(q)] = true;
  }
  return minimize(d);
}

}  // namespace synlat
