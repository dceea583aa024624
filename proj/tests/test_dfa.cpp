#include <catch_amalgamated.hpp>

#include <random>

#include "support/test_support.hpp"
#include "synlat/dfa.hpp"
#include "synlat/regex.hpp"

using namespace synlat;

namespace {

Dfa product_dfa(const Dfa& x, const Dfa& y) {
  Dfa p;
  p.alphabet = x.alphabet;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      p.delta.emplace_back();
      for (std::size_t a = 0; a < x.alphabet.size(); ++a)
        p.delta.back().push_back(state_id(index(x.delta[i][a]) * y.size() + index(y.delta[j][a])));
      p.finals.push_back(x.finals[i] && y.finals[j]);
    }
  p.initial = state_id(index(x.initial) * y.size() + index(y.initial));
  return p;
}

StateId state_for(const Dfa& d, const std::string& pattern) {
  Dfa target = compile_canonical_dfa(pattern, d.alphabet);
  for (std::size_t q = 0; q < d.size(); ++q)
    if (equivalent(rooted_at(d, state_id(q)), target)) return state_id(q);
  FAIL("no state for " << pattern);
  return {};
}

}  // namespace

TEST_CASE("a+b+ transitions") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a+b+", ab);
  REQUIRE(d.size() == 4);
  StateId L = state_for(d, "a+b+"), K = state_for(d, "a*b+"), E = state_for(d, "%0"), B = state_for(d, "b*");
  CHECK(d.initial == L);
  CHECK(d.next(L, 0) == K);
  CHECK(d.next(L, 1) == E);
  CHECK(d.next(K, 0) == K);
  CHECK(d.next(K, 1) == B);
  CHECK(d.next(B, 0) == E);
  CHECK(d.next(B, 1) == B);
  CHECK(d.next(E, 0) == E);
  CHECK(d.next(E, 1) == E);
  for (std::size_t q = 0; q < 4; ++q) CHECK(d.finals[q] == (state_id(q) == B));
}

TEST_CASE("minimizing the diagonal product gives back the canonical automaton") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a+b+", ab);
  Dfa p = product_dfa(d, d);
  CHECK(p.size() == 16);
  Dfa m = minimize(p);
  CHECK(m.size() == 4);
  CHECK(equivalent(m, d));
}

TEST_CASE("minimize is idempotent and the numbering canonical") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Alphabet al(i % 2 ? "ab" : "abc");
    Dfa d = compile_canonical_dfa(testing::random_pattern(rng, al, 8), al);
    Dfa again = minimize(d);
    CHECK(again.delta == d.delta);
    CHECK(again.finals == d.finals);
    Dfa p = minimize(product_dfa(d, d));
    CHECK(p.delta == d.delta);
  }
}

TEST_CASE("equivalence and distinguishing words") {
  Alphabet ab("ab");
  Dfa x = compile_canonical_dfa("a+b+", ab);
  Dfa y = compile_canonical_dfa("a*b+", ab);
  CHECK_FALSE(equivalent(x, y));
  CHECK(distinguishing_word(x, y) == Word("b"));
  CHECK(equivalent(x, compile_canonical_dfa("aa*bb*", ab)));
  CHECK_FALSE(distinguishing_word(x, x));
  CHECK_THROWS_AS(equivalent(x, compile_canonical_dfa("a", Alphabet("a"))), std::invalid_argument);
}

TEST_CASE("equivalence agrees with bounded word comparison") {
  std::mt19937_64 rng(5);
  Alphabet ab("ab");
  auto words = testing::all_words(ab, 8);
  for (int i = 0; i < 200; ++i) {
    Dfa x = compile_canonical_dfa(testing::random_pattern(rng, ab, 6), ab);
    Dfa y = compile_canonical_dfa(testing::random_pattern(rng, ab, 6), ab);
    bool same = true;
    for (const auto& w : words) same = same && accepts(x, w) == accepts(y, w);
    // Minimal automata with at most 8 states differ on some word of length < 8.
    if (x.size() <= 8 && y.size() <= 8) CHECK(equivalent(x, y) == same);
    auto dw = distinguishing_word(x, y);
    CHECK(dw.has_value() == !equivalent(x, y));
    if (dw) CHECK(accepts(x, *dw) != accepts(y, *dw));
  }
}

TEST_CASE("finite language automaton") {
  Alphabet ab("ab");
  std::vector<Word> ws{"aa", "bb"};
  Dfa d = finite_language_dfa(ab, ws);
  CHECK(equivalent(d, compile_canonical_dfa("aa|bb", ab)));
  std::vector<Word> none;
  CHECK(finite_language_dfa(ab, none).size() == 1);
}
