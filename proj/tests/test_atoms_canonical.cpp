#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support/abplus.hpp"
#include "support/dfa_ops.hpp"
#include "support/test_support.hpp"
#include "synlat/atoms.hpp"
#include "synlat/canonical.hpp"
#include "synlat/regex.hpp"

using namespace synlat;
using testing::atoms_of;

namespace {

std::set<std::vector<bool>> profiles_by_runs(const Dfa& d, std::size_t max_len) {
  std::set<std::vector<bool>> out;
  for (const auto& w : testing::all_words(d.alphabet, max_len)) {
    std::vector<bool> p;
    for (std::size_t q = 0; q < d.size(); ++q) p.push_back(d.is_final(run(d, state_id(q), w)));
    out.insert(p);
  }
  return out;
}

std::size_t state_named(const CanonicalAutomaton& a, const ProfileTable& pt, const std::string& name) {
  auto i = a.find(atoms_of(pt, testing::abplus_pattern(name)));
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("profiles of a+b+") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a+b+", ab);
  auto pt = build_profile_table(d);
  CHECK(pt.size() == 4);
  auto by_runs = profiles_by_runs(d, 8);
  CHECK(by_runs.size() == 4);
  for (std::size_t i = 0; i < pt.size(); ++i) {
    std::vector<bool> p;
    for (std::size_t q = 0; q < d.size(); ++q) p.push_back(pt.profile(i).test(q));
    CHECK(by_runs.contains(p));
  }
  CHECK(pt.profile_of("") == pt.lambda_profile());
}

TEST_CASE("profile table equals the profiles realized by short words") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 80; ++i) {
    Alphabet al(i % 2 ? "ab" : "abc");
    Dfa d = compile_canonical_dfa(testing::random_pattern(rng, al, 8), al);
    if (d.size() > 6) continue;
    auto pt = build_profile_table(d);
    // Profiles are sets of states; preimage chains of length 2^|Q| cover them all.
    CHECK(profiles_by_runs(d, al.size() == 2 ? 10 : 7).size() <= pt.size());
    for (const auto& w : testing::all_words(al, 5))
      for (std::size_t q = 0; q < d.size(); ++q)
        CHECK(pt.profile(pt.profile_of(w)).test(q) == d.is_final(run(d, state_id(q), w)));
  }
}

TEST_CASE("atom sets decide membership of residual combinations") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    Alphabet ab("ab");
    Dfa d = compile_canonical_dfa(testing::random_pattern(rng, ab, 8), ab);
    auto pt = build_profile_table(d);
    auto res = testing::residuals(d);
    for (std::size_t p = 0; p < d.size(); ++p)
      for (std::size_t q = 0; q < d.size(); ++q) {
        AtomSet x = residual_atoms(pt, state_id(p)), y = residual_atoms(pt, state_id(q));
        Dfa m = testing::product(res[p], res[q], true), j = testing::product(res[p], res[q], false);
        for (const auto& w : testing::all_words(ab, 6)) {
          CHECK(contains_word(pt, meet(x, y), w) == accepts(m, w));
          CHECK(contains_word(pt, join(x, y), w) == accepts(j, w));
        }
        CHECK(leq(x, y) == equivalent(m, res[p]));
        CHECK((x == y) == equivalent(res[p], res[q]));
      }
    for (std::size_t q = 0; q < d.size(); ++q)
      for (std::size_t a = 0; a < ab.size(); ++a)
        CHECK(quotient_letter(pt, residual_atoms(pt, state_id(q)), a) == residual_atoms(pt, d.next(state_id(q), a)));
  }
}

TEST_CASE("atom sets from different tables do not mix") {
  Alphabet ab("ab");
  auto p1 = build_profile_table(compile_canonical_dfa("a+b+", ab));
  auto p2 = build_profile_table(compile_canonical_dfa("a+b+", ab));
  CHECK_THROWS_AS(meet(top(p1), top(p2)), std::invalid_argument);
}

TEST_CASE("meet automaton of a+b+") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a+b+", ab);
  auto pt = build_profile_table(d);
  auto m = build_meet_automaton(pt, d);
  REQUIRE(m.size() == 6);
  std::set<std::size_t> finals;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.finals[i]) finals.insert(i);
  CHECK(finals == std::set<std::size_t>{state_named(m, pt, "b*"), state_named(m, pt, "A*")});
  std::set<std::pair<std::size_t, std::size_t>> covers(m.order.covers.begin(), m.order.covers.end());
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (auto [lo, hi] : std::vector<std::pair<const char*, const char*>>{
           {"0", "L"}, {"L", "K"}, {"0", "b+"}, {"b+", "K"}, {"K", "A*"}, {"b+", "b*"}, {"b*", "A*"}})
    expected.emplace(state_named(m, pt, lo), state_named(m, pt, hi));
  CHECK(covers == expected);
  CHECK(m.delta[state_named(m, pt, "b+")][1] == state_named(m, pt, "b*"));
  CHECK(m.delta[state_named(m, pt, "b+")][0] == state_named(m, pt, "0"));
  CHECK(m.delta[state_named(m, pt, "A*")][0] == state_named(m, pt, "A*"));
}

TEST_CASE("lattice automaton of a+b+") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a+b+", ab);
  auto pt = build_profile_table(d);
  auto l = build_lattice_automaton(pt, d);
  REQUIRE(l.size() == 7);
  std::set<std::size_t> finals;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.finals[i]) finals.insert(i);
  CHECK(finals == std::set<std::size_t>{state_named(l, pt, "b*"), state_named(l, pt, "A*"), state_named(l, pt, "Kl")});
  std::set<std::pair<std::size_t, std::size_t>> covers(l.order.covers.begin(), l.order.covers.end());
  std::set<std::pair<std::size_t, std::size_t>> expected;
  for (auto [lo, hi] : std::vector<std::pair<const char*, const char*>>{{"0", "L"},
                                                                         {"L", "K"},
                                                                         {"0", "b+"},
                                                                         {"b+", "K"},
                                                                         {"K", "Kl"},
                                                                         {"b+", "b*"},
                                                                         {"b*", "Kl"},
                                                                         {"Kl", "A*"}})
    expected.emplace(state_named(l, pt, lo), state_named(l, pt, hi));
  CHECK(covers == expected);
  CHECK(l.delta[state_named(l, pt, "Kl")][0] == state_named(l, pt, "K"));
  CHECK(l.delta[state_named(l, pt, "Kl")][1] == state_named(l, pt, "b*"));
}

TEST_CASE("meet automaton of a* has three states") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a*", ab);
  auto pt = build_profile_table(d);
  auto brute = testing::close_languages(testing::residuals(d), true);
  testing::insert_language(brute, testing::universal(ab));
  CHECK(brute.size() == 3);
  CHECK(build_meet_automaton(pt, d).size() == 3);
}

TEST_CASE("meet and lattice automata match closures of residual languages") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Alphabet al(i % 2 ? "ab" : "abc");
    Dfa d = compile_canonical_dfa(testing::random_pattern(rng, al, 8), al);
    if (d.size() > 5) continue;
    auto pt = build_profile_table(d);
    auto meets = testing::residuals(d);
    testing::insert_language(meets, testing::universal(al));
    meets = testing::close_languages(meets, true);
    auto lattice = meets;
    testing::insert_language(lattice, testing::empty_language(al));
    lattice = testing::close_languages(lattice, false);
    auto m = build_meet_automaton(pt, d);
    auto l = build_lattice_automaton(pt, d);
    CHECK(m.size() == meets.size());
    CHECK(l.size() == lattice.size());
    CHECK(m.residual_count == d.size());
    for (std::size_t s = 0; s < l.size(); ++s)
      for (const auto& w : testing::all_words(al, 4)) {
        bool in = contains_word(pt, l.states[s], w);
        // Each state's transitions are its quotients.
        if (!w.empty()) CHECK(contains_word(pt, l.states[l.delta[s][al.index_or_throw(w[0])]], w.substr(1)) == in);
      }
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("hasse diagram of a chain") {
  auto h = hasse_by(4, [](std::size_t i, std::size_t j) { return i <= j; });
  CHECK(h.covers == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
}
