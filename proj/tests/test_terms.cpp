#include <catch_amalgamated.hpp>

#include <random>

#include "support/test_support.hpp"
#include "synlat/canonical.hpp"
#include "synlat/regex.hpp"
#include "synlat/terms.hpp"

using namespace synlat;

namespace {

struct Language {
  Dfa dfa;
  ProfileTable pt;
  std::vector<AtomSet> states;  // lattice automaton states
};

Language random_language(std::mt19937_64& rng, const Alphabet& al) {
  while (true) {
    Dfa d = compile_canonical_dfa(testing::random_pattern(rng, al, 8), al);
    if (d.size() > 6) continue;
    auto pt = build_profile_table(d);
    auto l = build_lattice_automaton(pt, d);
    if (l.size() > 200) continue;
    return {d, pt, l.states};
  }
}

}  // namespace

TEST_CASE("term syntax round trip") {
  Alphabet ab("ab");
  for (const char* text : {"a", "%e", "T", "_", "ab", "a^b", "avb", "(a^ab)v(b^ab)", "(avb).(a^b)", "a(bvT)^_"}) {
    Term t = parse_term(text, ab);
    CHECK(to_string(parse_term(to_string(t), ab)) == to_string(t));
  }
  CHECK(parse_term("a^bvab", ab).kind() == TermKind::Join);
  CHECK(parse_term("a^ab", ab).kind() == TermKind::Meet);
  CHECK(parse_term("a.b", ab).kind() == TermKind::Dot);
  CHECK_THROWS_AS(parse_term("", ab), ParseError);
  CHECK_THROWS_AS(parse_term("a^", ab), ParseError);
  CHECK_THROWS_AS(parse_term("(a", ab), ParseError);
  CHECK_THROWS_AS(parse_term("c", ab), ParseError);
}

TEST_CASE("signatures and normal forms") {
  Alphabet ab("ab");
  CHECK(parse_term("ab", ab).signature() == Signature::Monoid);
  CHECK(parse_term("a^b", ab).signature() == Signature::Semiring);
  CHECK(parse_term("avb", ab).signature() == Signature::Lattice);
  CHECK(normalize_monoid(parse_term("a.%e.b", ab)) == "ab");
  CHECK(to_string(normalize_semiring(parse_term("(a^b)(a^%e)", ab))) == "a^b^aa^ba");
  CHECK(normalize_semiring(parse_term("T.a", ab)).is_top());
  CHECK(to_string(normalize_lattice(parse_term("a^(avb)", ab))) == "a");
  CHECK(to_string(normalize_lattice(parse_term("(a^b).(a v b)", ab))) == "(aa^ba)v(ab^bb)");
  CHECK(normalize_lattice(parse_term("_ ^ a", ab)).is_bottom());
  CHECK(normalize_lattice(parse_term("T v a", ab)).is_top());
  CHECK_THROWS_AS(normalize_monoid(parse_term("a^b", ab)), std::invalid_argument);
  CHECK_THROWS_AS(normalize_semiring(parse_term("avb", ab)), std::invalid_argument);
}

TEST_CASE("lattice forms are antichains") {
  auto f = LatticeForm::of({MeetForm::of({"a", "b"}), MeetForm::of({"a"}), MeetForm::of({"a"}), MeetForm::of({"c", "a", "b"})});
  REQUIRE(f.terms.size() == 1);
  CHECK(f.terms[0].words == std::vector<Word>{"a"});
  CHECK(LatticeForm::of({MeetForm::top(), MeetForm::of({"a"})}).is_top());
}

TEST_CASE("product of a meet and a join expands the right factor") {
  Alphabet abcd("abcd");
  auto u = LatticeForm::meet_of(MeetForm::of({"a", "b"}));
  auto v = LatticeForm::of({MeetForm::of({"c"}), MeetForm::of({"d"})});
  auto p = multiply_lattice_forms(u, v);
  CHECK(to_string(p) == "(ac^bc)v(ad^bd)");
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    auto lang = random_language(rng, abcd);
    Term t = Term::dot(embed(u), embed(v));
    for (const auto& x : lang.states) CHECK(eval_term(lang.pt, x, t) == eval_form(lang.pt, x, p));
  }
}

TEST_CASE("right distributivity fails for general right factors") {
  Alphabet ab("ab");
  std::vector<Word> words{"aa", "bb"};
  auto L = finite_language(ab, words);
  Term lhs = parse_term("(a^b).(avb)", ab);
  Term rhs = parse_term("a.(avb) ^ b.(avb)", ab);
  AtomSet left = eval_term(L.table, L.language, lhs);
  AtomSet right = eval_term(L.table, L.language, rhs);
  CHECK(left == bottom(L.table));
  CHECK(contains_lambda(L.table, right));
  CHECK(left != right);
}

TEST_CASE("normalization preserves the action") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    Alphabet al(i % 2 ? "ab" : "abc");
    auto lang = random_language(rng, al);
    for (int k = 0; k < 30; ++k) {
      for (auto sig : {Signature::Monoid, Signature::Semiring, Signature::Lattice}) {
        Term t = testing::random_term(rng, al, 4, sig);
        for (const auto& x : lang.states) {
          AtomSet want = eval_term(lang.pt, x, t);
          if (sig == Signature::Monoid) CHECK(quotient_word(lang.pt, x, normalize_monoid(t)) == want);
          if (sig != Signature::Lattice) CHECK(eval_form(lang.pt, x, normalize_semiring(t)) == want);
          CHECK(eval_form(lang.pt, x, normalize_lattice(t)) == want);
          CHECK(eval_term(lang.pt, x, embed(normalize_lattice(t))) == want);
        }
      }
    }
  }
}

TEST_CASE("normal forms are canonical under reparsing and embedding") {
  std::mt19937_64 rng(41);
  Alphabet ab("ab");
  for (int i = 0; i < 300; ++i) {
    auto f = testing::random_lattice_form(rng, ab, 3, 3, 3);
    CHECK(normalize_lattice(embed(f)) == f);
    CHECK(normalize_lattice(parse_term(to_string(f), ab)) == f);
    auto m = testing::random_meet_form(rng, ab, 3, 3);
    CHECK(normalize_semiring(embed(m)) == m);
  }
}

TEST_CASE("separating languages distinguish distinct normal forms") {
  std::mt19937_64 rng(43);
  Alphabet ab("ab");
  int separated = 0;
  for (int i = 0; i < 500; ++i) {
    auto f = testing::random_lattice_form(rng, ab, 3, 3, 2);
    auto g = testing::random_lattice_form(rng, ab, 3, 3, 2);
    if (f == g) {
      CHECK_THROWS_AS(separating_language(f, g), std::invalid_argument);
      continue;
    }
    auto words = separating_language(f, g);
    auto L = finite_language(ab, words);
    bool in_f = contains_lambda(L.table, eval_form(L.table, L.language, f));
    bool in_g = contains_lambda(L.table, eval_form(L.table, L.language, g));
    CHECK(in_f != in_g);
    ++separated;
  }
  CHECK(separated > 400);
}

TEST_CASE("eval of forms on a+b+") {
  Alphabet ab("ab");
  Dfa d = compile_canonical_dfa("a+b+", ab);
  auto pt = build_profile_table(d);
  AtomSet L = residual_atoms(pt, d.initial);
  AtomSet K = residual_atoms(pt, d.next(d.initial, 0));
  CHECK(eval_term(pt, L, parse_term("a", ab)) == K);
  CHECK(eval_term(pt, L, parse_term("T", ab)) == top(pt));
  CHECK(eval_term(pt, L, parse_term("_", ab)) == bottom(pt));
  CHECK(eval_term(pt, L, parse_term("%e", ab)) == L);
}
