#include <catch_amalgamated.hpp>

#include <random>

#include "support/test_support.hpp"
#include "synlat/regex.hpp"

using namespace synlat;

TEST_CASE("alphabet is sorted and rejects reserved characters") {
  Alphabet al("ba");
  CHECK(al.letters() == "ab");
  CHECK(al.index('b') == 1u);
  CHECK_FALSE(al.index('c'));
  CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a|"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a%"), std::invalid_argument);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less("", "a"));
  CHECK(shortlex_less("b", "aa"));
  CHECK(shortlex_less("ab", "ba"));
  CHECK_FALSE(shortlex_less("a", "a"));
}

TEST_CASE("regex parse trees") {
  Alphabet ab("ab");
  CHECK(to_string(*parse_regex("a+b+", ab).root) == "Concat(Plus(a),Plus(b))");
  CHECK(to_string(*parse_regex("a|b*", ab).root) == "Union(a,Star(b))");
  CHECK(to_string(*parse_regex("%e", ab).root) == "EmptyWord");
  CHECK(to_string(*parse_regex("%0", ab).root) == "EmptySet");
  CHECK(node_count(*parse_regex("a+b+", ab).root) == 5);
}

TEST_CASE("regex parse errors carry positions") {
  Alphabet ab("ab");
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_regex(text, ab);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("a(b") == 3);
  CHECK(position_of("ac") == 1);
  CHECK(position_of("*a") == 0);
  CHECK(position_of("a)") == 1);
  CHECK(position_of("a||b") == 2);
  CHECK(position_of("%x") == 0);
}

TEST_CASE("to_pattern is stable under reparsing") {
  Alphabet abc("abc");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = testing::random_pattern(rng, abc, 10);
    auto ast = parse_regex(p, abc);
    // Reparsing flattens nested unions and concatenations once.
    auto again = parse_regex(to_pattern(*ast.root), abc);
    auto third = parse_regex(to_pattern(*again.root), abc);
    CHECK(to_string(*third.root) == to_string(*again.root));
    for (const auto& w : testing::all_words(abc, 4)) CHECK(testing::regex_matches(again, w) == testing::regex_matches(ast, w));
  }
}

TEST_CASE("canonical automaton sizes") {
  Alphabet ab("ab");
  CHECK(compile_canonical_dfa("a+b+", ab).size() == 4);
  CHECK(compile_canonical_dfa("a*", ab).size() == 2);
  CHECK(compile_canonical_dfa("%0", ab).size() == 1);
  CHECK(compile_canonical_dfa("(a|b)*", ab).size() == 1);
  CHECK(compile_canonical_dfa("%e", ab).size() == 2);
  CHECK(compile_canonical_dfa("(aa)*", Alphabet("a")).size() == 2);
}

TEST_CASE("state budget") {
  Alphabet ab("ab");
  CHECK_THROWS_AS(compile_canonical_dfa(parse_regex("(a|b)*a(a|b)(a|b)(a|b)", ab), 4), BudgetExceeded);
}

TEST_CASE("canonical automaton accepts exactly the regex language") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    Alphabet al(i % 3 == 0 ? "a" : i % 3 == 1 ? "ab" : "abc");
    auto ast = parse_regex(testing::random_pattern(rng, al, 9), al);
    auto dfa = compile_canonical_dfa(ast);
    for (const auto& w : testing::all_words(al, al.size() == 3 ? 5 : 7))
      REQUIRE(accepts(dfa, w) == testing::regex_matches(ast, w));
  }
}
