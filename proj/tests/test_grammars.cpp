#include "rrmon/automata.hpp"
#include "rrmon/error.hpp"
#include "rrmon/grammars.hpp"
#include "rrmon/ltl.hpp"
#include "rrmon/oracle.hpp"
#include "rrmon/specs.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace rrmon;
using namespace rrmon::grammar;
using rrtest::w;

namespace {

Regex random_regex(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 8);
  auto sub = [&] { return random_regex(rng, depth - 1); };
  switch (pick(rng)) {
  case 0:
    return symbol(Event::req);
  case 1:
    return symbol(Event::resp);
  case 2:
    return epsilon();
  case 3:
    return depth <= 0 ? symbol(Event::req) : empty_set();
  case 4:
    return alternation(sub(), sub());
  case 5:
  case 6:
    return concatenation(sub(), sub());
  case 7:
    return star(sub());
  default:
    return plus(sub());
  }
}

/// The language req^n resp^n, decided by counting.
bool balanced_block(const Word& x) {
  std::size_t n = 0;
  while (n < x.size() && x[n] == Event::req)
    ++n;
  if (2 * n != x.size())
    return false;
  for (std::size_t k = n; k < x.size(); ++k)
    if (x[k] != Event::resp)
      return false;
  return true;
}

} // namespace

TEST_CASE("regular expressions per type") {
  CHECK(to_string(regex_for(SpecType::rr1)) == "resp*(req+ resp+)*");
  CHECK(to_string(regex_for(SpecType::rr2)) == "(req+ resp)*");
  CHECK(to_string(regex_for(SpecType::rr5)) == "resp*(req resp+)*");
  CHECK(to_string(regex_for(SpecType::rr6)) == "(req resp)*");
  CHECK(regex_for(SpecType::rr6) == star(concatenation(symbol(Event::req), symbol(Event::resp))));
  CHECK(regex_for(SpecType::rr2) == star(concatenation(plus(symbol(Event::req)), symbol(Event::resp))));
  CHECK_THROWS_AS(regex_for(SpecType::rr3), NotRegular);
  CHECK_THROWS_AS(regex_for(SpecType::rr4), NotRegular);
}

TEST_CASE("regex matching") {
  CHECK(regex_match(regex_for(SpecType::rr1), w("req req resp")));
  CHECK(regex_match(regex_for(SpecType::rr6), {}));
  CHECK_FALSE(regex_match(regex_for(SpecType::rr5), w("req req resp resp")));
  CHECK_FALSE(regex_match(empty_set(), {}));
  CHECK(regex_match(epsilon(), {}));
  CHECK_FALSE(regex_match(epsilon(), w("req")));
  CHECK(regex_match(star(star(epsilon())), {}));
}

TEST_CASE("property: NFA matching agrees with the position-set oracle") {
  std::mt19937 rng(5);
  const auto words = rrtest::words_up_to(8);
  for (int k = 0; k < 300; ++k) {
    auto r = random_regex(rng, 4);
    RegexMatcher m(r);
    for (const auto& x : words)
      REQUIRE_MESSAGE(m.matches(x) == oracle::regex_holds(r, x), to_string(r) << " on " << to_string(x));
  }
}

TEST_CASE("grammars per type") {
  auto g3 = cfg_for(SpecType::rr3);
  CHECK(g3.start() == "S");
  CHECK(g3.nonterminals() == std::set<std::string>{"S"});
  CHECK(g3.terminals() == std::set<std::string>{"req", "resp"});
  CHECK(g3.productions() == std::vector<Production>{
                                {"S", {"S", "req", "S", "resp"}}, {"S", {"S", "resp"}}, {"S", {}}});
  CHECK(cfg_for(SpecType::rr4).productions() ==
        std::vector<Production>{{"S", {"S", "req", "S", "resp"}}, {"S", {}}});
  CHECK_THROWS_AS(cfg_for(SpecType::rr1), InvalidArgument);
}

TEST_CASE("grammar validation") {
  CHECK_THROWS_AS(Cfg({"S"}, {"a"}, {{"S", {"b"}}}, "S"), InvalidArgument);
  CHECK_THROWS_AS(Cfg({"S"}, {"a"}, {{"T", {"a"}}}, "S"), InvalidArgument);
  CHECK_THROWS_AS(Cfg({"S", "a"}, {"a"}, {}, "S"), InvalidArgument);
  CHECK_THROWS_AS(Cfg({"S"}, {"a"}, {}, "T"), InvalidArgument);
}

TEST_CASE("CYK membership") {
  CHECK(cyk_member(cfg_for(SpecType::rr3), w("resp")));
  CHECK_FALSE(cyk_member(cfg_for(SpecType::rr4), w("resp req")));
  CHECK(cyk_member(cfg_for(SpecType::rr4), Word{}));
  CHECK_FALSE(cyk_member(cfg_for(SpecType::rr3), w("req")));
  CHECK(cyk_member(cfg_for(SpecType::rr4), std::vector<std::string>{"req", "req", "resp", "resp"}));
  CHECK_FALSE(cyk_member(cfg_for(SpecType::rr4), std::vector<std::string>{"req", "other"}));
}

TEST_CASE("property: CYK on a grammar with unit rules and no epsilon") {
  // S -> A B | req T ;  T -> S resp ; A -> req ; B -> resp ; plus a unit chain.
  Cfg g({"S", "T", "A", "B", "U"}, {"req", "resp"},
        {{"S", {"U"}}, {"U", {"A", "B"}}, {"U", {"req", "T"}}, {"T", {"S", "resp"}}, {"A", {"req"}},
         {"B", {"resp"}}},
        "S");
  CnfGrammar cnf(g);
  CHECK_FALSE(cnf.start_nullable());
  for (const auto& x : rrtest::words_up_to(10))
    REQUIRE(cnf.accepts(x) == (!x.empty() && balanced_block(x)));
}

TEST_CASE("property: counting characterisations and grammar containment") {
  for (const auto& x : rrtest::words_up_to(12)) {
    bool in3 = cyk_member(cfg_for(SpecType::rr3), x);
    bool in4 = cyk_member(cfg_for(SpecType::rr4), x);
    REQUIRE(in3 == counting_member(SpecType::rr3, x));
    REQUIRE(in4 == counting_member(SpecType::rr4, x));
    if (in4)
      REQUIRE(in3);
  }
}

TEST_CASE("property: regexes agree with automata and formulas") {
  for (auto s : {SpecType::rr1, SpecType::rr2, SpecType::rr5, SpecType::rr6}) {
    RegexMatcher m(regex_for(s));
    auto dfa = automata::dfa_for(s);
    auto f = ltl::builtin_formula(s);
    for (const auto& x : rrtest::words_up_to(10)) {
      bool in = m.matches(x);
      REQUIRE(in == automata::run(dfa, x).accepted);
      REQUIRE(in == ltl::eval_trace(f, Trace::from_word(x)));
    }
  }
}
