#include "rrmon/error.hpp"
#include "rrmon/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace rrmon;
using namespace rrmon::oracle;
using rrtest::w;

TEST_CASE("brute-force correspondences") {
  auto rho = brute_correspondence(w("req resp resp req resp"), CorrespondenceKind::injective);
  REQUIRE(rho);
  CHECK(rho->pairs == std::map<std::size_t, std::size_t>{{0, 1}, {3, 4}});
  CHECK_FALSE(brute_correspondence(w("req req resp"), CorrespondenceKind::injective));
  CHECK_FALSE(brute_correspondence(w("resp"), CorrespondenceKind::bijective));
  CHECK(brute_correspondence(w("resp"), CorrespondenceKind::injective));
  // Lexicographic search: the first request takes the earliest response.
  auto first = brute_correspondence(w("req req resp resp"), CorrespondenceKind::bijective);
  REQUIRE(first);
  CHECK(first->pairs == std::map<std::size_t, std::size_t>{{0, 2}, {1, 3}});
  CHECK_THROWS_AS(brute_correspondence(Word(21, Event::req), CorrespondenceKind::injective), InvalidArgument);
  CHECK_NOTHROW(brute_correspondence(Word(20, Event::resp), CorrespondenceKind::injective));
}

TEST_CASE("word enumeration") {
  std::vector<std::string> seen;
  for (const auto& x : enumerate_words(2))
    seen.push_back(to_string(x));
  CHECK(seen == std::vector<std::string>{"ε", "req", "resp", "req req", "req resp", "resp req", "resp resp"});
  CHECK(enumerate_words(2).count() == 7);

  std::vector<std::string> rr6, rr4;
  for (const auto& x : enumerate_words(4)) {
    if (x.size() != 4)
      continue;
    if (oracle_member(SpecType::rr6, x))
      rr6.push_back(to_string(x));
    if (oracle_member(SpecType::rr4, x))
      rr4.push_back(to_string(x));
  }
  CHECK(rr6 == std::vector<std::string>{"req resp req resp"});
  CHECK(rr4.size() == 2);

  CHECK_THROWS_AS(enumerate_words(25), InvalidArgument);
  CHECK_THROWS_AS(enumerate_words(std::vector<int>{}, 2), InvalidArgument);
  CHECK(enumerate_words(0).count() == 1);
}

TEST_CASE("property: enumeration is complete and ordered") {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 0; n <= 6; ++n) {
      std::vector<int> alphabet(k);
      for (std::size_t i = 0; i < k; ++i)
        alphabet[i] = static_cast<int>(i);
      auto range = enumerate_words(alphabet, n);
      std::size_t count = 0;
      std::vector<int> prev;
      bool first = true;
      for (const auto& x : range) {
        if (!first) {
          bool ordered = prev.size() < x.size() || (prev.size() == x.size() && prev < x);
          REQUIRE(ordered);
        }
        first = false;
        prev = x;
        ++count;
      }
      std::size_t expected = 0, layer = 1;
      for (std::size_t len = 0; len <= n; ++len, layer *= k)
        expected += layer;
      REQUIRE(count == expected);
      REQUIRE(range.count() == expected);
    }
}

TEST_CASE("bounded extension search") {
  CHECK(extendable(SpecType::rr4, w("req req"), 2));
  CHECK_FALSE(extendable(SpecType::rr4, w("req req"), 1));
  for (std::size_t d = 0; d <= 8; ++d)
    CHECK_FALSE(extendable(SpecType::rr2, w("resp"), d));
  for (const auto& x : rrtest::words_up_to(8))
    REQUIRE(extendable(SpecType::rr1, x, 1));
}

TEST_CASE("property: extension search is monotone in depth") {
  for (auto s : all_spec_types)
    for (const auto& x : rrtest::words_up_to(6)) {
      bool before = false;
      for (std::size_t d = 0; d <= 6; ++d) {
        bool now = extendable(s, x, d);
        REQUIRE((!before || now));
        before = now;
      }
    }
}

TEST_CASE("property: exhaustive and stack correspondences agree on existence") {
  for (const auto& x : rrtest::words_up_to(12))
    for (auto k : {CorrespondenceKind::injective, CorrespondenceKind::bijective}) {
      auto brute = brute_correspondence(x, k);
      REQUIRE(brute.has_value() == build_correspondence(x, k).has_value());
      if (brute)
        REQUIRE(verify_correspondence(x, *brute));
    }
}

TEST_CASE("position-set regex semantics on long words") {
  auto rr6 = grammar::regex_for(SpecType::rr6);
  Word longw;
  for (int k = 0; k < 50; ++k) {
    longw.push_back(Event::req);
    longw.push_back(Event::resp);
  }
  CHECK(regex_holds(rr6, longw));
  longw.push_back(Event::req);
  CHECK_FALSE(regex_holds(rr6, longw));
  CHECK(regex_holds(grammar::regex_for(SpecType::rr1), longw) == false);
}
