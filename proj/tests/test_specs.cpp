#include "rrmon/error.hpp"
#include "rrmon/oracle.hpp"
#include "rrmon/specs.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrmon;
using rrtest::w;

namespace {

using enum SpecType;

const char* rr3_words[] = {"req resp req resp resp", "req resp resp req resp", "req req req resp resp resp resp"};
const char* rr4_words[] = {"req resp req req resp resp", "req req req resp resp req resp resp"};
const char* neither_words[] = {"req req resp", "req resp req req resp", "req req req resp resp"};

Correspondence links(std::map<std::size_t, std::size_t> pairs, CorrespondenceKind k) { return {std::move(pairs), k}; }

} // namespace

TEST_CASE("formalism names") {
  for (auto f : {Formalism::grammar, Formalism::logic, Formalism::automaton, Formalism::counting, Formalism::oracle})
    CHECK(parse_formalism(to_string(f)) == f);
  CHECK_FALSE(parse_formalism("regex").has_value());
  CHECK(formalisms_for(rr3).size() == 5);
  CHECK(formalisms_for(rr1).size() == 4);
  CHECK_FALSE(supports(rr6, Formalism::counting));
}

TEST_CASE("counting characterisations") {
  CHECK_FALSE(counting_member(rr3, w("req req resp")));
  CHECK(counting_member(rr4, w("req resp req req resp resp")));
  CHECK(counting_member(rr4, {}));
  CHECK(counting_member(rr3, w("resp resp")));
  CHECK_FALSE(counting_member(rr4, w("resp req")));
  CHECK_THROWS_AS(counting_member(rr1, {}), UnsupportedFormalism);
  CHECK_THROWS_AS(member(rr2, {}, Formalism::counting), UnsupportedFormalism);
}

TEST_CASE("membership examples hold in every formalism") {
  for (auto f : formalisms_for(rr1)) {
    CHECK(member(rr1, w("req resp resp"), f));
    CHECK_FALSE(member(rr2, w("req resp resp"), f));
    CHECK(member(rr6, w("req resp req resp"), f));
  }
}

TEST_CASE("fixture words") {
  for (const char* text : rr3_words)
    for (auto f : formalisms_for(rr3))
      CHECK_MESSAGE(member(rr3, w(text), f), text);
  for (const char* text : rr4_words)
    for (auto f : formalisms_for(rr4)) {
      CHECK_MESSAGE(member(rr4, w(text), f), text);
      CHECK_MESSAGE(member(rr3, w(text), f), text);
    }
  for (const char* text : neither_words)
    for (auto f : formalisms_for(rr3)) {
      CHECK_MESSAGE(!member(rr3, w(text), f), text);
      CHECK_MESSAGE(!member(rr4, w(text), f), text);
    }
}

TEST_CASE("inline examples") {
  const std::set<SpecType> a_yes{rr1, rr2};
  const std::set<SpecType> b_yes{rr1, rr3, rr5};
  for (auto s : all_spec_types)
    for (auto f : formalisms_for(s)) {
      CHECK(member(s, w("req req resp"), f) == a_yes.count(s) > 0);
      CHECK(member(s, w("req resp resp"), f) == b_yes.count(s) > 0);
    }
}

TEST_CASE("stack correspondences") {
  auto rho = build_correspondence(w("req resp req req resp resp"), CorrespondenceKind::bijective);
  REQUIRE(rho);
  CHECK(rho->pairs == std::map<std::size_t, std::size_t>{{0, 1}, {3, 4}, {2, 5}});
  CHECK(format_links(*rho) == "0->1 3->4 2->5");
  CHECK_FALSE(build_correspondence(w("req req resp"), CorrespondenceKind::injective));
  auto empty = build_correspondence({}, CorrespondenceKind::bijective);
  REQUIRE(empty);
  CHECK(empty->pairs.empty());
  CHECK(build_correspondence(w("resp req resp"), CorrespondenceKind::injective));
  CHECK_FALSE(build_correspondence(w("resp req resp"), CorrespondenceKind::bijective));
}

TEST_CASE("correspondence checking") {
  using K = CorrespondenceKind;
  CHECK(verify_correspondence(w("req resp"), links({{0, 1}}, K::injective)));
  CHECK_FALSE(verify_correspondence(w("req resp"), links({{0, 0}}, K::injective)));
  CHECK(verify_correspondence(w("req req req resp resp req resp resp"),
                              links({{2, 3}, {1, 4}, {5, 6}, {0, 7}}, K::bijective)));
  CHECK(verify_correspondence(w("req req req resp resp req resp resp"),
                              links({{0, 3}, {1, 4}, {2, 7}, {5, 6}}, K::bijective)));
  CHECK_FALSE(verify_correspondence(w("req req resp resp"), links({{0, 2}, {1, 2}}, K::injective)));
  CHECK_FALSE(verify_correspondence(w("req req resp resp"), links({{0, 2}}, K::injective)));
  CHECK_FALSE(verify_correspondence(w("req resp resp"), links({{0, 1}}, K::bijective)));
  CHECK(verify_correspondence(w("req resp resp"), links({{0, 1}}, K::injective)));
  CHECK_FALSE(verify_correspondence(w("resp req"), links({{1, 0}}, K::injective)));
  CHECK_FALSE(verify_correspondence(w("req resp"), links({{0, 5}}, K::injective)));
}

TEST_CASE("property: stack witnesses exist exactly under the counting conditions") {
  for (const auto& x : rrtest::words_up_to(12)) {
    auto inj = build_correspondence(x, CorrespondenceKind::injective);
    auto bij = build_correspondence(x, CorrespondenceKind::bijective);
    REQUIRE(inj.has_value() == counting_member(rr3, x));
    REQUIRE(bij.has_value() == counting_member(rr4, x));
    if (inj)
      REQUIRE(verify_correspondence(x, *inj));
    if (bij)
      REQUIRE(verify_correspondence(x, *bij));
  }
}

TEST_CASE("verdicts") {
  CHECK(verdict(rr5, w("req req")) == Verdict{false, true});
  CHECK(verdict(rr3, w("req req resp")) == Verdict{false, false});
  CHECK(verdict(rr4, w("resp")) == Verdict{false, true});
  CHECK(verdict(rr6, {}) == Verdict{true, false});
}

TEST_CASE("property: the online monitor tracks batch verdicts") {
  for (auto s : all_spec_types)
    for (const auto& x : rrtest::words_of_length(9)) {
      Monitor m(s);
      CHECK(m.current() == verdict(s, {}));
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto v = m.feed(x[i]);
        REQUIRE(v == verdict(s, Word(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i) + 1)));
        REQUIRE_FALSE((v.in_language && v.doomed));
      }
      CHECK(m.consumed() == x.size());
    }
}

TEST_CASE("diagnostics") {
  CHECK(diagnose(rr3, w("req req resp")) == "suffix at 0 has #req=2 > #resp=1");
  CHECK(diagnose(rr3, w("resp req resp req")) == "suffix at 1 has #req=2 > #resp=1");
  CHECK(diagnose(rr4, w("req resp resp req")) == "prefix ending at 2 has #req=1 < #resp=2");
  CHECK(diagnose(rr4, w("req req resp")) == "whole trace has #req=2 != #resp=1");
  CHECK(diagnose(rr5, w("req req")) == "no transition on req at index 1 (state q1)");
  CHECK(diagnose(rr6, w("req")) == "trace ends with a pending request (state q1)");
  CHECK_FALSE(diagnose(rr1, w("req resp")).has_value());
  for (auto s : all_spec_types)
    for (const auto& x : rrtest::words_up_to(8))
      REQUIRE(diagnose(s, x).has_value() != member(s, x, Formalism::automaton));
}

TEST_CASE("decision tree") {
  CHECK(classify({true, true, true}) == rr1);
  CHECK(classify({true, true, false}) == rr2);
  CHECK(classify({true, false, true}) == rr3);
  CHECK(classify({true, false, false}) == rr4);
  CHECK(classify({false, std::nullopt, true}) == rr5);
  CHECK(classify({false, std::nullopt, false}) == rr6);
  CHECK_THROWS_AS(classify({false, true, true}), InvalidArgument);
  CHECK_THROWS_AS(classify({true, std::nullopt, true}), InvalidArgument);
}

TEST_CASE("descriptions name the worked examples") {
  CHECK(describe(rr1).example == "Waiter");
  CHECK(describe(rr2).example == "Send-Ack in Communication");
  CHECK(describe(rr3).example == "Broker in MQTT QoS 1");
  CHECK(describe(rr4).example == "Vending Machine");
  CHECK(describe(rr5).example == "Reception with Numbered Tickets");
  CHECK(describe(rr6).example == "Toggle Light Switch");
}

TEST_CASE("property: the implication table matches enumeration") {
  auto words = rrtest::words_up_to(12);
  for (auto s : all_spec_types) {
    std::set<SpecType> implied;
    for (auto t : all_spec_types) {
      bool all = true;
      for (const auto& x : words)
        if (member(s, x, Formalism::automaton) &&
            !member(t, x, Formalism::automaton)) {
          all = false;
          break;
        }
      if (all)
        implied.insert(t);
    }
    CHECK_MESSAGE(implications(s) == implied, to_string(s));
    CHECK(implications(s).count(s));
  }
  CHECK(implications(rr2).count(rr1));
  CHECK(implications(rr4).count(rr3));
  CHECK(implications(rr6).count(rr4));
}
