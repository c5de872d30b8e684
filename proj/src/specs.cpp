#include "rrmon/specs.hpp"

#include "rrmon/caret.hpp"
#include "rrmon/error.hpp"
#include "rrmon/grammars.hpp"
#include "rrmon/ltl.hpp"
#include "rrmon/oracle.hpp"

#include <algorithm>
#include <array>

namespace rrmon {

std::string_view to_string(Formalism f) noexcept {
  switch (f) {
  case Formalism::grammar:
    return "grammar";
  case Formalism::logic:
    return "logic";
  case Formalism::automaton:
    return "automaton";
  case Formalism::counting:
    return "counting";
  case Formalism::oracle:
    return "oracle";
  }
  return "?";
}

std::optional<Formalism> parse_formalism(std::string_view name) noexcept {
  for (auto f : {Formalism::grammar, Formalism::logic, Formalism::automaton, Formalism::counting, Formalism::oracle})
    if (to_string(f) == name)
      return f;
  return std::nullopt;
}

bool supports(SpecType s, Formalism f) noexcept { return f != Formalism::counting || !is_regular(s); }

std::vector<Formalism> formalisms_for(SpecType s) {
  std::vector<Formalism> out;
  for (auto f : {Formalism::grammar, Formalism::logic, Formalism::automaton, Formalism::counting, Formalism::oracle})
    if (supports(s, f))
      out.push_back(f);
  return out;
}

bool counting_member(SpecType s, const Word& w) {
  if (s == SpecType::rr3) {
    // Scan suffixes from the right: #req - #resp must never become positive.
    long balance = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      balance += *it == Event::req ? 1 : -1;
      if (balance > 0)
        return false;
    }
    return true;
  }
  if (s == SpecType::rr4) {
    long balance = 0;
    for (auto e : w) {
      balance += e == Event::req ? 1 : -1;
      if (balance < 0)
        return false;
    }
    return balance == 0;
  }
  throw UnsupportedFormalism("counting characterisation exists only for RR3 and RR4, not " +
                             std::string(to_string(s)));
}

namespace {

std::size_t idx(SpecType s) { return static_cast<std::size_t>(s); }

const grammar::RegexMatcher& regex_matcher(SpecType s) {
  static const auto matchers = [] {
    std::vector<std::optional<grammar::RegexMatcher>> m(6);
    for (auto t : all_spec_types)
      if (is_regular(t))
        m[idx(t)].emplace(grammar::regex_for(t));
    return m;
  }();
  return *matchers[idx(s)];
}

const grammar::CnfGrammar& cnf_grammar(SpecType s) {
  static const grammar::CnfGrammar rr3(grammar::cfg_for(SpecType::rr3));
  static const grammar::CnfGrammar rr4(grammar::cfg_for(SpecType::rr4));
  return s == SpecType::rr3 ? rr3 : rr4;
}

const automata::Machine& machine(SpecType s) {
  static const auto machines = [] {
    std::vector<automata::Machine> m;
    for (auto t : all_spec_types)
      m.push_back(automata::machine_for(t));
    return m;
  }();
  return machines[idx(s)];
}

bool logic_member(SpecType s, const Word& w) {
  if (is_regular(s)) {
    static const auto formulas = [] {
      std::vector<std::optional<ltl::Formula>> f(6);
      for (auto t : all_spec_types)
        if (is_regular(t))
          f[idx(t)].emplace(ltl::builtin_formula(t));
      return f;
    }();
    return ltl::eval_trace(*formulas[idx(s)], Trace::from_word(w));
  }
  static const caret::CaretFormula rr3 = caret::builtin_caret(SpecType::rr3);
  static const caret::CaretFormula rr4 = caret::builtin_caret(SpecType::rr4);
  return caret::eval_caret_trace(s == SpecType::rr3 ? rr3 : rr4, tag_extended(Trace::from_word(w)),
                                 caret::QMode::variant);
}

} // namespace

bool member(SpecType s, const Word& w, Formalism f) {
  switch (f) {
  case Formalism::grammar:
    return is_regular(s) ? regex_matcher(s).matches(w) : cnf_grammar(s).accepts(w);
  case Formalism::logic:
    return logic_member(s, w);
  case Formalism::automaton:
    return automata::run(machine(s), w).accepted;
  case Formalism::counting:
    return counting_member(s, w);
  case Formalism::oracle:
    return oracle::oracle_member(s, w);
  }
  throw UnsupportedFormalism("unknown formalism");
}

std::optional<Correspondence> build_correspondence(const Word& w, CorrespondenceKind kind) {
  Correspondence rho{{}, kind};
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Event::req) {
      pending.push_back(i);
      continue;
    }
    if (pending.empty()) {
      if (kind == CorrespondenceKind::bijective)
        return std::nullopt;
      continue;
    }
    rho.pairs.emplace(pending.back(), i);
    pending.pop_back();
  }
  if (!pending.empty())
    return std::nullopt;
  return rho;
}

bool verify_correspondence(const Word& w, const Correspondence& rho) {
  std::set<std::size_t> used;
  for (const auto& [i, j] : rho.pairs) {
    if (i >= w.size() || j >= w.size())
      return false;
    if (w[i] != Event::req || w[j] != Event::resp || !(i < j))
      return false;
    if (!used.insert(j).second)
      return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Event::req && !rho.pairs.count(i))
      return false;
    if (rho.kind == CorrespondenceKind::bijective && w[i] == Event::resp && !used.count(i))
      return false;
  }
  return true;
}

std::string format_links(const Correspondence& rho) {
  std::vector<std::pair<std::size_t, std::size_t>> links(rho.pairs.begin(), rho.pairs.end());
  std::sort(links.begin(), links.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  std::string out;
  for (const auto& [i, j] : links) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(i) + "->" + std::to_string(j);
  }
  return out;
}

Verdict verdict(SpecType s, const Word& prefix) {
  auto r = automata::run(machine(s), prefix);
  return {r.accepted, r.stuck_at.has_value()};
}

Monitor::Monitor(SpecType s) : machine_(machine(s)), config_(automata::initial_config(machine_)) {}

Verdict Monitor::feed(Event e) {
  ++consumed_;
  if (!config_.stuck)
    config_ = automata::step(machine_, config_, e);
  return current();
}

Verdict Monitor::current() const { return {automata::accepts(machine_, config_), config_.stuck}; }

std::optional<std::string> diagnose(SpecType s, const Word& w) {
  auto count = [&](std::size_t from, std::size_t to, Event e) {
    return std::count(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to), e);
  };
  if (s == SpecType::rr3) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto reqs = count(k, w.size(), Event::req);
      auto resps = count(k, w.size(), Event::resp);
      if (reqs > resps)
        return "suffix at " + std::to_string(k) + " has #req=" + std::to_string(reqs) + " > #resp=" +
               std::to_string(resps);
    }
    return std::nullopt;
  }
  if (s == SpecType::rr4) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      auto reqs = count(0, k + 1, Event::req);
      auto resps = count(0, k + 1, Event::resp);
      if (resps > reqs)
        return "prefix ending at " + std::to_string(k) + " has #req=" + std::to_string(reqs) + " < #resp=" +
               std::to_string(resps);
    }
    auto reqs = count(0, w.size(), Event::req);
    auto resps = count(0, w.size(), Event::resp);
    if (reqs != resps)
      return "whole trace has #req=" + std::to_string(reqs) + " != #resp=" + std::to_string(resps);
    return std::nullopt;
  }
  const auto& dfa = std::get<automata::Dfa>(machine(s));
  auto r = automata::run(dfa, w);
  if (r.accepted)
    return std::nullopt;
  if (r.stuck_at)
    return "no transition on " + std::string(to_string(w[*r.stuck_at])) + " at index " + std::to_string(*r.stuck_at) +
           " (state " + dfa.states()[r.final_config.state] + ")";
  return "trace ends with a pending request (state " + dfa.states()[r.final_config.state] + ")";
}

SpecType classify(const Answers& a) {
  if (a.c1 != a.c2.has_value())
    throw InvalidArgument(a.c1 ? "C2 must be answered when C1 is yes" : "C2 is only asked when C1 is yes");
  if (!a.c1)
    return a.c3 ? SpecType::rr5 : SpecType::rr6;
  if (*a.c2)
    return a.c3 ? SpecType::rr1 : SpecType::rr2;
  return a.c3 ? SpecType::rr3 : SpecType::rr4;
}

std::set<SpecType> implications(SpecType s) {
  using enum SpecType;
  switch (s) {
  case rr1:
    return {rr1};
  case rr2:
    return {rr1, rr2};
  case rr3:
    return {rr1, rr3};
  case rr4:
    return {rr1, rr3, rr4};
  case rr5:
    return {rr1, rr3, rr5};
  case rr6:
    return {rr1, rr2, rr3, rr4, rr5, rr6};
  }
  return {s};
}

const SpecInfo& describe(SpecType s) {
  static const std::array<SpecInfo, 6> info{{
      {"every request is eventually followed by a response; repeated requests and unrequested responses are fine",
       "Waiter"},
      {"one response settles all pending requests; a response needs a pending request", "Send-Ack in Communication"},
      {"each response settles one pending request; unrequested responses are fine", "Broker in MQTT QoS 1"},
      {"responses and requests pair up one-to-one, each response after its request", "Vending Machine"},
      {"no request while one is pending; extra responses are fine", "Reception with Numbered Tickets"},
      {"requests and responses strictly alternate, starting with a request", "Toggle Light Switch"},
  }};
  return info[idx(s)];
}

} // namespace rrmon
