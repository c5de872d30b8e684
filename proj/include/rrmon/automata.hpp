#pragma once

#include "rrmon/spec_type.hpp"
#include "rrmon/trace.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rrmon::automata {

using StateId = std::size_t;

/// Deterministic, possibly partial, automaton over {req, resp}. A missing
/// edge is an implicit rejecting sink.
class Dfa {
public:
  Dfa(std::vector<std::string> states, StateId initial, std::set<StateId> accepting);

  void add_transition(StateId from, Event letter, StateId to);

  const std::vector<std::string>& states() const noexcept { return states_; }
  StateId initial() const noexcept { return initial_; }
  const std::set<StateId>& accepting() const noexcept { return accepting_; }
  std::optional<StateId> transition(StateId from, Event letter) const;

private:
  std::vector<std::string> states_;
  StateId initial_;
  std::set<StateId> accepting_;
  std::vector<std::array<std::optional<StateId>, 2>> delta_;
};

/// Counter effect of a one-counter rule.
enum class CounterAction : std::uint8_t {
  increment,
  /// c := c - 1; no move when c = 0.
  decrement,
  /// c := max(c - 1, 0).
  saturating_decrement,
  keep,
};

struct CounterRule {
  CounterAction action;
  StateId target;
};

/// One-counter automaton whose consuming rules are keyed by (state, letter).
/// Acceptance: the run ends in an accepting state, or in a state with a
/// zero-test edge into an accepting state while the counter is 0.
class OneCounterAutomaton {
public:
  OneCounterAutomaton(std::vector<std::string> states, StateId initial, std::set<StateId> accepting);

  void add_rule(StateId from, Event letter, CounterAction action, StateId to);
  /// Non-consuming move `from --[c = 0]--> to`.
  void add_zero_test(StateId from, StateId to);
  /// Declares the call / internal / return class of a letter. Defaults:
  /// req is a call, resp a return.
  void set_letter_class(Event letter, Tag tag);

  const std::vector<std::string>& states() const noexcept { return states_; }
  StateId initial() const noexcept { return initial_; }
  const std::set<StateId>& accepting() const noexcept { return accepting_; }
  const std::map<std::pair<StateId, Event>, CounterRule>& rules() const noexcept { return rules_; }
  const std::vector<std::pair<StateId, StateId>>& zero_tests() const noexcept { return zero_tests_; }
  Tag letter_class(Event letter) const noexcept { return classes_[static_cast<std::size_t>(letter)]; }
  std::optional<CounterRule> rule(StateId from, Event letter) const;

private:
  void check_state(StateId s) const;

  std::vector<std::string> states_;
  StateId initial_;
  std::set<StateId> accepting_;
  std::map<std::pair<StateId, Event>, CounterRule> rules_;
  std::vector<std::pair<StateId, StateId>> zero_tests_;
  std::array<Tag, 2> classes_{Tag::call, Tag::ret};
};

using Machine = std::variant<Dfa, OneCounterAutomaton>;

/// Run configuration. DFAs keep counter = 0.
struct Config {
  StateId state = 0;
  std::uint64_t counter = 0;
  bool stuck = false;

  friend bool operator==(const Config&, const Config&) = default;
};

struct RunResult {
  bool accepted = false;
  /// First index with no applicable transition.
  std::optional<std::size_t> stuck_at;
  Config final_config;
};

/// RR1, RR2, RR5, RR6 as two-state partial DFAs; NotRegular otherwise.
Dfa dfa_for(SpecType s);

/// RR3 (saturating decrement) and RR4 (plain decrement) as visibly
/// one-counter automata with states q0, q1 and the zero-tested accepting q2.
OneCounterAutomaton voca_for(SpecType s);

/// dfa_for for regular types, voca_for otherwise.
Machine machine_for(SpecType s);

Config initial_config(const Dfa& a);
Config initial_config(const OneCounterAutomaton& a);
Config initial_config(const Machine& m);

/// One deterministic step. Throws InvalidArgument on a stuck config and
/// CounterOverflow if the counter would wrap.
Config step(const Dfa& a, const Config& cfg, Event letter);
Config step(const OneCounterAutomaton& a, const Config& cfg, Event letter);
Config step(const Machine& m, const Config& cfg, Event letter);

bool accepts(const Dfa& a, const Config& cfg);
bool accepts(const OneCounterAutomaton& a, const Config& cfg);
bool accepts(const Machine& m, const Config& cfg);

RunResult run(const Dfa& a, const Word& w);
RunResult run(const OneCounterAutomaton& a, const Word& w);
RunResult run(const Machine& m, const Word& w);

/// True iff every rule's counter effect is fixed by its letter's class:
/// calls increment, internals keep, returns decrement (saturating
/// decrement being the allowed zero-counter exception).
bool validate_visibly(const OneCounterAutomaton& a);

} // namespace rrmon::automata
