#include "rrmon/automata.hpp"

#include "rrmon/error.hpp"

#include <limits>

namespace rrmon::automata {

Dfa::Dfa(std::vector<std::string> states, StateId initial, std::set<StateId> accepting)
    : states_(std::move(states)), initial_(initial), accepting_(std::move(accepting)), delta_(states_.size()) {
  if (initial_ >= states_.size())
    throw InvalidArgument("initial state is not declared");
  for (auto s : accepting_)
    if (s >= states_.size())
      throw InvalidArgument("accepting state is not declared");
}

void Dfa::add_transition(StateId from, Event letter, StateId to) {
  if (from >= states_.size() || to >= states_.size())
    throw InvalidArgument("transition uses an undeclared state");
  auto& slot = delta_[from][static_cast<std::size_t>(letter)];
  if (slot && *slot != to)
    throw InvalidArgument("second transition on '" + std::string(to_string(letter)) + "' from " + states_[from]);
  slot = to;
}

std::optional<StateId> Dfa::transition(StateId from, Event letter) const {
  return delta_.at(from)[static_cast<std::size_t>(letter)];
}

OneCounterAutomaton::OneCounterAutomaton(std::vector<std::string> states, StateId initial, std::set<StateId> accepting)
    : states_(std::move(states)), initial_(initial), accepting_(std::move(accepting)) {
  check_state(initial_);
  for (auto s : accepting_)
    check_state(s);
}

void OneCounterAutomaton::check_state(StateId s) const {
  if (s >= states_.size())
    throw InvalidArgument("state " + std::to_string(s) + " is not declared");
}

void OneCounterAutomaton::add_rule(StateId from, Event letter, CounterAction action, StateId to) {
  check_state(from);
  check_state(to);
  auto [it, inserted] = rules_.emplace(std::make_pair(from, letter), CounterRule{action, to});
  if (!inserted)
    throw InvalidArgument("second rule on '" + std::string(to_string(letter)) + "' from " + states_[from]);
}

void OneCounterAutomaton::add_zero_test(StateId from, StateId to) {
  check_state(from);
  check_state(to);
  zero_tests_.emplace_back(from, to);
}

void OneCounterAutomaton::set_letter_class(Event letter, Tag tag) { classes_[static_cast<std::size_t>(letter)] = tag; }

std::optional<CounterRule> OneCounterAutomaton::rule(StateId from, Event letter) const {
  auto it = rules_.find({from, letter});
  if (it == rules_.end())
    return std::nullopt;
  return it->second;
}

Dfa dfa_for(SpecType s) {
  if (!is_regular(s))
    throw NotRegular(std::string(to_string(s)) + " needs a one-counter automaton");
  constexpr StateId q0 = 0, q1 = 1;
  Dfa a({"q0", "q1"}, q0, {q0});
  a.add_transition(q0, Event::req, q1);
  a.add_transition(q1, Event::resp, q0);
  if (s == SpecType::rr1 || s == SpecType::rr5)
    a.add_transition(q0, Event::resp, q0);
  if (s == SpecType::rr1 || s == SpecType::rr2)
    a.add_transition(q1, Event::req, q1);
  return a;
}

OneCounterAutomaton voca_for(SpecType s) {
  if (s != SpecType::rr3 && s != SpecType::rr4)
    throw InvalidArgument(std::string(to_string(s)) + " is regular; use dfa_for");
  constexpr StateId q0 = 0, q1 = 1, q2 = 2;
  const auto down = s == SpecType::rr3 ? CounterAction::saturating_decrement : CounterAction::decrement;
  OneCounterAutomaton a({"q0", "q1", "q2"}, q0, {q2});
  a.add_rule(q0, Event::req, CounterAction::increment, q1);
  a.add_rule(q1, Event::req, CounterAction::increment, q1);
  a.add_rule(q0, Event::resp, down, q0);
  a.add_rule(q1, Event::resp, down, q0);
  a.add_zero_test(q0, q2);
  return a;
}

Machine machine_for(SpecType s) {
  if (is_regular(s))
    return dfa_for(s);
  return voca_for(s);
}

Config initial_config(const Dfa& a) { return {a.initial(), 0, false}; }
Config initial_config(const OneCounterAutomaton& a) { return {a.initial(), 0, false}; }
Config initial_config(const Machine& m) {
  return std::visit([](const auto& a) { return initial_config(a); }, m);
}

Config step(const Dfa& a, const Config& cfg, Event letter) {
  if (cfg.stuck)
    throw InvalidArgument("cannot step a stuck configuration");
  auto to = a.transition(cfg.state, letter);
  if (!to)
    return {cfg.state, cfg.counter, true};
  return {*to, cfg.counter, false};
}

Config step(const OneCounterAutomaton& a, const Config& cfg, Event letter) {
  if (cfg.stuck)
    throw InvalidArgument("cannot step a stuck configuration");
  auto r = a.rule(cfg.state, letter);
  if (!r)
    return {cfg.state, cfg.counter, true};
  auto c = cfg.counter;
  switch (r->action) {
  case CounterAction::increment:
    if (c == std::numeric_limits<std::uint64_t>::max())
      throw CounterOverflow("counter overflow in state " + a.states()[cfg.state]);
    ++c;
    break;
  case CounterAction::decrement:
    if (c == 0)
      return {cfg.state, cfg.counter, true};
    --c;
    break;
  case CounterAction::saturating_decrement:
    if (c > 0)
      --c;
    break;
  case CounterAction::keep:
    break;
  }
  return {r->target, c, false};
}

Config step(const Machine& m, const Config& cfg, Event letter) {
  return std::visit([&](const auto& a) { return step(a, cfg, letter); }, m);
}

bool accepts(const Dfa& a, const Config& cfg) { return !cfg.stuck && a.accepting().count(cfg.state) > 0; }

bool accepts(const OneCounterAutomaton& a, const Config& cfg) {
  if (cfg.stuck)
    return false;
  if (a.accepting().count(cfg.state))
    return true;
  if (cfg.counter != 0)
    return false;
  for (const auto& [from, to] : a.zero_tests())
    if (from == cfg.state && a.accepting().count(to))
      return true;
  return false;
}

bool accepts(const Machine& m, const Config& cfg) {
  return std::visit([&](const auto& a) { return accepts(a, cfg); }, m);
}

namespace {

template <class A>
RunResult run_machine(const A& a, const Word& w) {
  RunResult result;
  Config cfg = initial_config(a);
  for (std::size_t i = 0; i < w.size(); ++i) {
    cfg = step(a, cfg, w[i]);
    if (cfg.stuck) {
      result.stuck_at = i;
      break;
    }
  }
  result.final_config = cfg;
  result.accepted = accepts(a, cfg);
  return result;
}

} // namespace

RunResult run(const Dfa& a, const Word& w) { return run_machine(a, w); }
RunResult run(const OneCounterAutomaton& a, const Word& w) { return run_machine(a, w); }
RunResult run(const Machine& m, const Word& w) {
  return std::visit([&](const auto& a) { return run(a, w); }, m);
}

bool validate_visibly(const OneCounterAutomaton& a) {
  for (const auto& [key, r] : a.rules()) {
    switch (a.letter_class(key.second)) {
    case Tag::call:
      if (r.action != CounterAction::increment)
        return false;
      break;
    case Tag::internal:
      if (r.action != CounterAction::keep)
        return false;
      break;
    case Tag::ret:
      if (r.action != CounterAction::decrement && r.action != CounterAction::saturating_decrement)
        return false;
      break;
    }
  }
  return true;
}

} // namespace rrmon::automata
