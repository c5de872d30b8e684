#include "rrmon/grammars.hpp"

#include "rrmon/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rrmon::grammar {

Regex Regex::make(RegexOp op, Event symbol, std::vector<Regex> args) {
  return Regex(std::make_shared<const Node>(Node{op, symbol, std::move(args)}));
}

bool operator==(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_)
    return true;
  if (a.op() != b.op() || a.args() != b.args())
    return false;
  return a.op() != RegexOp::symbol || a.symbol() == b.symbol();
}

Regex empty_set() { return Regex::make(RegexOp::empty_set, Event::req, {}); }
Regex epsilon() { return Regex::make(RegexOp::epsilon, Event::req, {}); }
Regex symbol(Event e) { return Regex::make(RegexOp::symbol, e, {}); }
Regex alternation(Regex a, Regex b) { return Regex::make(RegexOp::alternation, Event::req, {std::move(a), std::move(b)}); }
Regex concatenation(Regex a, Regex b) {
  return Regex::make(RegexOp::concatenation, Event::req, {std::move(a), std::move(b)});
}
Regex star(Regex r) { return Regex::make(RegexOp::star, Event::req, {std::move(r)}); }
Regex plus(Regex r) { return Regex::make(RegexOp::plus, Event::req, {std::move(r)}); }

namespace {

std::string postfix_operand(const Regex& r) {
  auto s = to_string(r);
  if (r.op() == RegexOp::concatenation || r.op() == RegexOp::alternation)
    return "(" + s + ")";
  return s;
}

} // namespace

std::string to_string(const Regex& r) {
  switch (r.op()) {
  case RegexOp::empty_set:
    return "0";
  case RegexOp::epsilon:
    return "1";
  case RegexOp::symbol:
    return std::string(rrmon::to_string(r.symbol()));
  case RegexOp::alternation:
    return to_string(r.args()[0]) + "|" + to_string(r.args()[1]);
  case RegexOp::concatenation: {
    auto side = [](const Regex& x) {
      return x.op() == RegexOp::alternation ? "(" + to_string(x) + ")" : to_string(x);
    };
    const auto& rhs = r.args()[1];
    // Postfix-wrapped groups read naturally without a separating space.
    bool tight = rhs.op() == RegexOp::star || rhs.op() == RegexOp::plus
                     ? rhs.args()[0].op() == RegexOp::concatenation || rhs.args()[0].op() == RegexOp::alternation
                     : false;
    return side(r.args()[0]) + (tight ? "" : " ") + side(rhs);
  }
  case RegexOp::star:
    return postfix_operand(r.args()[0]) + "*";
  case RegexOp::plus:
    return postfix_operand(r.args()[0]) + "+";
  }
  return "?";
}

Regex regex_for(SpecType s) {
  auto req = symbol(Event::req);
  auto resp = symbol(Event::resp);
  switch (s) {
  case SpecType::rr1:
    return concatenation(star(resp), star(concatenation(plus(req), plus(resp))));
  case SpecType::rr2:
    return star(concatenation(plus(req), resp));
  case SpecType::rr5:
    return concatenation(star(resp), star(concatenation(req, plus(resp))));
  case SpecType::rr6:
    return star(concatenation(req, resp));
  case SpecType::rr3:
  case SpecType::rr4:
    break;
  }
  throw NotRegular(std::string(rrmon::to_string(s)) + " counts pending requests and is not regular");
}

// ---------------------------------------------------------------------------
// Thompson construction

RegexMatcher::RegexMatcher(const Regex& r) {
  auto [s, f] = build(r);
  start_ = s;
  accept_ = f;
}

std::size_t RegexMatcher::add_state() {
  states_.emplace_back();
  return states_.size() - 1;
}

std::pair<std::size_t, std::size_t> RegexMatcher::build(const Regex& r) {
  switch (r.op()) {
  case RegexOp::empty_set: {
    auto s = add_state();
    auto f = add_state();
    return {s, f};
  }
  case RegexOp::epsilon: {
    auto s = add_state();
    auto f = add_state();
    states_[s].eps.push_back(f);
    return {s, f};
  }
  case RegexOp::symbol: {
    auto s = add_state();
    auto f = add_state();
    states_[s].has_edge = true;
    states_[s].label = r.symbol();
    states_[s].target = f;
    return {s, f};
  }
  case RegexOp::alternation: {
    auto [as, af] = build(r.args()[0]);
    auto [bs, bf] = build(r.args()[1]);
    auto s = add_state();
    auto f = add_state();
    states_[s].eps = {as, bs};
    states_[af].eps.push_back(f);
    states_[bf].eps.push_back(f);
    return {s, f};
  }
  case RegexOp::concatenation: {
    auto [as, af] = build(r.args()[0]);
    auto [bs, bf] = build(r.args()[1]);
    states_[af].eps.push_back(bs);
    return {as, bf};
  }
  case RegexOp::star:
  case RegexOp::plus: {
    auto [as, af] = build(r.args()[0]);
    auto s = add_state();
    auto f = add_state();
    states_[s].eps.push_back(as);
    if (r.op() == RegexOp::star)
      states_[s].eps.push_back(f);
    states_[af].eps.push_back(as);
    states_[af].eps.push_back(f);
    return {s, f};
  }
  }
  throw InvalidArgument("unknown regex node");
}

void RegexMatcher::close(std::vector<char>& set, std::vector<std::size_t>& stack) const {
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto t : states_[q].eps)
      if (!set[t]) {
        set[t] = 1;
        stack.push_back(t);
      }
  }
}

bool RegexMatcher::matches(const Word& w) const {
  std::vector<char> current(states_.size(), 0);
  std::vector<std::size_t> stack{start_};
  current[start_] = 1;
  close(current, stack);
  for (auto e : w) {
    std::vector<char> next(states_.size(), 0);
    bool any = false;
    for (std::size_t q = 0; q < states_.size(); ++q)
      if (current[q] && states_[q].has_edge && states_[q].label == e && !next[states_[q].target]) {
        next[states_[q].target] = 1;
        stack.push_back(states_[q].target);
        any = true;
      }
    if (!any)
      return false;
    close(next, stack);
    current.swap(next);
  }
  return current[accept_] != 0;
}

bool regex_match(const Regex& r, const Word& w) { return RegexMatcher(r).matches(w); }

// ---------------------------------------------------------------------------
// Context-free grammars

Cfg::Cfg(std::set<std::string> nonterminals, std::set<std::string> terminals, std::vector<Production> productions,
         std::string start)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)), productions_(std::move(productions)),
      start_(std::move(start)) {
  if (!nonterminals_.count(start_))
    throw InvalidArgument("start symbol '" + start_ + "' is not a nonterminal");
  for (const auto& t : terminals_)
    if (nonterminals_.count(t))
      throw InvalidArgument("symbol '" + t + "' is both terminal and nonterminal");
  for (const auto& p : productions_) {
    if (!nonterminals_.count(p.head))
      throw InvalidArgument("production head '" + p.head + "' is not a nonterminal");
    for (const auto& sym : p.body)
      if (!nonterminals_.count(sym) && !terminals_.count(sym))
        throw InvalidArgument("undeclared symbol '" + sym + "' in production for " + p.head);
  }
}

Cfg cfg_for(SpecType s) {
  const std::string S = "S";
  const std::string req(req_atom);
  const std::string resp(resp_atom);
  std::vector<Production> rules;
  switch (s) {
  case SpecType::rr3:
    rules = {{S, {S, req, S, resp}}, {S, {S, resp}}, {S, {}}};
    break;
  case SpecType::rr4:
    rules = {{S, {S, req, S, resp}}, {S, {}}};
    break;
  default:
    throw InvalidArgument(std::string(rrmon::to_string(s)) + " is regular; use regex_for");
  }
  return Cfg({S}, {req, resp}, std::move(rules), S);
}

namespace {

using Rules = std::vector<Production>;

std::set<std::string> nullable_symbols(const Rules& rules) {
  std::set<std::string> nullable;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : rules) {
      if (nullable.count(p.head))
        continue;
      if (std::all_of(p.body.begin(), p.body.end(), [&](const std::string& x) { return nullable.count(x) > 0; })) {
        nullable.insert(p.head);
        changed = true;
      }
    }
  }
  return nullable;
}

} // namespace

CnfGrammar::CnfGrammar(const Cfg& g) {
  start_nullable_ = nullable_symbols(g.productions()).count(g.start()) > 0;

  std::set<std::string> nts = g.nonterminals();
  auto fresh = [&](const std::string& hint) {
    std::string name = "<" + hint + ">";
    for (int k = 1; nts.count(name); ++k)
      name = "<" + hint + std::to_string(k) + ">";
    nts.insert(name);
    return name;
  };

  // START
  const std::string start = fresh("start");
  Rules rules{{start, {g.start()}}};
  rules.insert(rules.end(), g.productions().begin(), g.productions().end());

  // TERM: terminals inside bodies of length >= 2 get their own nonterminal.
  std::map<std::string, std::string> term_nt;
  for (auto& p : rules) {
    if (p.body.size() < 2)
      continue;
    for (auto& sym : p.body)
      if (g.terminals().count(sym)) {
        auto it = term_nt.find(sym);
        if (it == term_nt.end())
          it = term_nt.emplace(sym, fresh("T_" + sym)).first;
        sym = it->second;
      }
  }
  for (const auto& [t, nt] : term_nt)
    rules.push_back({nt, {t}});

  // BIN
  Rules binary;
  for (const auto& p : rules) {
    if (p.body.size() <= 2) {
      binary.push_back(p);
      continue;
    }
    std::string head = p.head;
    for (std::size_t k = 0; k + 2 < p.body.size(); ++k) {
      auto rest = fresh(p.head + "_" + std::to_string(k));
      binary.push_back({head, {p.body[k], rest}});
      head = rest;
    }
    binary.push_back({head, {p.body[p.body.size() - 2], p.body.back()}});
  }

  // DEL: drop ε-rules, adding every variant that omits nullable symbols.
  auto nullable = nullable_symbols(binary);
  std::set<std::pair<std::string, std::vector<std::string>>> no_eps;
  for (const auto& p : binary) {
    const auto n = p.body.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::string> body;
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (1u << k)) {
          if (!nullable.count(p.body[k])) {
            ok = false;
            break;
          }
        } else {
          body.push_back(p.body[k]);
        }
      }
      if (ok && !body.empty())
        no_eps.insert({p.head, std::move(body)});
    }
  }

  // UNIT: A -> B is replaced by A -> β for every non-unit B -> β reachable
  // through unit rules.
  auto is_unit = [&](const std::vector<std::string>& body) { return body.size() == 1 && nts.count(body[0]); };
  std::map<std::string, std::set<std::string>> unit_reach;
  for (const auto& nt : nts)
    unit_reach[nt].insert(nt);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [head, body] : no_eps)
      if (is_unit(body))
        for (auto& [a, reach] : unit_reach)
          if (reach.count(head) && !reach.count(body[0])) {
            reach.insert(body[0]);
            changed = true;
          }
  }

  std::map<std::string, std::size_t> index;
  auto id = [&](const std::string& nt) {
    auto [it, inserted] = index.emplace(nt, names_.size());
    if (inserted)
      names_.push_back(nt);
    return it->second;
  };
  start_ = id(start);

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_bin;
  std::set<std::pair<std::size_t, std::string>> seen_term;
  for (const auto& [a, reach] : unit_reach)
    for (const auto& b : reach)
      for (const auto& [head, body] : no_eps) {
        if (head != b || is_unit(body))
          continue;
        if (body.size() == 1) {
          if (seen_term.insert({id(a), body[0]}).second)
            terminal_rules_.push_back({id(a), body[0]});
        } else {
          auto key = std::make_tuple(id(a), id(body[0]), id(body[1]));
          if (seen_bin.insert(key).second)
            binary_rules_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key)});
        }
      }
}

bool CnfGrammar::accepts(const std::vector<std::string>& word) const {
  const std::size_t n = word.size();
  if (n == 0)
    return start_nullable_;
  const std::size_t m = names_.size();
  // table[(len-1) * n + i] holds the nonterminals deriving word[i, i+len).
  std::vector<std::vector<char>> table(n * n, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [nt, t] : terminal_rules_)
      if (t == word[i])
        table[i][nt] = 1;
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i) {
      auto& cell = table[(len - 1) * n + i];
      for (std::size_t split = 1; split < len; ++split) {
        const auto& left = table[(split - 1) * n + i];
        const auto& right = table[(len - split - 1) * n + i + split];
        for (const auto& r : binary_rules_)
          if (left[r.left] && right[r.right])
            cell[r.head] = 1;
      }
    }
  return table[(n - 1) * n][start_] != 0;
}

bool CnfGrammar::accepts(const Word& w) const {
  std::vector<std::string> word;
  word.reserve(w.size());
  for (auto e : w)
    word.emplace_back(rrmon::to_string(e));
  return accepts(word);
}

bool cyk_member(const Cfg& g, const Word& w) { return CnfGrammar(g).accepts(w); }

bool cyk_member(const Cfg& g, const std::vector<std::string>& word) { return CnfGrammar(g).accepts(word); }

} // namespace rrmon::grammar
