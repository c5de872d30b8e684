#pragma once

#include "rrmon/spec_type.hpp"
#include "rrmon/trace.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rrmon::grammar {

enum class RegexOp : std::uint8_t { empty_set, epsilon, symbol, alternation, concatenation, star, plus };

/// Regular expression over {req, resp}. r+ is kept as its own node and
/// means r·r*.
class Regex {
public:
  RegexOp op() const noexcept { return node_->op; }
  Event symbol() const noexcept { return node_->symbol; }
  const std::vector<Regex>& args() const noexcept { return node_->args; }

  friend bool operator==(const Regex& a, const Regex& b);

  static Regex make(RegexOp op, Event symbol, std::vector<Regex> args);

private:
  struct Node {
    RegexOp op;
    Event symbol;
    std::vector<Regex> args;
  };
  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Regex empty_set();
Regex epsilon();
Regex symbol(Event e);
Regex alternation(Regex a, Regex b);
Regex concatenation(Regex a, Regex b);
Regex star(Regex r);
Regex plus(Regex r);

/// Compact textual form, e.g. "resp*(req+ resp+)*".
std::string to_string(const Regex& r);

/// RR1 resp*(req+ resp+)*, RR2 (req+ resp)*, RR5 resp*(req resp+)*,
/// RR6 (req resp)*. NotRegular for RR3 / RR4.
Regex regex_for(SpecType s);

/// Thompson NFA for a regex; matching is a linear-time state-set simulation
/// anchored at both ends.
class RegexMatcher {
public:
  explicit RegexMatcher(const Regex& r);

  bool matches(const Word& w) const;

private:
  struct State {
    std::vector<std::size_t> eps;
    bool has_edge = false;
    Event label = Event::req;
    std::size_t target = 0;
  };

  std::size_t add_state();
  std::pair<std::size_t, std::size_t> build(const Regex& r);
  void close(std::vector<char>& set, std::vector<std::size_t>& stack) const;

  std::vector<State> states_;
  std::size_t start_ = 0;
  std::size_t accept_ = 0;
};

bool regex_match(const Regex& r, const Word& w);

struct Production {
  std::string head;
  std::vector<std::string> body;

  friend bool operator==(const Production&, const Production&) = default;
};

/// Context-free grammar (N, Σ, P, S). The constructor rejects undeclared
/// symbols, N ∩ Σ ≠ ∅ and a start symbol outside N.
class Cfg {
public:
  Cfg(std::set<std::string> nonterminals, std::set<std::string> terminals, std::vector<Production> productions,
      std::string start);

  const std::set<std::string>& nonterminals() const noexcept { return nonterminals_; }
  const std::set<std::string>& terminals() const noexcept { return terminals_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  const std::string& start() const noexcept { return start_; }

private:
  std::set<std::string> nonterminals_;
  std::set<std::string> terminals_;
  std::vector<Production> productions_;
  std::string start_;
};

/// RR3: S -> S req S resp | S resp | ε.  RR4: S -> S req S resp | ε.
Cfg cfg_for(SpecType s);

/// Chomsky normal form of a grammar plus the nullability of its start
/// symbol, ready for CYK.
class CnfGrammar {
public:
  explicit CnfGrammar(const Cfg& g);

  bool accepts(const std::vector<std::string>& word) const;
  bool accepts(const Word& w) const;

  std::size_t nonterminal_count() const noexcept { return names_.size(); }
  bool start_nullable() const noexcept { return start_nullable_; }

private:
  struct Binary {
    std::size_t head, left, right;
  };

  std::vector<std::string> names_;
  std::size_t start_ = 0;
  bool start_nullable_ = false;
  std::vector<std::pair<std::size_t, std::string>> terminal_rules_;
  std::vector<Binary> binary_rules_;
};

bool cyk_member(const Cfg& g, const Word& w);
bool cyk_member(const Cfg& g, const std::vector<std::string>& word);

} // namespace rrmon::grammar
