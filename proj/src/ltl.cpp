#include "rrmon/ltl.hpp"

#include "formula_lexer.hpp"
#include "rrmon/error.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rrmon::ltl {

Formula Formula::make(Op op, std::string name, std::vector<Formula> args) {
  return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(args)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_)
    return true;
  return a.op() == b.op() && a.name() == b.name() && a.args() == b.args();
}

Formula bottom() { return Formula::make(Op::bottom, {}, {}); }
Formula top() { return Formula::make(Op::top, {}, {}); }
Formula atom(std::string name) {
  if (name.empty())
    throw InvalidArgument("atom name must be nonempty");
  return Formula::make(Op::atom, std::move(name), {});
}
Formula negation(Formula f) { return Formula::make(Op::negation, {}, {std::move(f)}); }
Formula conjunction(Formula a, Formula b) { return Formula::make(Op::conjunction, {}, {std::move(a), std::move(b)}); }
Formula disjunction(Formula a, Formula b) { return Formula::make(Op::disjunction, {}, {std::move(a), std::move(b)}); }
Formula implication(Formula a, Formula b) { return Formula::make(Op::implication, {}, {std::move(a), std::move(b)}); }
Formula next(Formula f) { return Formula::make(Op::next, {}, {std::move(f)}); }
Formula yesterday(Formula f) { return Formula::make(Op::yesterday, {}, {std::move(f)}); }
Formula until(Formula a, Formula b) { return Formula::make(Op::until, {}, {std::move(a), std::move(b)}); }
Formula since(Formula a, Formula b) { return Formula::make(Op::since, {}, {std::move(a), std::move(b)}); }
Formula release(Formula a, Formula b) { return Formula::make(Op::release, {}, {std::move(a), std::move(b)}); }
Formula trigger(Formula a, Formula b) { return Formula::make(Op::trigger, {}, {std::move(a), std::move(b)}); }
Formula finally(Formula f) { return Formula::make(Op::finally, {}, {std::move(f)}); }
Formula globally(Formula f) { return Formula::make(Op::globally, {}, {std::move(f)}); }
Formula once(Formula f) { return Formula::make(Op::once, {}, {std::move(f)}); }
Formula historically(Formula f) { return Formula::make(Op::historically, {}, {std::move(f)}); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::TokenCursor;
using detail::TokenKind;

bool prefix_op(std::string_view w, Op& op) {
  if (w == "G")
    op = Op::globally;
  else if (w == "F")
    op = Op::finally;
  else if (w == "X")
    op = Op::next;
  else if (w == "Y")
    op = Op::yesterday;
  else if (w == "O")
    op = Op::once;
  else if (w == "H")
    op = Op::historically;
  else
    return false;
  return true;
}

bool infix_op(std::string_view w, Op& op) {
  if (w == "U")
    op = Op::until;
  else if (w == "S")
    op = Op::since;
  else if (w == "R")
    op = Op::release;
  else if (w == "T")
    op = Op::trigger;
  else
    return false;
  return true;
}

class Parser {
public:
  explicit Parser(std::string_view text) : cur_(text) {}

  Formula parse() {
    auto f = implication_level();
    cur_.expect_end();
    return f;
  }

private:
  Formula implication_level() {
    auto lhs = disjunction_level();
    if (cur_.at(TokenKind::arrow)) {
      cur_.next();
      return implication(std::move(lhs), implication_level());
    }
    return lhs;
  }

  Formula disjunction_level() {
    auto f = conjunction_level();
    while (cur_.at(TokenKind::bar)) {
      cur_.next();
      f = disjunction(std::move(f), conjunction_level());
    }
    return f;
  }

  Formula conjunction_level() {
    auto f = binary_temporal_level();
    while (cur_.at(TokenKind::amp)) {
      cur_.next();
      f = conjunction(std::move(f), binary_temporal_level());
    }
    return f;
  }

  Formula binary_temporal_level() {
    auto lhs = unary_level();
    Op op;
    if (cur_.at(TokenKind::word) && infix_op(cur_.peek().text, op)) {
      cur_.next();
      return Formula::make(op, {}, {std::move(lhs), binary_temporal_level()});
    }
    return lhs;
  }

  Formula unary_level() {
    if (cur_.at(TokenKind::bang)) {
      cur_.next();
      return negation(unary_level());
    }
    Op op;
    if (cur_.at(TokenKind::word) && prefix_op(cur_.peek().text, op)) {
      cur_.next();
      return Formula::make(op, {}, {unary_level()});
    }
    return primary();
  }

  Formula primary() {
    if (cur_.at(TokenKind::lparen)) {
      cur_.next();
      auto f = implication_level();
      cur_.expect(TokenKind::rparen, "')'");
      return f;
    }
    if (!cur_.at(TokenKind::word))
      cur_.fail(cur_.at(TokenKind::end) ? "unexpected end of formula" : "unexpected '" + cur_.peek().text + "'");
    const auto& w = cur_.peek().text;
    Op op;
    if (infix_op(w, op))
      cur_.fail("operator '" + w + "' is missing its left operand");
    if (std::isdigit(static_cast<unsigned char>(w.front())))
      cur_.fail("atom names must not start with a digit");
    auto tok = cur_.next();
    if (tok.text == "true")
      return top();
    if (tok.text == "false")
      return bottom();
    return atom(tok.text);
  }

  TokenCursor cur_;
};

} // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string_view symbol(Op op) {
  switch (op) {
  case Op::conjunction:
    return "&";
  case Op::disjunction:
    return "|";
  case Op::implication:
    return "->";
  case Op::next:
    return "X";
  case Op::yesterday:
    return "Y";
  case Op::until:
    return "U";
  case Op::since:
    return "S";
  case Op::release:
    return "R";
  case Op::trigger:
    return "T";
  case Op::finally:
    return "F";
  case Op::globally:
    return "G";
  case Op::once:
    return "O";
  case Op::historically:
    return "H";
  default:
    return "?";
  }
}

} // namespace

std::string to_string(const Formula& f) {
  switch (f.op()) {
  case Op::bottom:
    return "false";
  case Op::top:
    return "true";
  case Op::atom:
    return f.name();
  case Op::negation:
    return "!" + to_string(f.operand());
  case Op::next:
  case Op::yesterday:
  case Op::finally:
  case Op::globally:
  case Op::once:
  case Op::historically:
    return std::string(symbol(f.op())) + " " + to_string(f.operand());
  default:
    return "(" + to_string(f.lhs()) + " " + std::string(symbol(f.op())) + " " + to_string(f.rhs()) + ")";
  }
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using Table = std::vector<bool>;

class Evaluator {
public:
  explicit Evaluator(const Trace& t) : trace_(t), n_(t.size()) {}

  const Table& table(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end())
      return it->second;
    Table t = compute(f);
    return memo_.emplace(f.id(), std::move(t)).first->second;
  }

private:
  Table compute(const Formula& f) {
    Table out(n_, false);
    switch (f.op()) {
    case Op::bottom:
      break;
    case Op::top:
      out.assign(n_, true);
      break;
    case Op::atom:
      if (!trace_.aps().count(f.name()))
        throw InvalidArgument("atom '" + f.name() + "' is not a declared proposition of the trace");
      for (std::size_t i = 0; i < n_; ++i)
        out[i] = trace_[i].holds(f.name());
      break;
    case Op::negation: {
      const auto& a = table(f.operand());
      for (std::size_t i = 0; i < n_; ++i)
        out[i] = !a[i];
      break;
    }
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication: {
      const auto& a = table(f.lhs());
      const auto& b = table(f.rhs());
      for (std::size_t i = 0; i < n_; ++i)
        out[i] = f.op() == Op::conjunction ? (a[i] && b[i]) : f.op() == Op::disjunction ? (a[i] || b[i]) : (!a[i] || b[i]);
      break;
    }
    case Op::next: {
      const auto& a = table(f.operand());
      for (std::size_t i = 0; i + 1 < n_; ++i)
        out[i] = a[i + 1];
      break;
    }
    case Op::yesterday: {
      const auto& a = table(f.operand());
      for (std::size_t i = 1; i < n_; ++i)
        out[i] = a[i - 1];
      break;
    }
    case Op::until: {
      const auto& a = table(f.lhs());
      const auto& b = table(f.rhs());
      for (std::size_t k = n_; k-- > 0;)
        out[k] = b[k] || (a[k] && k + 1 < n_ && out[k + 1]);
      break;
    }
    case Op::release: {
      // Dual of until: ψ holds up to and including the first φ position, or to the end.
      const auto& a = table(f.lhs());
      const auto& b = table(f.rhs());
      for (std::size_t k = n_; k-- > 0;)
        out[k] = b[k] && (a[k] || k + 1 == n_ || out[k + 1]);
      break;
    }
    case Op::since: {
      const auto& a = table(f.lhs());
      const auto& b = table(f.rhs());
      for (std::size_t k = 0; k < n_; ++k)
        out[k] = b[k] || (a[k] && k > 0 && out[k - 1]);
      break;
    }
    case Op::trigger: {
      const auto& a = table(f.lhs());
      const auto& b = table(f.rhs());
      for (std::size_t k = 0; k < n_; ++k)
        out[k] = b[k] && (a[k] || k == 0 || out[k - 1]);
      break;
    }
    case Op::finally: {
      const auto& a = table(f.operand());
      for (std::size_t k = n_; k-- > 0;)
        out[k] = a[k] || (k + 1 < n_ && out[k + 1]);
      break;
    }
    case Op::globally: {
      const auto& a = table(f.operand());
      for (std::size_t k = n_; k-- > 0;)
        out[k] = a[k] && (k + 1 == n_ || out[k + 1]);
      break;
    }
    case Op::once: {
      const auto& a = table(f.operand());
      for (std::size_t k = 0; k < n_; ++k)
        out[k] = a[k] || (k > 0 && out[k - 1]);
      break;
    }
    case Op::historically: {
      const auto& a = table(f.operand());
      for (std::size_t k = 0; k < n_; ++k)
        out[k] = a[k] && (k == 0 || out[k - 1]);
      break;
    }
    }
    return out;
  }

  const Trace& trace_;
  std::size_t n_;
  std::unordered_map<const void*, Table> memo_;
};

// Truth on the empty trace: every temporal quantifier ranges over no positions.
bool vacuous(const Formula& f, const Trace& t) {
  switch (f.op()) {
  case Op::bottom:
    return false;
  case Op::top:
    return true;
  case Op::atom:
    if (!t.aps().count(f.name()))
      throw InvalidArgument("atom '" + f.name() + "' is not a declared proposition of the trace");
    return false;
  case Op::negation:
    return !vacuous(f.operand(), t);
  case Op::conjunction:
    return vacuous(f.lhs(), t) && vacuous(f.rhs(), t);
  case Op::disjunction:
    return vacuous(f.lhs(), t) || vacuous(f.rhs(), t);
  case Op::implication:
    return !vacuous(f.lhs(), t) || vacuous(f.rhs(), t);
  case Op::release:
  case Op::trigger:
  case Op::globally:
  case Op::historically:
    return true;
  case Op::next:
  case Op::yesterday:
  case Op::until:
  case Op::since:
  case Op::finally:
  case Op::once:
    return false;
  }
  return false;
}

} // namespace

std::vector<bool> eval_all(const Formula& f, const Trace& t) { return Evaluator(t).table(f); }

bool eval(const Formula& f, const Trace& t, std::size_t i) {
  if (i >= t.size())
    throw std::out_of_range("position " + std::to_string(i) + " outside trace of length " + std::to_string(t.size()));
  return Evaluator(t).table(f)[i];
}

bool eval_trace(const Formula& f, const Trace& t) {
  if (t.empty())
    return vacuous(f, t);
  return eval(f, t, 0);
}

// ---------------------------------------------------------------------------
// Built-in formulas

namespace {

Formula req() { return atom(std::string(req_atom)); }
Formula resp() { return atom(std::string(resp_atom)); }

} // namespace

Formula baseline() { return globally(implication(req(), finally(resp()))); }

Formula builtin_formula(SpecType s) {
  auto resp_after_req = globally(implication(resp(), yesterday(req())));
  auto req_then_resp = globally(implication(req(), next(resp())));
  switch (s) {
  case SpecType::rr1:
    return baseline();
  case SpecType::rr2:
    return conjunction(baseline(), resp_after_req);
  case SpecType::rr5:
    return req_then_resp;
  case SpecType::rr6:
    return conjunction(req_then_resp, resp_after_req);
  case SpecType::rr3:
  case SpecType::rr4:
    break;
  }
  throw NotRegular(std::string(to_string(s)) + " counts pending requests and has no LTL formula; use CaRet");
}

Formula alternative_formula(SpecType s) {
  switch (s) {
  case SpecType::rr2:
    return conjunction(globally(implication(resp(), yesterday(since(negation(resp()), req())))), baseline());
  case SpecType::rr5:
    return globally(implication(req(), next(until(negation(req()), resp()))));
  default:
    throw InvalidArgument("no alternative formula for " + std::string(to_string(s)));
  }
}

} // namespace rrmon::ltl
