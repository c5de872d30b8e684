#include "rrmon/caret.hpp"

#include "formula_lexer.hpp"
#include "rrmon/error.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace rrmon::caret {

CaretFormula CaretFormula::make(Op op, std::string name, std::vector<CaretFormula> args) {
  return CaretFormula(std::make_shared<const Node>(Node{op, std::move(name), std::move(args)}));
}

bool operator==(const CaretFormula& a, const CaretFormula& b) {
  if (a.node_ == b.node_)
    return true;
  return a.op() == b.op() && a.name() == b.name() && a.args() == b.args();
}

CaretFormula top() { return CaretFormula::make(Op::top, {}, {}); }
CaretFormula bottom() { return CaretFormula::make(Op::bottom, {}, {}); }
CaretFormula atom(std::string name) {
  if (name.empty())
    throw InvalidArgument("atom name must be nonempty");
  return CaretFormula::make(Op::atom, std::move(name), {});
}
CaretFormula negation(CaretFormula f) { return CaretFormula::make(Op::negation, {}, {std::move(f)}); }
CaretFormula conjunction(CaretFormula a, CaretFormula b) {
  return CaretFormula::make(Op::conjunction, {}, {std::move(a), std::move(b)});
}
CaretFormula disjunction(CaretFormula a, CaretFormula b) {
  return CaretFormula::make(Op::disjunction, {}, {std::move(a), std::move(b)});
}
CaretFormula implication(CaretFormula a, CaretFormula b) {
  return CaretFormula::make(Op::implication, {}, {std::move(a), std::move(b)});
}

CaretFormula next(Successor kind, CaretFormula f) {
  static constexpr Op ops[] = {Op::next_global, Op::next_abstract, Op::next_past};
  return CaretFormula::make(ops[static_cast<int>(kind)], {}, {std::move(f)});
}

CaretFormula until(Successor kind, CaretFormula a, CaretFormula b) {
  static constexpr Op ops[] = {Op::until_global, Op::until_abstract, Op::until_past};
  return CaretFormula::make(ops[static_cast<int>(kind)], {}, {std::move(a), std::move(b)});
}

CaretFormula globally(CaretFormula f) { return CaretFormula::make(Op::globally_global, {}, {std::move(f)}); }
CaretFormula finally(CaretFormula f) { return CaretFormula::make(Op::finally_global, {}, {std::move(f)}); }

// ---------------------------------------------------------------------------
// Syntax

namespace {

using detail::TokenCursor;
using detail::TokenKind;

struct OpName {
  Op op;
  std::string_view text;
  bool infix;
};

constexpr OpName op_names[] = {
    {Op::next_global, "Xg", false},  {Op::next_abstract, "Xa", false},  {Op::next_past, "Xp", false},
    {Op::until_global, "Ug", true},  {Op::until_abstract, "Ua", true},  {Op::until_past, "Up", true},
    {Op::globally_global, "Gg", false}, {Op::finally_global, "Fg", false},
};

const OpName* find_op(std::string_view w) {
  for (const auto& o : op_names)
    if (o.text == w)
      return &o;
  return nullptr;
}

std::string_view op_text(Op op) {
  for (const auto& o : op_names)
    if (o.op == op)
      return o.text;
  return "?";
}

class Parser {
public:
  explicit Parser(std::string_view text) : cur_(text) {}

  CaretFormula parse() {
    auto f = implication_level();
    cur_.expect_end();
    return f;
  }

private:
  CaretFormula implication_level() {
    auto lhs = disjunction_level();
    if (cur_.at(TokenKind::arrow)) {
      cur_.next();
      return implication(std::move(lhs), implication_level());
    }
    return lhs;
  }

  CaretFormula disjunction_level() {
    auto f = conjunction_level();
    while (cur_.at(TokenKind::bar)) {
      cur_.next();
      f = disjunction(std::move(f), conjunction_level());
    }
    return f;
  }

  CaretFormula conjunction_level() {
    auto f = until_level();
    while (cur_.at(TokenKind::amp)) {
      cur_.next();
      f = conjunction(std::move(f), until_level());
    }
    return f;
  }

  CaretFormula until_level() {
    auto lhs = unary_level();
    if (cur_.at(TokenKind::word)) {
      if (const auto* o = find_op(cur_.peek().text); o && o->infix) {
        cur_.next();
        return CaretFormula::make(o->op, {}, {std::move(lhs), until_level()});
      }
    }
    return lhs;
  }

  CaretFormula unary_level() {
    if (cur_.at(TokenKind::bang)) {
      cur_.next();
      return negation(unary_level());
    }
    if (cur_.at(TokenKind::word)) {
      if (const auto* o = find_op(cur_.peek().text); o && !o->infix) {
        cur_.next();
        return CaretFormula::make(o->op, {}, {unary_level()});
      }
    }
    return primary();
  }

  CaretFormula primary() {
    if (cur_.at(TokenKind::lparen)) {
      cur_.next();
      auto f = implication_level();
      cur_.expect(TokenKind::rparen, "')'");
      return f;
    }
    if (!cur_.at(TokenKind::word))
      cur_.fail(cur_.at(TokenKind::end) ? "unexpected end of formula" : "unexpected '" + cur_.peek().text + "'");
    const auto& w = cur_.peek().text;
    if (find_op(w))
      cur_.fail("operator '" + w + "' is missing its left operand");
    if (detail::looks_like_operator(w))
      cur_.fail("unknown operator '" + w + "'");
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

CaretFormula parse_caret(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const CaretFormula& f) {
  switch (f.op()) {
  case Op::bottom:
    return "false";
  case Op::top:
    return "true";
  case Op::atom:
    return f.name();
  case Op::negation:
    return "!" + to_string(f.operand());
  case Op::conjunction:
    return "(" + to_string(f.lhs()) + " & " + to_string(f.rhs()) + ")";
  case Op::disjunction:
    return "(" + to_string(f.lhs()) + " | " + to_string(f.rhs()) + ")";
  case Op::implication:
    return "(" + to_string(f.lhs()) + " -> " + to_string(f.rhs()) + ")";
  case Op::until_global:
  case Op::until_abstract:
  case Op::until_past:
    return "(" + to_string(f.lhs()) + " " + std::string(op_text(f.op())) + " " + to_string(f.rhs()) + ")";
  default:
    return std::string(op_text(f.op())) + " " + to_string(f.operand());
  }
}

// ---------------------------------------------------------------------------
// Call / return structure

std::vector<Tag> tags_of(const ExtendedTrace& sigma) {
  std::vector<Tag> tags;
  tags.reserve(sigma.size());
  for (const auto& l : sigma)
    tags.push_back(l.tag);
  return tags;
}

CallStructure::CallStructure(const ExtendedTrace& sigma, QMode mode) : CallStructure(tags_of(sigma), mode) {}

CallStructure::CallStructure(const std::vector<Tag>& tags, QMode mode)
    : tags_(tags), mode_(mode), ret_(tags.size()), call_(tags.size()) {
  const std::size_t n = tags_.size();
  const auto offset = static_cast<long>(n);

  // depth[k] = #calls - #returns among positions [0, k). The interior (i, j)
  // is balanced iff depth[j] == depth[i + 1].
  std::vector<long> depth(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k)
    depth[k + 1] = depth[k] + (tags_[k] == Tag::call ? 1 : tags_[k] == Tag::ret ? -1 : 0);

  std::vector<std::optional<std::size_t>> nearest_return(2 * n + 1);
  for (std::size_t i = n; i-- > 0;) {
    ret_[i] = nearest_return[static_cast<std::size_t>(depth[i + 1] + offset)];
    if (tags_[i] == Tag::ret)
      nearest_return[static_cast<std::size_t>(depth[i] + offset)] = i;
  }

  // Sweep left to right keeping the calls j < i that still qualify for i.
  std::vector<std::vector<std::size_t>> expires(n);
  for (std::size_t j = 0; j < n; ++j)
    if (tags_[j] == Tag::call && ret_[j])
      expires[*ret_[j]].push_back(j);

  std::set<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && tags_[i - 1] == Tag::call)
      open.insert(i - 1);
    // variant keeps R(j) >= i, original keeps R(j) > i
    if (mode_ == QMode::variant) {
      if (i > 0)
        for (auto j : expires[i - 1])
          open.erase(j);
    } else {
      for (auto j : expires[i])
        open.erase(j);
    }
    if (!open.empty())
      call_[i] = *open.rbegin();
  }
}

void CallStructure::check(std::size_t i) const {
  if (i >= tags_.size())
    throw std::out_of_range("position " + std::to_string(i) + " outside word of length " +
                            std::to_string(tags_.size()));
}

std::optional<std::size_t> CallStructure::matching_return(std::size_t i) const {
  check(i);
  return ret_[i];
}

std::optional<std::size_t> CallStructure::innermost_call(std::size_t i) const {
  check(i);
  return call_[i];
}

std::optional<std::size_t> CallStructure::successor(std::size_t i, Successor kind) const {
  check(i);
  switch (kind) {
  case Successor::global:
    if (i + 1 < tags_.size())
      return i + 1;
    return std::nullopt;
  case Successor::abstract:
    if (tags_[i] == Tag::call)
      return ret_[i];
    if (i + 1 < tags_.size() && tags_[i + 1] != Tag::ret)
      return i + 1;
    return std::nullopt;
  case Successor::past:
    return call_[i];
  }
  return std::nullopt;
}

std::optional<std::size_t> matching_return(const ExtendedTrace& sigma, std::size_t i) {
  return CallStructure(sigma, QMode::variant).matching_return(i);
}

std::optional<std::size_t> innermost_call(const ExtendedTrace& sigma, std::size_t i, QMode mode) {
  return CallStructure(sigma, mode).innermost_call(i);
}

std::optional<std::size_t> successor(const ExtendedTrace& sigma, std::size_t i, Successor kind, QMode mode) {
  return CallStructure(sigma, mode).successor(i, kind);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using Table = std::vector<bool>;

class Evaluator {
public:
  Evaluator(const ExtendedTrace& sigma, QMode mode) : sigma_(sigma), calls_(sigma, mode), n_(sigma.size()) {}

  const Table& table(const CaretFormula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end())
      return it->second;
    Table t = compute(f);
    return memo_.emplace(f.id(), std::move(t)).first->second;
  }

private:
  Table step(const CaretFormula& f, Successor kind) {
    Table out(n_, false);
    const auto& a = table(f.operand());
    for (std::size_t i = 0; i < n_; ++i)
      if (auto s = calls_.successor(i, kind))
        out[i] = a[*s];
    return out;
  }

  // Successor chains move forward for g / a and backward for past, so the
  // table is filled in the order that makes out[succ(i)] available first.
  Table chain(const CaretFormula& f, Successor kind) {
    Table out(n_, false);
    const auto& a = table(f.lhs());
    const auto& b = table(f.rhs());
    auto at = [&](std::size_t i) {
      bool v = b[i];
      if (!v && a[i])
        if (auto s = calls_.successor(i, kind))
          v = out[*s];
      out[i] = v;
    };
    if (kind == Successor::past)
      for (std::size_t i = 0; i < n_; ++i)
        at(i);
    else
      for (std::size_t i = n_; i-- > 0;)
        at(i);
    return out;
  }

  Table compute(const CaretFormula& f) {
    Table out(n_, false);
    switch (f.op()) {
    case Op::bottom:
      return out;
    case Op::top:
      return Table(n_, true);
    case Op::atom:
      for (std::size_t i = 0; i < n_; ++i)
        out[i] = sigma_[i].base.holds(f.name());
      return out;
    case Op::negation: {
      const auto& a = table(f.operand());
      for (std::size_t i = 0; i < n_; ++i)
        out[i] = !a[i];
      return out;
    }
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication: {
      const auto& a = table(f.lhs());
      const auto& b = table(f.rhs());
      for (std::size_t i = 0; i < n_; ++i)
        out[i] = f.op() == Op::conjunction ? (a[i] && b[i]) : f.op() == Op::disjunction ? (a[i] || b[i]) : (!a[i] || b[i]);
      return out;
    }
    case Op::next_global:
      return step(f, Successor::global);
    case Op::next_abstract:
      return step(f, Successor::abstract);
    case Op::next_past:
      return step(f, Successor::past);
    case Op::until_global:
      return chain(f, Successor::global);
    case Op::until_abstract:
      return chain(f, Successor::abstract);
    case Op::until_past:
      return chain(f, Successor::past);
    case Op::finally_global: {
      const auto& a = table(f.operand());
      for (std::size_t i = n_; i-- > 0;)
        out[i] = a[i] || (i + 1 < n_ && out[i + 1]);
      return out;
    }
    case Op::globally_global: {
      const auto& a = table(f.operand());
      for (std::size_t i = n_; i-- > 0;)
        out[i] = a[i] && (i + 1 == n_ || out[i + 1]);
      return out;
    }
    }
    return out;
  }

  const ExtendedTrace& sigma_;
  CallStructure calls_;
  std::size_t n_;
  std::unordered_map<const void*, Table> memo_;
};

bool vacuous(const CaretFormula& f) {
  switch (f.op()) {
  case Op::top:
  case Op::globally_global:
    return true;
  case Op::negation:
    return !vacuous(f.operand());
  case Op::conjunction:
    return vacuous(f.lhs()) && vacuous(f.rhs());
  case Op::disjunction:
    return vacuous(f.lhs()) || vacuous(f.rhs());
  case Op::implication:
    return !vacuous(f.lhs()) || vacuous(f.rhs());
  default:
    return false;
  }
}

} // namespace

bool eval_caret(const CaretFormula& f, const ExtendedTrace& sigma, std::size_t i, QMode mode) {
  if (i >= sigma.size())
    throw std::out_of_range("position " + std::to_string(i) + " outside word of length " +
                            std::to_string(sigma.size()));
  return Evaluator(sigma, mode).table(f)[i];
}

bool eval_caret_trace(const CaretFormula& f, const ExtendedTrace& sigma, QMode mode) {
  if (sigma.empty())
    return vacuous(f);
  return eval_caret(f, sigma, 0, mode);
}

CaretFormula builtin_caret(SpecType s) {
  auto req = atom(std::string(req_atom));
  auto resp = atom(std::string(resp_atom));
  auto every_req_answered = globally(implication(req, next(Successor::abstract, resp)));
  switch (s) {
  case SpecType::rr3:
    return every_req_answered;
  case SpecType::rr4:
    return conjunction(every_req_answered, globally(implication(resp, next(Successor::past, req))));
  default:
    throw InvalidArgument(std::string(to_string(s)) + " is regular; use the LTL formula");
  }
}

} // namespace rrmon::caret
