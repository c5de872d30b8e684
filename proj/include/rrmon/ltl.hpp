#pragma once

#include "rrmon/spec_type.hpp"
#include "rrmon/trace.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rrmon::ltl {

enum class Op : std::uint8_t {
  bottom,
  top,
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
  next,         // X
  yesterday,    // Y
  until,        // U
  since,        // S
  release,      // R
  trigger,      // T
  finally,      // F
  globally,     // G
  once,         // O
  historically, // H
};

/// Immutable LTL formula with past operators. Derived operators are kept as
/// their own nodes so printing stays readable; evaluation gives them the
/// meaning of their primitive expansion.
class Formula {
public:
  Op op() const noexcept { return node_->op; }
  /// Atom name; empty for non-atoms.
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Formula>& args() const noexcept { return node_->args; }
  const Formula& operand() const { return node_->args.at(0); }
  const Formula& lhs() const { return node_->args.at(0); }
  const Formula& rhs() const { return node_->args.at(1); }

  /// Node identity, used as a memo key.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

  static Formula make(Op op, std::string name, std::vector<Formula> args);

private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> args;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Formula bottom();
Formula top();
Formula atom(std::string name);
Formula negation(Formula f);
Formula conjunction(Formula a, Formula b);
Formula disjunction(Formula a, Formula b);
Formula implication(Formula a, Formula b);
Formula next(Formula f);
Formula yesterday(Formula f);
Formula until(Formula a, Formula b);
Formula since(Formula a, Formula b);
Formula release(Formula a, Formula b);
Formula trigger(Formula a, Formula b);
Formula finally(Formula f);
Formula globally(Formula f);
Formula once(Formula f);
Formula historically(Formula f);

/// Concrete syntax: prefix G F X Y O H, infix U S R T (right associative),
/// `!`, `&`, `|`, `->`, constants `true` / `false`, parentheses.
/// Binding, tightest first: prefix operators, U S R T, &, |, ->.
Formula parse_formula(std::string_view text);

/// Prints a form that parse_formula maps back to an equal formula.
std::string to_string(const Formula& f);

/// Truth value of `f` at every position of `t`. Throws InvalidArgument if
/// `f` mentions an atom outside t.aps().
std::vector<bool> eval_all(const Formula& f, const Trace& t);

/// t, i ⊨ f over the finite trace. Throws std::out_of_range unless i < |t|.
bool eval(const Formula& f, const Trace& t, std::size_t i);

/// Whole-trace satisfaction: position 0, or on the empty trace every
/// quantifier ranges over no positions (G/R/H/T true, F/U/O/S/X/Y false).
bool eval_trace(const Formula& f, const Trace& t);

/// G(req -> F resp).
Formula baseline();

/// The LTL formalisation of RR1, RR2, RR5, RR6; NotRegular for RR3/RR4.
Formula builtin_formula(SpecType s);

/// Candidates for RR2 / RR5 on traces that may contain ∅ letters:
/// G(resp -> Y((!resp) S req)) & baseline, and G(req -> X((!req) U resp)).
Formula alternative_formula(SpecType s);

} // namespace rrmon::ltl
