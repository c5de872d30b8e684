#pragma once

#include "rrmon/spec_type.hpp"
#include "rrmon/trace.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rrmon::caret {

/// Which innermost-call correspondence to use. `original` keeps a pending
/// call j for position i only when R(j) > i; `variant` also keeps it when
/// R(j) == i, which makes Q and R mutually inverse on calls and returns.
enum class QMode : std::uint8_t { original, variant };

/// g: i+1.  a: matching return of a call, else i+1 unless that is a return.
/// past: the innermost call Q(i).
enum class Successor : std::uint8_t { global, abstract, past };

enum class Op : std::uint8_t {
  bottom,
  top,
  atom,
  negation,
  conjunction,
  disjunction,
  implication,
  next_global,
  until_global,
  next_abstract,
  until_abstract,
  next_past,
  until_past,
  globally_global,
  finally_global,
};

class CaretFormula {
public:
  Op op() const noexcept { return node_->op; }
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<CaretFormula>& args() const noexcept { return node_->args; }
  const CaretFormula& operand() const { return node_->args.at(0); }
  const CaretFormula& lhs() const { return node_->args.at(0); }
  const CaretFormula& rhs() const { return node_->args.at(1); }
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const CaretFormula& a, const CaretFormula& b);

  static CaretFormula make(Op op, std::string name, std::vector<CaretFormula> args);

private:
  struct Node {
    Op op;
    std::string name;
    std::vector<CaretFormula> args;
  };
  explicit CaretFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

CaretFormula top();
CaretFormula bottom();
CaretFormula atom(std::string name);
CaretFormula negation(CaretFormula f);
CaretFormula conjunction(CaretFormula a, CaretFormula b);
CaretFormula disjunction(CaretFormula a, CaretFormula b);
CaretFormula implication(CaretFormula a, CaretFormula b);
CaretFormula next(Successor kind, CaretFormula f);
CaretFormula until(Successor kind, CaretFormula a, CaretFormula b);
CaretFormula globally(CaretFormula f);
CaretFormula finally(CaretFormula f);

/// `Xg Xa Xp` prefix, `Ug Ua Up` infix (right associative), `Gg Fg`
/// prefix; atoms, constants and boolean connectives as in the LTL syntax.
CaretFormula parse_caret(std::string_view text);

std::string to_string(const CaretFormula& f);

/// Matching-return and innermost-call tables of one tagged word, computed
/// once in O(n log n).
class CallStructure {
public:
  CallStructure(const std::vector<Tag>& tags, QMode mode);
  explicit CallStructure(const ExtendedTrace& sigma, QMode mode = QMode::variant);

  std::size_t size() const noexcept { return tags_.size(); }
  QMode mode() const noexcept { return mode_; }

  std::optional<std::size_t> matching_return(std::size_t i) const;
  std::optional<std::size_t> innermost_call(std::size_t i) const;
  std::optional<std::size_t> successor(std::size_t i, Successor kind) const;

private:
  void check(std::size_t i) const;

  std::vector<Tag> tags_;
  QMode mode_;
  std::vector<std::optional<std::size_t>> ret_;
  std::vector<std::optional<std::size_t>> call_;
};

std::vector<Tag> tags_of(const ExtendedTrace& sigma);

/// R_σ(i): the first return after i with as many calls as returns strictly
/// in between. Throws std::out_of_range unless i < |σ|.
std::optional<std::size_t> matching_return(const ExtendedTrace& sigma, std::size_t i);

/// Q_σ(i): the greatest call j < i whose matching return is at or after i
/// (variant; strictly after i for original) or undefined.
std::optional<std::size_t> innermost_call(const ExtendedTrace& sigma, std::size_t i, QMode mode);

std::optional<std::size_t> successor(const ExtendedTrace& sigma, std::size_t i, Successor kind, QMode mode);

/// σ, i ⊨ f. Throws std::out_of_range unless i < |σ|.
bool eval_caret(const CaretFormula& f, const ExtendedTrace& sigma, std::size_t i, QMode mode = QMode::variant);

/// Position 0, or vacuous truth on the empty word (Gg true; Fg, U*, X*
/// and atoms false).
bool eval_caret_trace(const CaretFormula& f, const ExtendedTrace& sigma, QMode mode = QMode::variant);

/// RR3: Gg(req -> Xa resp).  RR4: Gg(req -> Xa resp) & Gg(resp -> Xp req).
/// Both are meant for variant mode.
CaretFormula builtin_caret(SpecType s);

} // namespace rrmon::caret
