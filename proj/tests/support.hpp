#pragma once

// Test-only reference implementations. They follow the textbook definitions
// literally (quantifiers, counting loops) and share nothing with src/.

#include "rrmon/caret.hpp"
#include "rrmon/ltl.hpp"
#include "rrmon/trace.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rrtest {

using namespace rrmon;

inline Word w(std::string_view text) { return parse_word(text); }

/// All words over {req, resp} of exactly length n, in length-lex order.
inline std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    Word x(n);
    for (std::size_t k = 0; k < n; ++k)
      x[k] = ((code >> (n - 1 - k)) & 1U) ? Event::resp : Event::req;
    out.push_back(std::move(x));
  }
  return out;
}

inline std::vector<Word> words_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& x : words_of_length(k))
      out.push_back(std::move(x));
  return out;
}

/// Traces over {∅, {req}, {resp}} of length <= n.
inline std::vector<Trace> general_traces_up_to(std::size_t n) {
  std::vector<Trace> out;
  std::vector<Letter> alphabet{Letter(), Letter::of(Event::req), Letter::of(Event::resp)};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<Letter>> next;
    for (auto& letters : layer) {
      out.emplace_back(std::set<std::string>{"req", "resp"}, letters, false);
      if (k < n)
        for (const auto& a : alphabet) {
          auto grown = letters;
          grown.push_back(a);
          next.push_back(std::move(grown));
        }
    }
    layer = std::move(next);
  }
  return out;
}

// ---- LTL by quantifiers --------------------------------------------------

inline bool naive_eval(const ltl::Formula& f, const Trace& t, std::size_t i) {
  using ltl::Op;
  const std::size_t n = t.size();
  auto at = [&](const ltl::Formula& g, std::size_t k) { return naive_eval(g, t, k); };
  switch (f.op()) {
  case Op::bottom:
    return false;
  case Op::top:
    return true;
  case Op::atom:
    return t[i].holds(f.name());
  case Op::negation:
    return !at(f.operand(), i);
  case Op::conjunction:
    return at(f.lhs(), i) && at(f.rhs(), i);
  case Op::disjunction:
    return at(f.lhs(), i) || at(f.rhs(), i);
  case Op::implication:
    return !at(f.lhs(), i) || at(f.rhs(), i);
  case Op::next:
    return i + 1 < n && at(f.operand(), i + 1);
  case Op::yesterday:
    return i > 0 && at(f.operand(), i - 1);
  case Op::until:
    for (std::size_t j = i; j < n; ++j) {
      bool before = true;
      for (std::size_t k = i; k < j; ++k)
        before = before && at(f.lhs(), k);
      if (at(f.rhs(), j) && before)
        return true;
    }
    return false;
  case Op::since:
    for (std::size_t j = 0; j <= i; ++j) {
      bool after = true;
      for (std::size_t k = j + 1; k <= i; ++k)
        after = after && at(f.lhs(), k);
      if (at(f.rhs(), j) && after)
        return true;
    }
    return false;
  case Op::release:
    for (std::size_t j = i; j < n; ++j) {
      bool released = false;
      for (std::size_t k = i; k < j; ++k)
        released = released || at(f.lhs(), k);
      if (!at(f.rhs(), j) && !released)
        return false;
    }
    return true;
  case Op::trigger:
    for (std::size_t j = 0; j <= i; ++j) {
      bool released = false;
      for (std::size_t k = j + 1; k <= i; ++k)
        released = released || at(f.lhs(), k);
      if (!at(f.rhs(), j) && !released)
        return false;
    }
    return true;
  case Op::finally:
    for (std::size_t j = i; j < n; ++j)
      if (at(f.operand(), j))
        return true;
    return false;
  case Op::globally:
    for (std::size_t j = i; j < n; ++j)
      if (!at(f.operand(), j))
        return false;
    return true;
  case Op::once:
    for (std::size_t j = 0; j <= i; ++j)
      if (at(f.operand(), j))
        return true;
    return false;
  case Op::historically:
    for (std::size_t j = 0; j <= i; ++j)
      if (!at(f.operand(), j))
        return false;
    return true;
  }
  return false;
}

/// Random formula over the given atoms, depth-bounded.
inline ltl::Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 16);
  int c = pick(rng);
  auto sub = [&] { return random_formula(rng, atoms, depth - 1); };
  switch (c) {
  case 0:
    return ltl::top();
  case 1:
    return ltl::bottom();
  case 2:
  case 3:
    return ltl::atom(atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)]);
  case 4:
    return ltl::negation(sub());
  case 5:
    return ltl::conjunction(sub(), sub());
  case 6:
    return ltl::disjunction(sub(), sub());
  case 7:
    return ltl::implication(sub(), sub());
  case 8:
    return ltl::next(sub());
  case 9:
    return ltl::yesterday(sub());
  case 10:
    return ltl::until(sub(), sub());
  case 11:
    return ltl::since(sub(), sub());
  case 12:
    return ltl::release(sub(), sub());
  case 13:
    return ltl::trigger(sub(), sub());
  case 14:
    return ltl::finally(sub());
  case 15:
    return ltl::globally(sub());
  default:
    return c % 2 ? ltl::once(sub()) : ltl::historically(sub());
  }
}

// ---- call/return correspondences by counting -----------------------------

inline std::optional<std::size_t> naive_R(const std::vector<Tag>& s, std::size_t i) {
  for (std::size_t j = i + 1; j < s.size(); ++j) {
    if (s[j] != Tag::ret)
      continue;
    long calls = 0, rets = 0;
    for (std::size_t k = i + 1; k < j; ++k) {
      calls += s[k] == Tag::call;
      rets += s[k] == Tag::ret;
    }
    if (calls == rets)
      return j;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> naive_Q(const std::vector<Tag>& s, std::size_t i, caret::QMode mode) {
  for (std::size_t j = i; j-- > 0;) {
    if (s[j] != Tag::call)
      continue;
    auto r = naive_R(s, j);
    if (!r || *r > i || (mode == caret::QMode::variant && *r == i))
      return j;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> naive_succ(const std::vector<Tag>& s, std::size_t i, caret::Successor kind,
                                             caret::QMode mode) {
  switch (kind) {
  case caret::Successor::global:
    return i + 1 < s.size() ? std::optional<std::size_t>(i + 1) : std::nullopt;
  case caret::Successor::abstract:
    if (s[i] == Tag::call)
      return naive_R(s, i);
    if (i + 1 < s.size() && s[i + 1] != Tag::ret)
      return i + 1;
    return std::nullopt;
  case caret::Successor::past:
    return naive_Q(s, i, mode);
  }
  return std::nullopt;
}

/// CaRet by explicit chains: U holds iff some finite successor chain from i
/// ends in ψ with φ at every earlier link.
inline bool naive_caret(const caret::CaretFormula& f, const ExtendedTrace& s, std::size_t i, caret::QMode mode) {
  using caret::Op;
  using caret::Successor;
  std::vector<Tag> tags;
  for (const auto& l : s)
    tags.push_back(l.tag);
  auto at = [&](const caret::CaretFormula& g, std::size_t k) { return naive_caret(g, s, k, mode); };
  auto next = [&](Successor kind) {
    auto j = naive_succ(tags, i, kind, mode);
    return j && at(f.operand(), *j);
  };
  auto until = [&](Successor kind, const caret::CaretFormula& a, const caret::CaretFormula& b) {
    std::optional<std::size_t> cur = i;
    while (cur) {
      if (at(b, *cur))
        return true;
      if (!at(a, *cur))
        return false;
      cur = naive_succ(tags, *cur, kind, mode);
    }
    return false;
  };
  switch (f.op()) {
  case Op::bottom:
    return false;
  case Op::top:
    return true;
  case Op::atom:
    return s[i].base.holds(f.name());
  case Op::negation:
    return !at(f.operand(), i);
  case Op::conjunction:
    return at(f.lhs(), i) && at(f.rhs(), i);
  case Op::disjunction:
    return at(f.lhs(), i) || at(f.rhs(), i);
  case Op::implication:
    return !at(f.lhs(), i) || at(f.rhs(), i);
  case Op::next_global:
    return next(Successor::global);
  case Op::next_abstract:
    return next(Successor::abstract);
  case Op::next_past:
    return next(Successor::past);
  case Op::until_global:
    return until(Successor::global, f.lhs(), f.rhs());
  case Op::until_abstract:
    return until(Successor::abstract, f.lhs(), f.rhs());
  case Op::until_past:
    return until(Successor::past, f.lhs(), f.rhs());
  case Op::finally_global:
    for (std::size_t j = i; j < s.size(); ++j)
      if (at(f.operand(), j))
        return true;
    return false;
  case Op::globally_global:
    for (std::size_t j = i; j < s.size(); ++j)
      if (!at(f.operand(), j))
        return false;
    return true;
  }
  return false;
}

inline caret::CaretFormula random_caret(std::mt19937& rng, int depth) {
  using caret::Successor;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 13);
  auto sub = [&] { return random_caret(rng, depth - 1); };
  const Successor kinds[] = {Successor::global, Successor::abstract, Successor::past};
  auto kind = [&] { return kinds[std::uniform_int_distribution<int>(0, 2)(rng)]; };
  switch (pick(rng)) {
  case 0:
    return caret::top();
  case 1:
    return caret::atom("req");
  case 2:
    return caret::atom("resp");
  case 3:
    return caret::negation(sub());
  case 4:
    return caret::conjunction(sub(), sub());
  case 5:
    return caret::disjunction(sub(), sub());
  case 6:
    return caret::implication(sub(), sub());
  case 7:
  case 8:
    return caret::next(kind(), sub());
  case 9:
  case 10:
    return caret::until(kind(), sub(), sub());
  case 11:
    return caret::globally(sub());
  case 12:
    return caret::finally(sub());
  default:
    return caret::bottom();
  }
}

/// Every tag sequence over {call, internal, ret} of length exactly n.
inline std::vector<std::vector<Tag>> tag_words(std::size_t n) {
  std::vector<std::vector<Tag>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Tag>> next;
    for (const auto& t : out)
      for (auto tag : {Tag::call, Tag::internal, Tag::ret}) {
        auto grown = t;
        grown.push_back(tag);
        next.push_back(std::move(grown));
      }
    out = std::move(next);
  }
  return out;
}

inline ExtendedTrace extended(const std::vector<Tag>& tags) {
  ExtendedTrace out;
  for (auto t : tags) {
    Letter l = t == Tag::call ? Letter::of(Event::req) : t == Tag::ret ? Letter::of(Event::resp) : Letter();
    out.push_back({l, t});
  }
  return out;
}

} // namespace rrtest
