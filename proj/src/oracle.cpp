#include "rrmon/oracle.hpp"

#include <cstdint>
#include <functional>

namespace rrmon::oracle {

WordRange<Event> enumerate_words(std::size_t max_len) { return WordRange<Event>({Event::req, Event::resp}, max_len); }

std::optional<Correspondence> brute_correspondence(const Word& w, CorrespondenceKind kind) {
  if (w.size() > max_brute_force_length)
    throw InvalidArgument("brute-force search is limited to words of length " +
                          std::to_string(max_brute_force_length));
  std::vector<std::size_t> requests;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == Event::req)
      requests.push_back(i);

  std::vector<char> used(w.size(), 0);
  std::vector<std::size_t> chosen(requests.size());

  auto complete = [&] {
    if (kind == CorrespondenceKind::injective)
      return true;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] == Event::resp && !used[j])
        return false;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == requests.size())
      return complete();
    for (std::size_t j = requests[k] + 1; j < w.size(); ++j) {
      if (w[j] != Event::resp || used[j])
        continue;
      used[j] = 1;
      chosen[k] = j;
      if (search(k + 1))
        return true;
      used[j] = 0;
    }
    return false;
  };

  if (!search(0))
    return std::nullopt;
  Correspondence rho{{}, kind};
  for (std::size_t k = 0; k < requests.size(); ++k)
    rho.pairs.emplace(requests[k], chosen[k]);
  return rho;
}

namespace {

// Sets of word positions. Bit p means "a match can stand at position p";
// a symbol moves p to p + 1 when w[p] is that symbol.
struct SmallSet {
  std::uint64_t bits = 0;

  bool empty() const { return bits == 0; }
  SmallSet operator|(SmallSet o) const { return {bits | o.bits}; }
  SmallSet minus(SmallSet o) const { return {bits & ~o.bits}; }
  bool has(std::size_t p) const { return (bits >> p) & 1U; }
  static SmallSet single(std::size_t, std::size_t p) { return {std::uint64_t{1} << p}; }
  static SmallSet none(std::size_t) { return {}; }
};

struct LargeSet {
  std::vector<char> bits;

  bool empty() const {
    for (char b : bits)
      if (b)
        return false;
    return true;
  }
  LargeSet operator|(const LargeSet& o) const {
    LargeSet r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i)
      r.bits[i] = static_cast<char>(r.bits[i] | o.bits[i]);
    return r;
  }
  LargeSet minus(const LargeSet& o) const {
    LargeSet r = *this;
    for (std::size_t i = 0; i < bits.size(); ++i)
      r.bits[i] = static_cast<char>(r.bits[i] && !o.bits[i]);
    return r;
  }
  bool has(std::size_t p) const { return bits[p] != 0; }
  static LargeSet single(std::size_t n, std::size_t p) {
    LargeSet r = none(n);
    r.bits[p] = 1;
    return r;
  }
  static LargeSet none(std::size_t n) { return {std::vector<char>(n + 1, 0)}; }
};

template <class Set>
Set shift(const Word& w, const Set& from, Event e);

template <>
SmallSet shift(const Word& w, const SmallSet& from, Event e) {
  std::uint64_t letter = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p] == e)
      letter |= std::uint64_t{1} << p;
  return {(from.bits & letter) << 1};
}

template <>
LargeSet shift(const Word& w, const LargeSet& from, Event e) {
  auto r = LargeSet::none(w.size());
  for (std::size_t p = 0; p < w.size(); ++p)
    if (from.bits[p] && w[p] == e)
      r.bits[p + 1] = 1;
  return r;
}

template <class Set>
Set ends(const grammar::Regex& r, const Word& w, const Set& from) {
  using grammar::RegexOp;
  switch (r.op()) {
  case RegexOp::empty_set:
    return Set::none(w.size());
  case RegexOp::epsilon:
    return from;
  case RegexOp::symbol:
    return shift(w, from, r.symbol());
  case RegexOp::alternation:
    return ends(r.args()[0], w, from) | ends(r.args()[1], w, from);
  case RegexOp::concatenation:
    return ends(r.args()[1], w, ends(r.args()[0], w, from));
  case RegexOp::star:
  case RegexOp::plus: {
    // Kleene closure as a least fixed point over reached positions.
    Set start = r.op() == RegexOp::star ? from : ends(r.args()[0], w, from);
    Set reached = start;
    Set frontier = start;
    while (!frontier.empty()) {
      frontier = ends(r.args()[0], w, frontier).minus(reached);
      reached = reached | frontier;
    }
    return reached;
  }
  }
  return Set::none(w.size());
}

template <class Set>
bool holds(const grammar::Regex& r, const Word& w) {
  return ends(r, w, Set::single(w.size(), 0)).has(w.size());
}

const grammar::Regex& cached_regex(SpecType s) {
  static const auto regexes = [] {
    std::vector<std::optional<grammar::Regex>> v(6);
    for (auto t : all_spec_types)
      if (is_regular(t))
        v[static_cast<std::size_t>(t)].emplace(grammar::regex_for(t));
    return v;
  }();
  return *regexes[static_cast<std::size_t>(s)];
}

bool judge(SpecType s, const Word& w) {
  if (is_regular(s))
    return regex_holds(cached_regex(s), w);
  return counting_member(s, w);
}

} // namespace

bool regex_holds(const grammar::Regex& r, const Word& w) {
  if (w.size() < 63)
    return holds<SmallSet>(r, w);
  return holds<LargeSet>(r, w);
}

bool oracle_member(SpecType s, const Word& w) {
  switch (s) {
  case SpecType::rr3:
    return brute_correspondence(w, CorrespondenceKind::injective).has_value();
  case SpecType::rr4:
    return brute_correspondence(w, CorrespondenceKind::bijective).has_value();
  default:
    return regex_holds(cached_regex(s), w);
  }
}

bool extendable(SpecType s, const Word& prefix, std::size_t depth) {
  if (depth > 30)
    throw InvalidArgument("extension depth is limited to 30");
  Word w = prefix;
  for (std::size_t d = 0; d <= depth; ++d) {
    w.resize(prefix.size() + d);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
      // Most significant bit first, req before resp: length-lex order.
      for (std::size_t k = 0; k < d; ++k)
        w[prefix.size() + k] = ((code >> (d - 1 - k)) & 1U) ? Event::resp : Event::req;
      if (judge(s, w))
        return true;
    }
  }
  return false;
}

} // namespace rrmon::oracle
