#pragma once

#include "rrmon/automata.hpp"
#include "rrmon/spec_type.hpp"
#include "rrmon/trace.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rrmon {

/// Independent deciders available for a spec type.
enum class Formalism : std::uint8_t { grammar, logic, automaton, counting, oracle };

std::string_view to_string(Formalism f) noexcept;
std::optional<Formalism> parse_formalism(std::string_view name) noexcept;

/// counting exists only for RR3 / RR4; every other pair is supported.
bool supports(SpecType s, Formalism f) noexcept;
std::vector<Formalism> formalisms_for(SpecType s);

/// RR3: every suffix has #req <= #resp. RR4: every prefix has
/// #req >= #resp and the totals agree. Single pass.
bool counting_member(SpecType s, const Word& w);

/// Membership decided by the chosen engine: regex / CYK, LTL / CaRet,
/// DFA / one-counter automaton, counting, or brute force.
bool member(SpecType s, const Word& w, Formalism f);

enum class CorrespondenceKind : std::uint8_t { injective, bijective };

/// Forward, value-distinct map from request to response positions.
struct Correspondence {
  std::map<std::size_t, std::size_t> pairs;
  CorrespondenceKind kind = CorrespondenceKind::injective;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

/// Stack construction: each response binds the most recent pending request.
/// Injective mode ignores responses with nothing pending, bijective mode
/// fails on them; both fail if a request is left pending.
std::optional<Correspondence> build_correspondence(const Word& w, CorrespondenceKind kind);

/// Checks the correspondence conditions against `w` without assuming how the
/// correspondence was produced.
bool verify_correspondence(const Word& w, const Correspondence& rho);

/// `i->j` links ordered by response position.
std::string format_links(const Correspondence& rho);

/// Anticipatory verdict for a trace prefix.
struct Verdict {
  bool in_language = false;
  /// No extension can be accepted any more. Absorbing.
  bool doomed = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict verdict(SpecType s, const Word& prefix);

/// Online monitor: one automaton configuration per session.
class Monitor {
public:
  explicit Monitor(SpecType s);

  Verdict feed(Event e);
  Verdict current() const;
  std::size_t consumed() const noexcept { return consumed_; }

private:
  automata::Machine machine_;
  automata::Config config_;
  std::size_t consumed_ = 0;
};

/// Earliest human-readable reason `w` violates `s`, or nullopt if it does not.
std::optional<std::string> diagnose(SpecType s, const Word& w);

/// Answers to the three classification questions. c2 is asked only when
/// c1 is yes.
struct Answers {
  bool c1 = false;
  std::optional<bool> c2;
  bool c3 = false;
};

/// Leaf of the decision tree. Throws InvalidArgument if c2 is present
/// exactly when c1 is no.
SpecType classify(const Answers& a);

/// Types implied by `s` (always contains `s` itself).
std::set<SpecType> implications(SpecType s);

struct SpecInfo {
  std::string_view summary;
  std::string_view example;
};

const SpecInfo& describe(SpecType s);

} // namespace rrmon
