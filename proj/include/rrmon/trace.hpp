#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rrmon {

inline constexpr std::string_view req_atom = "req";
inline constexpr std::string_view resp_atom = "resp";

/// A letter of a strict trace: exactly one of req / resp holds.
enum class Event : std::uint8_t { req, resp };

/// Strict word over {req, resp}. This is what every decider consumes.
using Word = std::vector<Event>;

std::string_view to_string(Event e) noexcept;

/// Space separated event names; the empty word prints as "ε".
std::string to_string(const Word& w);

/// Inverse of to_string(Word). Accepts "", "ε", or whitespace separated
/// "req"/"resp" tokens.
Word parse_word(std::string_view text);

/// A set of atomic propositions holding at one position.
class Letter {
public:
  Letter() = default;
  explicit Letter(std::set<std::string> atoms);

  static Letter of(Event e);

  const std::set<std::string>& atoms() const noexcept { return atoms_; }
  bool holds(std::string_view atom) const;
  bool empty() const noexcept { return atoms_.empty(); }

  /// The event this letter denotes, if it is exactly {req} or {resp}.
  std::optional<Event> as_event() const;

  friend bool operator==(const Letter&, const Letter&) = default;

private:
  std::set<std::string> atoms_;
};

/// Finite trace over 2^AP. Immutable once built; the constructor checks
/// that every atom is declared and, in strict mode, that every letter is
/// exactly {req} or {resp} over AP = {req, resp}.
class Trace {
public:
  /// Empty, non-strict trace over {req, resp}.
  Trace();
  Trace(std::set<std::string> aps, std::vector<Letter> letters, bool strict);

  static Trace from_word(const Word& w);

  const std::set<std::string>& aps() const noexcept { return aps_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool strict() const noexcept { return strict_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Trace&, const Trace&) = default;

private:
  std::set<std::string> aps_;
  std::vector<Letter> letters_;
  bool strict_ = false;
};

/// Call / internal / return classification of a position.
enum class Tag : std::uint8_t { call, internal, ret };

std::string_view to_string(Tag t) noexcept;

struct ExtendedLetter {
  Letter base;
  Tag tag = Tag::internal;

  friend bool operator==(const ExtendedLetter&, const ExtendedLetter&) = default;
};

using ExtendedTrace = std::vector<ExtendedLetter>;

enum class EventRole : std::uint8_t { req, resp, other };

std::string_view to_string(EventRole r) noexcept;

/// Maps raw event names found in logs onto req / resp / other.
class EventMapping {
public:
  EventMapping() = default;

  /// The mapping req=req, resp=resp.
  static EventMapping identity();

  /// Reads `name=req|resp|other` lines; blank lines and `#` comments are
  /// skipped.
  static EventMapping parse(std::string_view text);

  /// Adds one `name=role` binding (the CLI `--map` form).
  void add(std::string_view binding);
  void add(std::string name, EventRole role);

  std::optional<EventRole> find(std::string_view name) const;
  bool empty() const noexcept { return roles_.empty(); }

  /// Throws InvalidArgument unless at least one name maps to req and one to
  /// resp.
  void require_complete() const;

  /// First name (in lexicographic order) bound to the given role.
  std::optional<std::string> name_for(EventRole role) const;

  const std::map<std::string, EventRole, std::less<>>& roles() const noexcept { return roles_; }

private:
  std::map<std::string, EventRole, std::less<>> roles_;
};

enum class TraceFormat : std::uint8_t { tokens, jsonl };

struct ParseOptions {
  TraceFormat format = TraceFormat::tokens;
  /// JSONL field that carries the event name.
  std::string field = "event";
  /// Reject events that do not map to req or resp.
  bool strict = false;
  /// Number reported for the first line of `text`.
  std::size_t first_line = 1;
};

/// Builds a trace from a token file or JSONL log. Malformed lines and (in
/// strict mode) unmapped events raise ParseError carrying the line number.
Trace parse_trace(std::string_view text, const EventMapping& mapping, const ParseOptions& options = {});

/// Renders a strict trace as tokens using the first name bound to each role.
std::string to_tokens(const Trace& t, const EventMapping& mapping);

/// Drops ∅ letters. Rejects letters where req and resp hold together.
Trace project_nonempty(const Trace& t);

/// {req} -> call, {resp} -> return, ∅ -> internal.
ExtendedTrace tag_extended(const Trace& t);

/// The word of a trace whose letters are all exactly {req} or {resp}.
Word to_word(const Trace& t);

} // namespace rrmon
