#include "rrmon/trace.hpp"

#include "rrmon/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rrmon {

namespace {

const std::set<std::string>& req_resp_aps() {
  static const std::set<std::string> aps{std::string(req_atom), std::string(resp_atom)};
  return aps;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size())
        lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::optional<EventRole> parse_role(std::string_view s) {
  if (s == "req")
    return EventRole::req;
  if (s == "resp")
    return EventRole::resp;
  if (s == "other")
    return EventRole::other;
  return std::nullopt;
}

} // namespace

std::string_view to_string(Event e) noexcept { return e == Event::req ? req_atom : resp_atom; }

std::string to_string(const Word& w) {
  if (w.empty())
    return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "ε")
      continue;
    if (tok == req_atom)
      w.push_back(Event::req);
    else if (tok == resp_atom)
      w.push_back(Event::resp);
    else
      throw ParseError("unknown event '" + tok + "' in word", 0);
  }
  return w;
}

Letter::Letter(std::set<std::string> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_)
    if (a.empty())
      throw InvalidArgument("atomic proposition names must be nonempty");
}

Letter Letter::of(Event e) { return Letter({std::string(to_string(e))}); }

bool Letter::holds(std::string_view atom) const { return atoms_.find(std::string(atom)) != atoms_.end(); }

std::optional<Event> Letter::as_event() const {
  if (atoms_.size() != 1)
    return std::nullopt;
  const auto& a = *atoms_.begin();
  if (a == req_atom)
    return Event::req;
  if (a == resp_atom)
    return Event::resp;
  return std::nullopt;
}

Trace::Trace() : aps_(req_resp_aps()) {}

Trace::Trace(std::set<std::string> aps, std::vector<Letter> letters, bool strict)
    : aps_(std::move(aps)), letters_(std::move(letters)), strict_(strict) {
  for (const auto& p : aps_)
    if (p.empty())
      throw InvalidArgument("atomic proposition names must be nonempty");
  for (std::size_t i = 0; i < letters_.size(); ++i)
    for (const auto& a : letters_[i].atoms())
      if (!aps_.count(a))
        throw InvalidArgument("letter " + std::to_string(i) + " uses undeclared atom '" + a + "'");
  if (strict_) {
    if (aps_ != req_resp_aps())
      throw InvalidArgument("strict traces are over AP = {req, resp}");
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (!letters_[i].as_event())
        throw InvalidArgument("strict trace letter " + std::to_string(i) + " is not exactly {req} or {resp}");
  }
}

Trace Trace::from_word(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto e : w)
    letters.push_back(Letter::of(e));
  return Trace(req_resp_aps(), std::move(letters), true);
}

std::string_view to_string(Tag t) noexcept {
  switch (t) {
  case Tag::call:
    return "call";
  case Tag::internal:
    return "int";
  case Tag::ret:
    return "ret";
  }
  return "?";
}

std::string_view to_string(EventRole r) noexcept {
  switch (r) {
  case EventRole::req:
    return "req";
  case EventRole::resp:
    return "resp";
  case EventRole::other:
    return "other";
  }
  return "?";
}

EventMapping EventMapping::identity() {
  EventMapping m;
  m.add(std::string(req_atom), EventRole::req);
  m.add(std::string(resp_atom), EventRole::resp);
  return m;
}

EventMapping EventMapping::parse(std::string_view text) {
  EventMapping m;
  std::size_t lineno = 0;
  for (auto raw : split_lines(text)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    try {
      m.add(line);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("mapping line ") + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return m;
}

void EventMapping::add(std::string_view binding) {
  auto eq = binding.find('=');
  if (eq == std::string_view::npos)
    throw InvalidArgument("expected name=req|resp|other, got '" + std::string(binding) + "'");
  auto name = trim(binding.substr(0, eq));
  auto role_text = trim(binding.substr(eq + 1));
  auto role = parse_role(role_text);
  if (name.empty())
    throw InvalidArgument("empty event name in '" + std::string(binding) + "'");
  if (!role)
    throw InvalidArgument("unknown role '" + std::string(role_text) + "' (expected req, resp or other)");
  add(std::string(name), *role);
}

void EventMapping::add(std::string name, EventRole role) { roles_[std::move(name)] = role; }

std::optional<EventRole> EventMapping::find(std::string_view name) const {
  auto it = roles_.find(name);
  if (it == roles_.end())
    return std::nullopt;
  return it->second;
}

void EventMapping::require_complete() const {
  if (roles_.empty())
    throw InvalidArgument("event mapping is empty");
  bool has_req = false;
  bool has_resp = false;
  for (const auto& [name, role] : roles_) {
    has_req |= role == EventRole::req;
    has_resp |= role == EventRole::resp;
  }
  if (!has_req || !has_resp)
    throw InvalidArgument("event mapping must bind at least one name to req and one to resp");
}

std::optional<std::string> EventMapping::name_for(EventRole role) const {
  for (const auto& [name, r] : roles_)
    if (r == role)
      return name;
  return std::nullopt;
}

namespace {

Letter letter_for(std::string_view name, const EventMapping& mapping, bool strict, std::size_t lineno) {
  auto role = mapping.find(name);
  if (strict && (!role || *role == EventRole::other))
    throw ParseError("line " + std::to_string(lineno) + ": event '" + std::string(name) +
                         "' does not map to req or resp",
                     lineno);
  if (!role || *role == EventRole::other)
    return Letter();
  return Letter::of(*role == EventRole::req ? Event::req : Event::resp);
}

} // namespace

Trace parse_trace(std::string_view text, const EventMapping& mapping, const ParseOptions& options) {
  mapping.require_complete();
  std::vector<Letter> letters;
  std::size_t lineno = options.first_line - 1;
  for (auto raw : split_lines(text)) {
    ++lineno;
    auto line = trim(raw);
    if (line.empty())
      continue;
    if (options.format == TraceFormat::tokens) {
      if (line.front() == '#')
        continue;
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && is_space(line[pos]))
          ++pos;
        auto start = pos;
        while (pos < line.size() && !is_space(line[pos]))
          ++pos;
        if (pos > start)
          letters.push_back(letter_for(line.substr(start, pos - start), mapping, options.strict, lineno));
      }
      continue;
    }

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed JSON: " + e.what(), lineno);
    }
    if (!obj.is_object())
      throw ParseError("line " + std::to_string(lineno) + ": expected a JSON object", lineno);
    auto it = obj.find(options.field);
    if (it == obj.end() || !it->is_string())
      throw ParseError("line " + std::to_string(lineno) + ": missing string field '" + options.field + "'",
                       lineno);
    letters.push_back(letter_for(it->get<std::string>(), mapping, options.strict, lineno));
  }
  return Trace(req_resp_aps(), std::move(letters), options.strict);
}

std::string to_tokens(const Trace& t, const EventMapping& mapping) {
  auto req_name = mapping.name_for(EventRole::req);
  auto resp_name = mapping.name_for(EventRole::resp);
  if (!req_name || !resp_name)
    throw InvalidArgument("mapping has no name for req or resp");
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto e = t[i].as_event();
    if (!e)
      throw InvalidArgument("letter " + std::to_string(i) + " is not exactly {req} or {resp}");
    if (i)
      out += ' ';
    out += *e == Event::req ? *req_name : *resp_name;
  }
  return out;
}

namespace {

void require_req_resp(const Trace& t) {
  if (t.aps() != req_resp_aps())
    throw InvalidArgument("trace must be over AP = {req, resp}");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].holds(req_atom) && t[i].holds(resp_atom))
      throw InvalidArgument("letter " + std::to_string(i) + " has req and resp together");
}

} // namespace

Trace project_nonempty(const Trace& t) {
  require_req_resp(t);
  std::vector<Letter> kept;
  std::copy_if(t.letters().begin(), t.letters().end(), std::back_inserter(kept),
               [](const Letter& l) { return !l.empty(); });
  return Trace(req_resp_aps(), std::move(kept), true);
}

ExtendedTrace tag_extended(const Trace& t) {
  require_req_resp(t);
  ExtendedTrace out;
  out.reserve(t.size());
  for (const auto& l : t.letters()) {
    Tag tag = Tag::internal;
    if (l.holds(req_atom))
      tag = Tag::call;
    else if (l.holds(resp_atom))
      tag = Tag::ret;
    out.push_back({l, tag});
  }
  return out;
}

Word to_word(const Trace& t) {
  Word w;
  w.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto e = t[i].as_event();
    if (!e)
      throw InvalidArgument("letter " + std::to_string(i) + " is not exactly {req} or {resp}");
    w.push_back(*e);
  }
  return w;
}

} // namespace rrmon
