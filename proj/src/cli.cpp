#include "rrmon/cli.hpp"

#include "rrmon/error.hpp"
#include "rrmon/ltl.hpp"
#include "rrmon/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rrmon::cli {

namespace {

using nlohmann::json;

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* flag(bool b) { return b ? "true" : "false"; }

std::string word_text(const Word& w) { return to_string(w); }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto i : v) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(i);
  }
  return s;
}

std::optional<bool> parse_answer(std::string token) {
  std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) { return std::tolower(c); });
  if (token == "y" || token == "yes")
    return true;
  if (token == "n" || token == "no")
    return false;
  return std::nullopt;
}

constexpr const char* question_c1 = "May several requests be pending at the same time?";
constexpr const char* question_c2 = "Does one response settle every request pending before it?";
constexpr const char* question_c3 = "May a response occur while no request is pending?";

} // namespace

std::size_t length_cap() {
  const char* env = std::getenv("RRMON_MAX_LEN");
  if (!env || !*env)
    return max_cli_length;
  std::size_t cap = 0;
  for (const char* p = env; *p; ++p) {
    if (!std::isdigit(static_cast<unsigned char>(*p)) || cap > 1000)
      throw InvalidArgument(std::string("RRMON_MAX_LEN is not a length: ") + env);
    cap = cap * 10 + static_cast<std::size_t>(*p - '0');
  }
  return std::min(cap, max_cli_length);
}

int cmd_check(const CheckRequest& req, std::istream& in, std::ostream& out, std::ostream& err) {
  if (req.spec.has_value() == req.formula.has_value()) {
    err << "error: give exactly one of --spec and --formula\n";
    return usage;
  }
  try {
    if (req.formula) {
      auto f = ltl::parse_formula(*req.formula);
      auto trace = parse_trace(read_all(in), req.mapping, req.parse);
      bool ok_ = ltl::eval_trace(f, trace);
      if (req.json)
        out << json{{"formula", ltl::to_string(f)}, {"length", trace.size()}, {"satisfied", ok_}}.dump() << '\n';
      else
        out << (ok_ ? "SATISFIED" : "VIOLATED") << '\n';
      return ok_ ? ok : negative;
    }

    const SpecType spec = *req.spec;
    if (!supports(spec, req.formalism)) {
      err << "error: formalism " << to_string(req.formalism) << " is not available for " << to_string(spec) << '\n';
      return usage;
    }

    if (req.stream) {
      // Verdicts come from the online monitor; non-req/resp events leave it
      // untouched and repeat the current verdict.
      Monitor monitor(spec);
      std::size_t index = 0;
      std::size_t lineno = 0;
      std::string line;
      auto opts = req.parse;
      while (std::getline(in, line)) {
        ++lineno;
        opts.first_line = lineno;
        auto trace = parse_trace(line, req.mapping, opts);
        for (const auto& letter : trace.letters()) {
          auto e = letter.as_event();
          auto v = e ? monitor.feed(*e) : monitor.current();
          std::string name = e ? std::string(to_string(*e)) : "other";
          if (req.json)
            out << json{{"index", index}, {"event", name}, {"in_language", v.in_language}, {"doomed", v.doomed}}.dump()
                << '\n';
          else
            out << index << ' ' << name << ' ' << flag(v.in_language) << ' ' << flag(v.doomed) << '\n';
          out.flush();
          ++index;
        }
      }
      return monitor.current().in_language ? ok : negative;
    }

    auto trace = parse_trace(read_all(in), req.mapping, req.parse);
    Word w = to_word(project_nonempty(trace));
    bool sat = member(spec, w, req.formalism);
    std::optional<std::string> why = sat ? std::nullopt : diagnose(spec, w);
    if (req.json) {
      json j{{"spec", to_string(spec)},
             {"formalism", to_string(req.formalism)},
             {"length", w.size()},
             {"verdict", sat ? "SATISFIED" : "VIOLATED"}};
      if (why)
        j["diagnostic"] = *why;
      out << j.dump() << '\n';
    } else {
      out << (sat ? "SATISFIED" : "VIOLATED") << '\n';
      if (why)
        out << *why << '\n';
    }
    return sat ? ok : negative;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

int cmd_classify(const std::string& answers, bool json_out, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  std::vector<bool> given;
  if (!answers.empty()) {
    std::stringstream ss(answers);
    std::string token;
    while (std::getline(ss, token, ',')) {
      auto a = parse_answer(token);
      if (!a) {
        err << "error: invalid answer '" << token << "' (expected y or n)\n";
        return usage;
      }
      given.push_back(*a);
    }
    const std::size_t expected = !given.empty() && given[0] ? 3 : 2;
    if (given.size() != expected) {
      err << "error: expected " << expected << " answers" << (expected == 2 ? " (C2 is skipped when C1 is n)" : "")
          << '\n';
      return usage;
    }
  } else {
    auto ask = [&](const char* q) -> std::optional<bool> {
      for (;;) {
        out << q << " [y/n] " << std::flush;
        std::string line;
        if (!std::getline(in, line))
          return std::nullopt;
        if (auto a = parse_answer(line))
          return a;
        out << "please answer y or n\n";
      }
    };
    for (const char* q : {question_c1, question_c2, question_c3}) {
      if (q == question_c2 && !given[0])
        continue;
      auto a = ask(q);
      if (!a) {
        err << "error: input ended before all questions were answered\n";
        return usage;
      }
      given.push_back(*a);
    }
  }

  Answers a;
  a.c1 = given[0];
  if (a.c1) {
    a.c2 = given[1];
    a.c3 = given[2];
  } else {
    a.c3 = given[1];
  }
  const SpecType s = classify(a);
  const auto& info = describe(s);
  if (json_out) {
    out << json{{"type", to_string(s)}, {"summary", info.summary}, {"example", info.example}}.dump() << '\n';
  } else {
    out << to_string(s) << '\n' << info.summary << '\n' << "example: " << info.example << '\n';
  }
  return ok;
}

int cmd_witness(SpecType spec, const ParseOptions& parse, const EventMapping& mapping, bool json_out,
                std::istream& in, std::ostream& out, std::ostream& err) {
  if (is_regular(spec)) {
    err << "error: witnesses exist only for RR3 and RR4\n";
    return usage;
  }
  Word w;
  try {
    auto opts = parse;
    opts.strict = true;
    w = to_word(parse_trace(read_all(in), mapping, opts));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  const auto kind = spec == SpecType::rr3 ? CorrespondenceKind::injective : CorrespondenceKind::bijective;
  // Greedy stack pass; records what is left over when no witness exists.
  std::vector<std::size_t> pending;
  std::vector<std::size_t> spare;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Event::req)
      pending.push_back(i);
    else if (pending.empty())
      spare.push_back(i);
    else
      pending.pop_back();
  }
  auto rho = build_correspondence(w, kind);

  if (json_out) {
    json j{{"spec", to_string(spec)}, {"found", rho.has_value()}};
    if (rho) {
      json links = json::array();
      std::vector<std::pair<std::size_t, std::size_t>> v(rho->pairs.begin(), rho->pairs.end());
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
      for (const auto& [i, k] : v)
        links.push_back({i, k});
      j["links"] = links;
    }
    j["unmatched_requests"] = pending;
    j["unmatched_responses"] = spare;
    out << j.dump() << '\n';
    return rho ? ok : negative;
  }

  if (rho) {
    auto text = format_links(*rho);
    out << (text.empty() ? "(no links)" : text) << '\n';
    if (!spare.empty())
      out << "unmatched responses (allowed): " << join(spare) << '\n';
    return ok;
  }
  out << "no " << (kind == CorrespondenceKind::injective ? "injective" : "bijective") << " correspondence\n";
  if (!pending.empty())
    out << "unmatched requests: " << join(pending) << '\n';
  if (kind == CorrespondenceKind::bijective && !spare.empty())
    out << "unmatched responses: " << join(spare) << '\n';
  return negative;
}

int cmd_crosscheck(std::size_t max_len, const std::vector<SpecType>& specs, const std::vector<Formalism>& formalisms,
                   bool json_out, std::ostream& out, std::ostream& err) {
  std::size_t cap = 0;
  try {
    cap = length_cap();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  if (max_len > cap) {
    err << "error: --max-len " << max_len << " exceeds the limit " << cap << '\n';
    return usage;
  }

  bool all_agree = true;
  for (auto s : specs) {
    std::vector<Formalism> used;
    for (auto f : formalisms.empty() ? formalisms_for(s) : formalisms)
      if (supports(s, f))
        used.push_back(f);
    if (used.empty()) {
      err << "error: no selected formalism applies to " << to_string(s) << '\n';
      return usage;
    }

    std::size_t words = 0;
    std::size_t members = 0;
    std::optional<Word> bad;
    std::vector<bool> bad_answers;
    for (const auto& w : oracle::enumerate_words(max_len)) {
      ++words;
      std::vector<bool> answers;
      for (auto f : used)
        answers.push_back(member(s, w, f));
      if (std::adjacent_find(answers.begin(), answers.end(), std::not_equal_to<>()) != answers.end()) {
        if (!bad) {
          bad = w;
          bad_answers = answers;
        }
        continue;
      }
      if (answers.front())
        ++members;
    }
    all_agree = all_agree && !bad;

    std::string names;
    for (auto f : used)
      names += (names.empty() ? "" : ",") + std::string(to_string(f));
    if (json_out) {
      json j{{"spec", to_string(s)}, {"max_len", max_len}, {"words", words},
             {"members", members},   {"formalisms", names}, {"agree", !bad}};
      if (bad) {
        j["counterexample"] = word_text(*bad);
        json verdicts = json::object();
        for (std::size_t k = 0; k < used.size(); ++k)
          verdicts[std::string(to_string(used[k]))] = static_cast<bool>(bad_answers[k]);
        j["verdicts"] = verdicts;
      }
      out << j.dump() << '\n';
      continue;
    }
    out << to_string(s) << ": " << members << " members among " << words << " words up to length " << max_len
        << " [" << names << "] " << (bad ? "DISAGREE" : "agree") << '\n';
    if (bad) {
      out << "  first disagreement on \"" << word_text(*bad) << "\":";
      for (std::size_t k = 0; k < used.size(); ++k)
        out << ' ' << to_string(used[k]) << '=' << flag(bad_answers[k]);
      out << '\n';
    }
  }
  return all_agree ? ok : negative;
}

int cmd_enumerate(SpecType spec, std::size_t max_len, Formalism formalism, bool json_out, std::ostream& out,
                  std::ostream& err) {
  std::size_t cap = 0;
  try {
    cap = length_cap();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  if (max_len > cap) {
    err << "error: --max-len " << max_len << " exceeds the limit " << cap << '\n';
    return usage;
  }
  if (!supports(spec, formalism)) {
    err << "error: formalism " << to_string(formalism) << " is not available for " << to_string(spec) << '\n';
    return usage;
  }
  for (const auto& w : oracle::enumerate_words(max_len)) {
    if (!member(spec, w, formalism))
      continue;
    if (json_out)
      out << json{{"word", word_text(w)}, {"length", w.size()}}.dump() << '\n';
    else
      out << word_text(w) << '\n';
  }
  return ok;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monitor and explore the request-response specification types RR1-RR6", "rrmon"};
  app.require_subcommand(1);

  std::string spec_name;
  std::vector<std::string> spec_names;
  std::vector<std::string> formalism_names;
  std::string formalism_name = "automaton";
  std::string format_name = "tokens";
  std::vector<std::string> maps;
  std::string map_file;
  std::string field = "event";
  std::string input = "-";
  std::string answers;
  std::string formula;
  std::size_t max_len = 0;
  bool stream = false;
  bool strict = false;
  bool json_out = false;

  auto add_input_options = [&](CLI::App* c) {
    c->add_option("input", input, "trace file, or - for stdin");
    c->add_option("--format", format_name, "tokens or jsonl")->check(CLI::IsMember({"tokens", "jsonl"}));
    c->add_option("--map", maps, "event binding name=req|resp|other (repeatable)");
    c->add_option("--map-file", map_file, "file of name=role lines");
    c->add_option("--field", field, "JSONL field holding the event name");
    c->add_flag("--json", json_out, "one JSON object per result line");
  };

  auto* check = app.add_subcommand("check", "decide whether a trace satisfies a spec type");
  check->add_option("--spec", spec_name, "RR1..RR6");
  check->add_option("--formula", formula, "LTL formula over req/resp instead of a spec type");
  check->add_option("--formalism", formalism_name, "grammar|logic|automaton|counting|oracle");
  check->add_flag("--stream", stream, "one verdict line per event");
  check->add_flag("--strict", strict, "reject events that map to neither req nor resp");
  add_input_options(check);

  auto* classify_cmd = app.add_subcommand("classify", "pick a spec type from three yes/no questions");
  classify_cmd->add_option("--answers", answers, "e.g. y,n,y or n,y");
  classify_cmd->add_flag("--json", json_out, "JSON output");

  auto* witness = app.add_subcommand("witness", "print a request-to-response correspondence (RR3, RR4)");
  witness->add_option("--spec", spec_name, "RR3 or RR4")->required();
  add_input_options(witness);

  auto* cross = app.add_subcommand("cross-check", "compare every decider on all short words");
  cross->add_option("--max-len", max_len, "longest word")->default_val(10);
  cross->add_option("--spec", spec_names, "spec types (default: all)");
  cross->add_option("--formalism", formalism_names, "formalisms (default: all that apply)");
  cross->add_flag("--json", json_out, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "list the members of a spec type");
  enumerate->add_option("--spec", spec_name, "RR1..RR6")->required();
  enumerate->add_option("--max-len", max_len, "longest word")->required();
  enumerate->add_option("--formalism", formalism_name, "decider used to test membership");
  enumerate->add_flag("--json", json_out, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  auto spec_of = [&](const std::string& name) {
    auto s = parse_spec_type(name);
    if (!s)
      throw InvalidArgument("unknown spec type '" + name + "'");
    return *s;
  };
  auto formalism_of = [&](const std::string& name) {
    auto f = parse_formalism(name);
    if (!f)
      throw InvalidArgument("unknown formalism '" + name + "'");
    return *f;
  };
  auto parse_opts = [&] {
    ParseOptions p;
    p.format = format_name == "jsonl" ? TraceFormat::jsonl : TraceFormat::tokens;
    p.field = field;
    p.strict = strict;
    return p;
  };
  auto mapping = [&] {
    if (maps.empty() && map_file.empty())
      return EventMapping::identity();
    EventMapping m;
    if (!map_file.empty()) {
      std::ifstream f(map_file);
      if (!f)
        throw InvalidArgument("cannot read map file " + map_file);
      m = EventMapping::parse(read_all(f));
    }
    for (const auto& b : maps)
      m.add(b);
    return m;
  };

  try {
    std::ifstream file;
    std::istream* source = &in;
    if ((check->parsed() || witness->parsed()) && input != "-") {
      file.open(input);
      if (!file)
        throw InvalidArgument("cannot read " + input);
      source = &file;
    }

    if (check->parsed()) {
      CheckRequest r;
      if (!spec_name.empty())
        r.spec = spec_of(spec_name);
      if (!formula.empty())
        r.formula = formula;
      r.formalism = formalism_of(formalism_name);
      r.parse = parse_opts();
      r.mapping = mapping();
      r.stream = stream;
      r.json = json_out;
      return cmd_check(r, *source, out, err);
    }
    if (classify_cmd->parsed())
      return cmd_classify(answers, json_out, in, out, err);
    if (witness->parsed())
      return cmd_witness(spec_of(spec_name), parse_opts(), mapping(), json_out, *source, out, err);
    if (cross->parsed()) {
      std::vector<SpecType> specs;
      for (const auto& n : spec_names)
        specs.push_back(spec_of(n));
      if (specs.empty())
        specs.assign(all_spec_types.begin(), all_spec_types.end());
      std::vector<Formalism> fs;
      for (const auto& n : formalism_names)
        fs.push_back(formalism_of(n));
      return cmd_crosscheck(max_len, specs, fs, json_out, out, err);
    }
    if (enumerate->parsed())
      return cmd_enumerate(spec_of(spec_name), max_len, formalism_of(formalism_name), json_out, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

} // namespace rrmon::cli
