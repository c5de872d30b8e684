#pragma once

// Command implementations behind the `rrmon` binary. They take explicit
// streams so tests can drive them without a process boundary.

#include "rrmon/spec_type.hpp"
#include "rrmon/specs.hpp"
#include "rrmon/trace.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rrmon::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2 };

inline constexpr std::size_t max_cli_length = 16;

/// Largest enumeration bound the CLI accepts: 16, or less if RRMON_MAX_LEN
/// says so. Throws InvalidArgument on a malformed RRMON_MAX_LEN.
std::size_t length_cap();

struct CheckRequest {
  std::optional<SpecType> spec;
  /// LTL formula text; replaces `spec` when set.
  std::optional<std::string> formula;
  Formalism formalism = Formalism::automaton;
  ParseOptions parse;
  EventMapping mapping = EventMapping::identity();
  bool stream = false;
  bool json = false;
};

int cmd_check(const CheckRequest& req, std::istream& in, std::ostream& out, std::ostream& err);

/// "y,n,y" style answers; C2 is omitted when C1 is no. Empty means ask
/// interactively on `out` / `in`.
int cmd_classify(const std::string& answers, bool json, std::istream& in, std::ostream& out, std::ostream& err);

int cmd_witness(SpecType spec, const ParseOptions& parse, const EventMapping& mapping, bool json, std::istream& in,
                std::ostream& out, std::ostream& err);

int cmd_crosscheck(std::size_t max_len, const std::vector<SpecType>& specs, const std::vector<Formalism>& formalisms,
                   bool json, std::ostream& out, std::ostream& err);

int cmd_enumerate(SpecType spec, std::size_t max_len, Formalism formalism, bool json, std::ostream& out,
                  std::ostream& err);

/// Full command line (argv[0] included) to exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rrmon::cli
