#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stci/config.hpp"
#include "stci/error.hpp"

namespace stci {

// Exit statuses: 0 proved/success, 1 usage or input errors, 2 verified-false
// claims, 3 not proven at the exponent bound.
enum ExitStatus { kExitOk = 0, kExitUsage = 1, kExitRefuted = 2, kExitUnproven = 3 };

int exit_status_for(Errc c);

// Fully parsed command line; formatting it reproduces an equivalent
// invocation (round-trip tested).
struct Command {
  std::string verb;
  std::string ring;
  std::string ideal;
  std::string gens;
  std::string adjoin;
  std::string maximal;
  std::string lhs, rhs;
  std::string cert_path;
  std::string promise;
  std::string format = "text";
  unsigned bound = 0;      // 0: use the default
  unsigned n_check = 0;
  unsigned cap = 3;
  unsigned long seed = 0;

  std::vector<std::string> to_argv() const;
};

Command parse_command(const std::vector<std::string>& args);

// Runs a parsed command; output documents go to `out`, diagnostics to `err`.
int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

// argv entry point used by the binary
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stci
