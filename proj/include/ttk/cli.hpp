#pragma once

// Directive execution for the command-line front end. Every run ends with a
// line `RESULT: accept`, `RESULT: reject` or `RESULT: error <class>`.

#include <ostream>
#include <string_view>

#include "ttk/parse.hpp"

namespace ttk {

enum ExitCode : int { kAccept = 0, kReject = 1, kParseError = 2, kTypeError = 3 };

/// Executes one directive and writes its report; returns the exit code.
int run_directive(const Directive& d, std::ostream& out);
/// Parses and executes a directive given as text.
int run_source(std::string_view src, std::ostream& out);

}  // namespace ttk
