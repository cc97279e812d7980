#pragma once

// The quiver-codim command line: argument parsing, dispatch and rendering.

#include <iosfwd>
#include <string>
#include <vector>

namespace quiver::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitDisagreement = 4;

/// Runs one command. args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiver::cli
