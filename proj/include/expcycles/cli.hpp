#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace expcycles {

/// Subcommands gen, check-expansion, check-beta, spectrum, thm1, thm2, thm3,
/// experiment, validate. args excludes the program name. Returns 0 on
/// success, 1 on a structured failure or refutation (JSON error object on
/// `out`), 2 on usage errors (message and help on `err`).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expcycles
