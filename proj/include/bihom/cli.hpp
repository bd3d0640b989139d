#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bihom {

/// Command-line front end. Exit codes: 0 success / all-pass, 1 at least one
/// failing identity (classify) or audit violation (audit), 2 input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihom
