#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simcore {

/* Command-line driver, in-process testable.  args excludes the program name.
 * Exit codes: 0 success / all-match, 1 verification mismatch or runtime
 * failure, 2 usage error. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simcore
