#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropgr {

// Driver behind the tropgr binary. args holds the command line without the
// program name. Returns the process exit code: 0 for success, 1 for a
// negative mathematical verdict (violated metric, mismatch, unit ideal),
// 2 for usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tropgr
