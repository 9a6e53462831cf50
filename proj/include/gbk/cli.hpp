#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbk {

// Command-line driver. args is the argument list without the program name.
// Reports go to out, error payloads to err. Returns the process exit code:
// 0 on success, 1 on input or usage errors, 2 when a mathematical
// verification fails.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gbk
