#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homcount {

// Full command dispatch; args exclude the program name. Returns the process
// exit code: 0 success, 1 domain error (JSON error object on out), 2 usage
// error (message on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace homcount
