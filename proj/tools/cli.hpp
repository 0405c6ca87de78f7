#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kinematica::cli {

// args[0] is the program name, as in argv.
// Exit codes: 0 success, 1 domain error (JSON line on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kinematica::cli
