#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orth::cli {

// Exit status of one orthctl invocation.
enum Status { Ok = 0, CheckFailed = 1, Failure = 2 };

// args excludes the program name. Reports go to out as key=value lines;
// errors go to err as "error category=<c> <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orth::cli
