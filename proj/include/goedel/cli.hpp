#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goedel {

// goedelsim entry point. args excludes the program name. Exit codes: 0 when
// every executed check passes, 1 on check failures or a failed operation,
// 2 on usage, syntax and corpus errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace goedel
