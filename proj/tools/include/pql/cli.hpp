#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pql::cli {

// Exit codes: 0 success, 1 domain failure (invalid layout, budget exceeded, structure mismatch),
// 2 usage or parse error.
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pql::cli
