#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbraid::cli {

// Exit statuses.
inline constexpr int kVerdict = 0;       // a verdict was produced, including "distinct"
inline constexpr int kInconclusive = 1;  // a search hit its budget
inline constexpr int kUsage = 2;         // bad flags or unparsable operands
inline constexpr int kViolation = 3;     // an exhaustive check contradicted a theorem

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbraid::cli
