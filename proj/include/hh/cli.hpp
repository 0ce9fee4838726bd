#ifndef HH_CLI_HPP_
#define HH_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hh::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not HH, family none, or disagreements
inline constexpr int kUsage = 2;     // bad arguments, unreadable input, scope error

// Runs one command; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hh::cli

#endif  // HH_CLI_HPP_
