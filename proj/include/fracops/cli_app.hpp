#ifndef FRACOPS_CLI_APP_HPP
#define FRACOPS_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fracops::cli {

// Full command dispatch; the binary's main() forwards here, and tests drive
// it with string vectors and capture the streams. Exit status: 0 success,
// 1 verification failure, 2 usage or input error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fracops::cli

#endif
