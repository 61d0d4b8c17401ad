#ifndef HOPFKIT_CLI_HPP
#define HOPFKIT_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace hopfkit {
namespace cli {

/// Runs one hopfkit invocation.  Exit codes: 0 when every verdict passes (or
/// a solver found a solution), 1 on a verified failure or infeasibility,
/// 2 on input errors.  A file argument of "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace hopfkit

#endif
