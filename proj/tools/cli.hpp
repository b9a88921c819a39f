#ifndef MARKSEQ_CLI_HPP
#define MARKSEQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace markseq::cli {

/// Runs the command-line driver on argv-style arguments (program name
/// excluded) with explicit streams, so tests can drive it end to end.
/// Exit codes: 0 affirmative, 1 negative verdict, 2 input or usage error,
/// 3 self-check disagreement under --verify.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace markseq::cli

#endif  // MARKSEQ_CLI_HPP
