#ifndef ANS_CLI_HPP_
#define ANS_CLI_HPP_

#include <iosfwd>

namespace ans {

  //! Exit codes of the command-line front end.
  enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

  //! Entry point of the `ans` tool with injectable streams.
  //!
  //! Subcommands: enumerate, generators, green, eggbox, counts, verify.
  //! Returns 0 when everything succeeded, 1 on a verification mismatch and 2
  //! on a usage or I/O error.
  int run_cli(int argc, char const* const* argv, std::ostream& out,
              std::ostream& err);

}  // namespace ans

#endif  // ANS_CLI_HPP_
