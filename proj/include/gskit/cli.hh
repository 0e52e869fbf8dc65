#ifndef GSKIT_GUARD_GSKIT_CLI_HH
#define GSKIT_GUARD_GSKIT_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace gskit
{
    enum class ExitStatus : int
    {
        /// ok, witness found, property verified
        Ok = 0,
        /// violation found, infeasible, property refuted
        Refuted = 1,
        /// usage or input error
        UsageError = 2,
        /// a budget fired before the answer was known
        Inconclusive = 3
    };

    /// Runs the command line tool. args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
        -> ExitStatus;
}

#endif
