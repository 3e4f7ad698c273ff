#pragma once

#include <iosfwd>

namespace cliquelab
{
    // Exit codes: 0 success/pass, 1 usage error, 2 statistical fail,
    // 3 invariant fail, 4 infeasible or cap/time limit hit.
    int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
} // namespace cliquelab
