#pragma once

#include <stdexcept>
#include <string>

namespace cliquelab
{
    // Input outside an operation's domain (bad vertex id, p outside [0,1], ...).
    struct DomainError : std::domain_error
    {
        using std::domain_error::domain_error;
    };

    // An exponential search or materialization would exceed a configured cap.
    struct CapExceeded : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // The instance has no feasible solution.
    struct Infeasible : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // A search ran past its wall-clock budget. Distinct from "no solution".
    struct Timeout : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // An oracle produced a solution that its own checker rejects.
    struct InvariantViolation : std::logic_error
    {
        using std::logic_error::logic_error;
    };
} // namespace cliquelab
