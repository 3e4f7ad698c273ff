#pragma once

#include <cstdint>
#include <span>

namespace cliquelab
{
    struct Interval
    {
        double lower = 0;
        double upper = 0;
    };

    // Exact (Clopper-Pearson) one-sided bounds on a binomial rate at the given
    // confidence, e.g. 0.99.
    double binomial_lower_bound(std::uint64_t successes, std::uint64_t trials, double confidence);
    double binomial_upper_bound(std::uint64_t successes, std::uint64_t trials, double confidence);

    // Two-sided normal-approximation interval for a mean.
    struct MeanSummary
    {
        double mean = 0;
        double stddev = 0; // sample standard deviation
        Interval ci;
    };

    MeanSummary summarize_mean(std::span<const double> values, double confidence);

    // A rate claim "p >= claimed" is refuted when the one-sided upper bound on
    // the observed rate falls below it.
    bool rate_consistent_with(std::uint64_t successes, std::uint64_t trials, double claimed, double confidence);
} // namespace cliquelab
