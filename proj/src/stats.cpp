#include <cliquelab/errors.hpp>
#include <cliquelab/stats.hpp>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <numeric>

namespace cliquelab
{
    namespace
    {
        using boost::math::binomial_distribution;

        void check_counts(std::uint64_t successes, std::uint64_t trials, double confidence)
        {
            if (trials == 0 || successes > trials)
                throw DomainError("binomial bound needs 0 <= successes <= trials, trials > 0");
            if (!(confidence > 0 && confidence < 1))
                throw DomainError("confidence must lie in (0, 1)");
        }
    } // namespace

    double binomial_lower_bound(std::uint64_t successes, std::uint64_t trials, double confidence)
    {
        check_counts(successes, trials, confidence);
        return binomial_distribution<>::find_lower_bound_on_p(static_cast<double>(trials),
                                                              static_cast<double>(successes), 1 - confidence);
    }

    double binomial_upper_bound(std::uint64_t successes, std::uint64_t trials, double confidence)
    {
        check_counts(successes, trials, confidence);
        return binomial_distribution<>::find_upper_bound_on_p(static_cast<double>(trials),
                                                              static_cast<double>(successes), 1 - confidence);
    }

    MeanSummary summarize_mean(std::span<const double> values, double confidence)
    {
        if (values.empty())
            throw DomainError("cannot summarize an empty sample");
        MeanSummary out;
        const auto n = static_cast<double>(values.size());
        out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
        double squares = 0;
        for (double v : values)
            squares += (v - out.mean) * (v - out.mean);
        out.stddev = values.size() > 1 ? std::sqrt(squares / (n - 1)) : 0.0;
        const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2);
        const double radius = z * out.stddev / std::sqrt(n);
        out.ci = {out.mean - radius, out.mean + radius};
        return out;
    }

    bool rate_consistent_with(std::uint64_t successes, std::uint64_t trials, double claimed, double confidence)
    {
        return binomial_upper_bound(successes, trials, confidence) >= claimed;
    }
} // namespace cliquelab
