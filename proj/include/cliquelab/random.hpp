#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace cliquelab
{
    struct Seed
    {
        std::uint64_t value = 0;

        friend bool operator==(Seed, Seed) = default;
    };

    // Child seed for substream (tag, index). Pure function of its inputs.
    Seed derive(Seed seed, std::string_view tag, std::uint64_t index = 0);

    // std::mt19937_64 keyed by derive(seed, tag, index). All distributions are
    // implemented here rather than through <random>'s distribution classes, whose
    // output is implementation-defined, so samples agree across standard libraries.
    class Rng
    {
    public:
        using result_type = std::uint64_t;

        static constexpr std::string_view kGenerator = "mt19937_64+splitmix64-substreams/1";

        Rng(Seed seed, std::string_view tag, std::uint64_t index = 0);

        static constexpr result_type min() { return 0; }
        static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
        result_type operator()() { return engine_(); }

        // Uniform on [0, bound). bound must be positive.
        std::uint64_t below(std::uint64_t bound);

        // Uniform on [0, 1) with 53 random bits.
        double uniform();

        bool bernoulli(double p);

    private:
        std::mt19937_64 engine_;
    };
} // namespace cliquelab
