#include <cliquelab/caps.hpp>
#include <cliquelab/errors.hpp>

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace cliquelab
{
    std::uint64_t enumeration_cap()
    {
        static const std::uint64_t cap = [] {
            const char *env = std::getenv("CLIQUELAB_CAP");
            if (env == nullptr || *env == '\0')
                return kDefaultEnumerationCap;
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
            if (ec != std::errc{} || *ptr != '\0' || value == 0)
                return kDefaultEnumerationCap;
            return value;
        }();
        return cap;
    }

    Budget::Budget() : max_nodes_(enumeration_cap()) {}

    Budget::Budget(std::uint64_t max_nodes, std::optional<std::chrono::milliseconds> time_limit)
        : max_nodes_(max_nodes)
    {
        if (time_limit)
            deadline_ = std::chrono::steady_clock::now() + *time_limit;
    }

    Budget Budget::with_time(std::chrono::milliseconds time_limit)
    {
        return Budget(enumeration_cap(), time_limit);
    }

    void Budget::tick(std::string_view what)
    {
        if (++nodes_ > max_nodes_)
            throw CapExceeded(std::string(what) + ": search exceeded the enumeration cap of " +
                              std::to_string(max_nodes_) + " nodes (set CLIQUELAB_CAP to raise it)");
        // clock reads are comparatively expensive; sample every 4096 nodes
        if (deadline_ && (nodes_ & 0xfffU) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw Timeout(std::string(what) + ": time budget exceeded");
    }

    void Budget::require_enumerable(double count, std::string_view what) const
    {
        if (count > static_cast<double>(max_nodes_))
            throw CapExceeded(std::string(what) + ": " + std::to_string(count) +
                              " candidates exceed the enumeration cap of " + std::to_string(max_nodes_) +
                              " (set CLIQUELAB_CAP to raise it)");
    }
} // namespace cliquelab
