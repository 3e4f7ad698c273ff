#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cliquelab
{
    // Largest graph stored with a packed bit-matrix; oracles refuse anything bigger.
    inline constexpr std::size_t kDenseVertexCap = 4096;

    // Largest product graph rgp will materialize.
    inline constexpr std::size_t kProductVertexCap = 1'000'000;

    // Default limit on enumerated candidates / search nodes. CLIQUELAB_CAP overrides it.
    inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000'000ULL;

    std::uint64_t enumeration_cap();

    // Work limit carried through every exponential search.
    class Budget
    {
    public:
        Budget();
        explicit Budget(std::uint64_t max_nodes,
                        std::optional<std::chrono::milliseconds> time_limit = std::nullopt);

        static Budget with_time(std::chrono::milliseconds time_limit);

        std::uint64_t max_nodes() const { return max_nodes_; }

        // Counts one search node; throws CapExceeded or Timeout when the budget is spent.
        void tick(std::string_view what);

        // Throws CapExceeded if `count` candidates would exceed the node cap.
        void require_enumerable(double count, std::string_view what) const;

        std::uint64_t nodes() const { return nodes_; }

    private:
        std::uint64_t max_nodes_;
        std::uint64_t nodes_ = 0;
        std::optional<std::chrono::steady_clock::time_point> deadline_;
    };
} // namespace cliquelab
