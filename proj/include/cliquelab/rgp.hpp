#pragma once

#include <cliquelab/graph.hpp>
#include <cliquelab/random.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cliquelab
{
    // S_1..S_N: each S_i is the set of `ell` uniform draws (with replacement)
    // from [source_n], so 1 <= |S_i| <= ell. Equal sets may occur at distinct indices.
    struct SubsetFamily
    {
        std::size_t source_n = 0;
        std::size_t ell = 0;
        std::vector<VertexSet> sets;

        std::size_t size() const { return sets.size(); }

        friend bool operator==(const SubsetFamily &, const SubsetFamily &) = default;
    };

    struct ProductGraph
    {
        Graph graph;
        SubsetFamily family;
    };

    // Draws a family on substream "rgp-family". Throws CapExceeded above kProductVertexCap.
    SubsetFamily sample_family(std::size_t source_n, std::size_t count, std::size_t ell, Seed seed);

    // Product graph on family indices: i ~ j (i != j) iff S_i u S_j is a clique of g.
    Graph product_graph(const Graph &g, const SubsetFamily &family);

    // Randomized graph product RGP_{N,ell}(g).
    ProductGraph rgp(const Graph &g, std::size_t count, std::size_t ell, Seed seed);

    // Union over product edges (i, j) of {{u, v} : u in S_i, v in S_j, u != v},
    // returned sorted as source-graph edges.
    std::vector<Edge> implied_edges(const SubsetFamily &family, std::span<const Edge> product_edges);

    enum class DisperserMode
    {
        exhaustive,
        sampled
    };

    struct DisperserOptions
    {
        DisperserMode mode = DisperserMode::exhaustive;
        std::uint64_t samples = 0; // sampled mode only
        Seed seed{};
    };

    struct DisperserViolation
    {
        std::vector<std::size_t> members;
        std::size_t union_size = 0;
    };

    struct DisperserReport
    {
        // At most kMaxListedViolations are listed; violation_count is exact.
        static constexpr std::size_t kMaxListedViolations = 1000;

        std::uint64_t violation_count = 0;
        std::vector<DisperserViolation> violations;
        // min over examined M of |U_{i in M} S_i| / (|M| * ell), with one witness
        Rational worst_ratio{0};
        std::vector<std::size_t> worst_members;
        std::uint64_t examined = 0;

        bool passed() const { return violation_count == 0; }
    };

    // Checks |U_{i in M} S_i| >= delta * |M| * ell / 100 for every (exhaustive) or
    // randomly drawn (sampled) index set M with 1 <= |M| <= max_set_size.
    // Exhaustive mode refuses when sum_{t <= max_set_size} C(N, t) exceeds the
    // enumeration cap; the walk itself skips subtrees that provably cannot
    // contain a violation or a smaller ratio.
    DisperserReport check_disperser(const SubsetFamily &family, Rational delta, std::size_t max_set_size,
                                    const DisperserOptions &options = {});
} // namespace cliquelab
