#pragma once

#include <cliquelab/graph.hpp>
#include <cliquelab/random.hpp>

#include <cstddef>
#include <cstdint>

namespace cliquelab
{
    struct PlantedInstance
    {
        Graph graph;
        VertexSet clique;
    };

    // G(n, p): every pair {u, v} independently with probability p. Pairs are
    // visited in lexicographic order, one draw each, on substream "er".
    Graph sample_er(std::size_t n, double p, Seed seed);

    // G(n, p, kappa): sample_er on the same substream, then a uniform kappa-subset
    // (seeded Fisher-Yates prefix on substream "planted-clique") made complete.
    PlantedInstance sample_planted(std::size_t n, double p, std::size_t kappa, Seed seed);

    // Random k-vertex pattern, G(k, 1/2).
    Graph sample_pattern(std::size_t k, Seed seed);

    // ceil(n^delta) computed exactly for rational delta = p/q >= 0: the least m
    // with m^q >= n^p.
    std::uint64_t ceil_power(std::uint64_t n, Rational delta);
} // namespace cliquelab
