#pragma once

#include <cliquelab/graph.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace cliquelab
{
    struct Arc
    {
        Vertex from;
        Vertex to;
        Rational weight;

        friend bool operator==(const Arc &, const Arc &) = default;
    };

    // Arc-weighted directed graph: at most one arc per ordered pair, weights >= 0.
    class WeightedDigraph
    {
    public:
        WeightedDigraph() = default;
        WeightedDigraph(std::size_t n, std::vector<Arc> arcs);

        std::size_t order() const { return n_; }
        const std::vector<Arc> &arcs() const { return arcs_; }

        friend bool operator==(const WeightedDigraph &, const WeightedDigraph &) = default;

    private:
        std::size_t n_ = 0;
        std::vector<Arc> arcs_;
    };

    // Hyperedges are stored sorted and deduplicated (as sets and as a family).
    class Hypergraph
    {
    public:
        Hypergraph() = default;
        Hypergraph(std::size_t n, std::vector<VertexSet> hyperedges);

        std::size_t order() const { return n_; }
        std::size_t size() const { return hyperedges_.size(); }
        const std::vector<VertexSet> &hyperedges() const { return hyperedges_; }

        // Hyperedges fully contained in the subset.
        std::size_t edges_inside(std::span<const Vertex> subset) const;

        friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

    private:
        std::size_t n_ = 0;
        std::vector<VertexSet> hyperedges_;
    };
} // namespace cliquelab
