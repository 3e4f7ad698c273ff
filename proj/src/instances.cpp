#include <cliquelab/errors.hpp>
#include <cliquelab/instances.hpp>

#include <algorithm>
#include <string>
#include <tuple>

namespace cliquelab
{
    WeightedDigraph::WeightedDigraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs))
    {
        for (const auto &arc : arcs_) {
            if (arc.from >= n || arc.to >= n)
                throw DomainError("arc endpoint out of range");
            if (arc.weight < 0)
                throw DomainError("negative arc weight");
        }
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(arcs_.size());
        for (const auto &arc : arcs_)
            pairs.emplace_back(arc.from, arc.to);
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
            throw DomainError("more than one arc for an ordered vertex pair");
    }

    Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> hyperedges) : n_(n)
    {
        for (auto &e : hyperedges)
            hyperedges_.push_back(normalize(e, n));
        std::sort(hyperedges_.begin(), hyperedges_.end());
        hyperedges_.erase(std::unique(hyperedges_.begin(), hyperedges_.end()), hyperedges_.end());
    }

    std::size_t Hypergraph::edges_inside(std::span<const Vertex> subset) const
    {
        const VertexSet s = normalize(subset, n_);
        return static_cast<std::size_t>(std::count_if(hyperedges_.begin(), hyperedges_.end(), [&](const VertexSet &e) {
            return std::includes(s.begin(), s.end(), e.begin(), e.end());
        }));
    }
} // namespace cliquelab
