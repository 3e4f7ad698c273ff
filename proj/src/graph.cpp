#include <cliquelab/caps.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/graph.hpp>

#include <algorithm>
#include <string>

namespace cliquelab
{
    namespace
    {
        void check_vertex(Vertex v, std::size_t n)
        {
            if (v >= n)
                throw DomainError("vertex " + std::to_string(v) + " out of range for graph on " +
                                  std::to_string(n) + " vertices");
        }
    } // namespace

    Graph::Graph(std::size_t n) : adjacency_(n)
    {
        if (n <= kDenseVertexCap)
            rows_.assign(n, Bitset(n));
    }

    Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges) {
            check_vertex(u, n);
            check_vertex(v, n);
            if (u == v)
                throw DomainError("self-loop at vertex " + std::to_string(u));
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto &list : adjacency_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            edge_count_ += list.size();
        }
        edge_count_ /= 2;
        if (!rows_.empty())
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v : adjacency_[u])
                    rows_[u].set(v);
    }

    Graph Graph::complete(std::size_t n)
    {
        std::vector<Edge> edges;
        edges.reserve(n * (n - (n > 0)) / 2);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    bool Graph::adjacent(Vertex u, Vertex v) const
    {
        if (!rows_.empty())
            return rows_[u].test(v);
        const auto &list = adjacency_[u];
        return std::binary_search(list.begin(), list.end(), v);
    }

    std::vector<Edge> Graph::edges() const
    {
        std::vector<Edge> result;
        result.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adjacency_[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    VertexSet normalize(std::span<const Vertex> vertices, std::size_t n)
    {
        VertexSet result(vertices.begin(), vertices.end());
        for (Vertex v : result)
            check_vertex(v, n);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    Bitset to_bitset(std::span<const Vertex> vertices, std::size_t n)
    {
        Bitset bits(n);
        for (Vertex v : vertices) {
            check_vertex(v, n);
            bits.set(v);
        }
        return bits;
    }

    VertexSet from_bitset(const Bitset &bits)
    {
        VertexSet result;
        result.reserve(bits.count());
        for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
            result.push_back(static_cast<Vertex>(i));
        return result;
    }

    Rational density(const Graph &g)
    {
        if (g.order() == 0)
            throw DomainError("density of a graph with no vertices is undefined");
        return Rational(static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(g.order()));
    }

    std::size_t min_degree(const Graph &g)
    {
        std::size_t best = g.order() == 0 ? 0 : g.degree(0);
        for (Vertex v = 1; v < g.order(); ++v)
            best = std::min(best, g.degree(v));
        return best;
    }

    Graph induced_subgraph(const Graph &g, std::span<const Vertex> subset)
    {
        const VertexSet s = normalize(subset, g.order());
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (g.adjacent(s[i], s[j]))
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return Graph(s.size(), edges);
    }

    std::size_t edges_within(const Graph &g, std::span<const Vertex> subset)
    {
        const VertexSet s = normalize(subset, g.order());
        std::size_t count = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                count += g.adjacent(s[i], s[j]);
        return count;
    }

    bool is_clique(const Graph &g, std::span<const Vertex> subset)
    {
        const VertexSet s = normalize(subset, g.order());
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!g.adjacent(s[i], s[j]))
                    return false;
        return true;
    }

    Graph complement(const Graph &g)
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.order(), edges);
    }

    VertexSet peel_to_min_degree(const Graph &g)
    {
        if (g.order() == 0 || g.size() == 0)
            throw DomainError("peel_to_min_degree requires a graph with at least one edge");

        // deg(v) < m/n  <=>  deg(v) * n < m
        const auto n = static_cast<std::uint64_t>(g.order());
        const auto m = static_cast<std::uint64_t>(g.size());
        std::vector<std::size_t> degree(g.order());
        std::vector<bool> alive(g.order(), true);
        for (Vertex v = 0; v < g.order(); ++v)
            degree[v] = g.degree(v);

        bool removed = true;
        while (removed) {
            removed = false;
            for (Vertex v = 0; v < g.order(); ++v) {
                if (alive[v] && degree[v] * n < m) {
                    alive[v] = false;
                    for (Vertex u : g.neighbors(v))
                        if (alive[u])
                            --degree[u];
                    removed = true;
                    break;
                }
            }
        }

        VertexSet survivors;
        for (Vertex v = 0; v < g.order(); ++v)
            if (alive[v])
                survivors.push_back(v);
        if (survivors.empty())
            throw InvariantViolation("peeling removed every vertex of a graph with edges");
        return survivors;
    }
} // namespace cliquelab
