#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace boost
{
    // Boost 1.74's mixed rational/integer equality recurses forever under C++20's
    // reversed-operand rewriting. Exact non-template overloads win overload
    // resolution and compare directly.
    namespace rational_fix
    {
        template <class I>
        bool equal(const rational<std::int64_t> &r, I i)
        {
            if (r.denominator() != std::int64_t{1})
                return false;
            if constexpr (std::is_unsigned_v<I>)
                return r.numerator() >= 0 && static_cast<std::uint64_t>(r.numerator()) == i;
            else
                return r.numerator() == static_cast<std::int64_t>(i);
        }
    } // namespace rational_fix

#define CLIQUELAB_RATIONAL_EQ(I)                                                                                  \
    inline bool operator==(const rational<std::int64_t> &r, I i) { return rational_fix::equal(r, i); }           \
    inline bool operator!=(const rational<std::int64_t> &r, I i) { return !rational_fix::equal(r, i); }           \
    inline bool operator==(I i, const rational<std::int64_t> &r) { return rational_fix::equal(r, i); }           \
    inline bool operator!=(I i, const rational<std::int64_t> &r) { return !rational_fix::equal(r, i); }
    CLIQUELAB_RATIONAL_EQ(int)
    CLIQUELAB_RATIONAL_EQ(long)
    CLIQUELAB_RATIONAL_EQ(long long)
    CLIQUELAB_RATIONAL_EQ(unsigned)
    CLIQUELAB_RATIONAL_EQ(unsigned long)
    CLIQUELAB_RATIONAL_EQ(unsigned long long)
#undef CLIQUELAB_RATIONAL_EQ
} // namespace boost

namespace cliquelab
{
    using Vertex = std::uint32_t;
    using VertexSet = std::vector<Vertex>; // sorted, duplicate-free
    using Edge = std::pair<Vertex, Vertex>; // first < second
    using Rational = boost::rational<std::int64_t>;
    using Bitset = boost::dynamic_bitset<std::uint64_t>;

    // Undirected simple graph on vertices 0..n-1.
    //
    // Adjacency is kept both as sorted neighbor lists and, for n up to
    // kDenseVertexCap, as a packed bit-matrix. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t n);

        // Edges may come in any order or orientation; repeated pairs collapse.
        // Self-loops or endpoints >= n throw DomainError.
        Graph(std::size_t n, std::span<const Edge> edges);

        static Graph complete(std::size_t n);

        std::size_t order() const { return adjacency_.size(); }
        std::size_t size() const { return edge_count_; }

        bool adjacent(Vertex u, Vertex v) const;
        std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
        std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

        // Sorted lexicographically, each as (u, v) with u < v.
        std::vector<Edge> edges() const;

        bool has_rows() const { return !rows_.empty() || order() == 0; }
        // Bit-row of v; only valid when has_rows().
        const Bitset &row(Vertex v) const { return rows_[v]; }

        friend bool operator==(const Graph &a, const Graph &b) { return a.adjacency_ == b.adjacency_; }

    private:
        std::vector<std::vector<Vertex>> adjacency_;
        std::vector<Bitset> rows_;
        std::size_t edge_count_ = 0;
    };

    // Sorts and deduplicates; throws DomainError if any id is >= n.
    VertexSet normalize(std::span<const Vertex> vertices, std::size_t n);

    Bitset to_bitset(std::span<const Vertex> vertices, std::size_t n);
    VertexSet from_bitset(const Bitset &bits);

    // |E| / |V| exactly. Throws DomainError on the empty vertex set.
    Rational density(const Graph &g);

    std::size_t min_degree(const Graph &g);

    // Graph on |S| vertices; vertex i of the result is the i-th smallest element of S.
    Graph induced_subgraph(const Graph &g, std::span<const Vertex> subset);

    // Number of edges of g with both endpoints in the subset.
    std::size_t edges_within(const Graph &g, std::span<const Vertex> subset);

    bool is_clique(const Graph &g, std::span<const Vertex> subset);

    Graph complement(const Graph &g);

    // Repeatedly deletes the lowest-indexed vertex whose degree in the remaining
    // graph is below den(g). The survivors induce a subgraph with minimum
    // degree >= den(g). Throws DomainError on graphs without edges.
    VertexSet peel_to_min_degree(const Graph &g);
} // namespace cliquelab
