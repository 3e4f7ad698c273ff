#pragma once

#include <cliquelab/caps.hpp>
#include <cliquelab/graph.hpp>
#include <cliquelab/instances.hpp>
#include <cliquelab/params.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Exact exponential-time solvers used as ground truth. Every search walks
// candidate sets in lexicographic order and keeps only strict improvements, so
// ties resolve to the lexicographically least optimum. Each result passes the
// matching independent checker below before it is returned; a failure there
// throws InvariantViolation.
//
// All solvers require the graph to fit the dense adjacency cap and charge
// their search nodes to a Budget (CapExceeded / Timeout when spent).
namespace cliquelab
{
    struct DksResult
    {
        VertexSet vertices;
        std::size_t edges = 0;
    };

    struct DensityResult
    {
        Rational density{0};
        VertexSet vertices;
    };

    struct Biclique
    {
        VertexSet left;
        VertexSet right;

        std::size_t size() const { return left.size(); }
    };

    using Demand = std::pair<Vertex, Vertex>;

    struct SteinerForestInstance
    {
        Graph graph;
        std::vector<Rational> weights; // aligned with graph.edges()
        std::vector<Demand> demands;
        std::size_t k = 0;
    };

    struct SteinerForestSolution
    {
        std::vector<Edge> edges;
        Rational cost{0};
    };

    struct DsnInstance
    {
        WeightedDigraph digraph;
        std::vector<Demand> demands;
    };

    struct DsnSolution
    {
        std::vector<std::size_t> arcs; // indices into digraph.arcs()
        Rational cost{0};
    };

    struct DkshResult
    {
        VertexSet vertices;
        std::size_t hyperedges = 0;
    };

    // mapping[h] = image of pattern vertex h
    using PatternMapping = std::vector<Vertex>;

    VertexSet max_clique(const Graph &g, Budget budget = {});

    DksResult densest_k_subgraph(const Graph &g, std::size_t k, Budget budget = {});

    // max over non-empty S, |S| <= k, of |E[S]| / |S|. The witness is the first
    // maximizer met while enumerating connected vertex sets from each root.
    DensityResult densest_at_most_k(const Graph &g, std::size_t k, Budget budget = {});
    Rational den_leq_k(const Graph &g, std::size_t k, Budget budget = {});

    // Disjoint sides of equal, maximum size, complete between them (not
    // necessarily induced).
    Biclique max_balanced_biclique(const Graph &g, Budget budget = {});

    // sum over ell-subsets S of C(|N(S)|, ell): ordered K_{ell,ell} copies.
    BigInt count_bicliques(const Graph &g, std::size_t ell, Budget budget = {});

    bool contains_ktt(const Graph &g, std::size_t t, Budget budget = {});
    std::optional<Biclique> find_ktt(const Graph &g, std::size_t t, Budget budget = {});

    std::uint64_t count_cliques(const Graph &g, std::size_t r, Budget budget = {});
    std::vector<VertexSet> list_cliques(const Graph &g, std::size_t r, Budget budget = {});

    // Smallest S with |E[S]| >= k. Throws Infeasible if g has fewer than k edges.
    VertexSet smallest_k_edge_subgraph(const Graph &g, std::size_t k, Budget budget = {});

    // Cheapest edge set connecting at least k demand pairs. Zero-weight edges are
    // always taken; the search branches over positive-weight edges only.
    SteinerForestSolution steiner_k_forest(const SteinerForestInstance &instance, Budget budget = {});

    // Cheapest arc set in which every t_i is reachable from s_i. Zero-weight arcs
    // are always taken; the search branches over positive-weight arcs only.
    DsnSolution directed_steiner_network(const DsnInstance &instance, Budget budget = {});

    DkshResult densest_k_subhypergraph(const Hypergraph &h, std::size_t k, Budget budget = {});

    // Backtracking (induced) subgraph isomorphism. nullopt means "no copy";
    // running out of time throws Timeout instead.
    std::optional<PatternMapping> detect_pattern(const Graph &g, const Graph &pattern, bool induced,
                                                 Budget budget = {});

    // Independent checkers.
    bool is_biclique(const Graph &g, const VertexSet &left, const VertexSet &right);
    std::size_t connected_demands(const SteinerForestInstance &instance, const std::vector<Edge> &edges);
    Rational forest_cost(const SteinerForestInstance &instance, const std::vector<Edge> &edges);
    bool dsn_feasible(const DsnInstance &instance, const std::vector<std::size_t> &arcs);
    bool is_pattern_embedding(const Graph &g, const Graph &pattern, bool induced, const PatternMapping &mapping);
} // namespace cliquelab
