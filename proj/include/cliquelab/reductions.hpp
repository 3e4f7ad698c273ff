#pragma once

#include <cliquelab/caps.hpp>
#include <cliquelab/graph.hpp>
#include <cliquelab/instances.hpp>
#include <cliquelab/oracles.hpp>
#include <cliquelab/random.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Instance maps between the problems, each with its solution-extraction map.
// Randomized maps are pure functions of (inputs, seed).
namespace cliquelab
{
    // What is needed to replay or invert a reduction: its name, the seed (if the
    // map is randomized), scalar parameters as text, and per-vertex labels
    // (coloring or partition).
    struct ReductionCertificate
    {
        std::string reduction;
        std::optional<Seed> seed;
        std::vector<std::pair<std::string, std::string>> parameters;
        std::vector<std::size_t> labels;
        bool complemented = false;
    };

    // A u B padded with the (k - 2t) lowest-indexed unused vertices. Rejects an
    // empty or invalid biclique and k outside [2t, n].
    VertexSet dks_from_biclique(const Graph &g, std::size_t k, const Biclique &biclique);

    // ceil(k(k-1) / (s(s-1)) * edges): what the best k-subset of an s-set with
    // `edges` induced edges is guaranteed to reach.
    std::size_t averaging_bound(std::size_t k, std::size_t s, std::size_t edges);

    // Best k-subset of s (lexicographically least among the maxima).
    DksResult best_k_subset(const Graph &g, const VertexSet &s, std::size_t k, Budget budget = {});

    // T* from a SkES solution S with |S| >= k and |E[S]| >= C(k,2).
    VertexSet dks_via_skes(const Graph &g, std::size_t k, const VertexSet &s, Budget budget = {});

    // Star on {c} u V: leaf v keeps id v, the center is vertex n. Unit weights,
    // demands are the edges of g.
    struct StarReduction
    {
        SteinerForestInstance instance;
        Vertex center = 0;
        ReductionCertificate certificate;
    };

    StarReduction skes_to_steiner_forest(const Graph &g, std::size_t k);

    // Leaves touched by a forest of the star instance.
    VertexSet extract_from_forest(const StarReduction &reduction, const std::vector<Edge> &forest);

    // Two-layer gadget. Vertex layout: v^1 = v, v^2 = n + v, s_i = 2n + i,
    // t_j = 2n + k + j. part[v] in [0, k).
    struct DsnReduction
    {
        DsnInstance instance;
        std::size_t source_n = 0;
        std::size_t k = 0;
        std::vector<std::size_t> part;
        ReductionCertificate certificate;

        Vertex first_copy(Vertex v) const { return v; }
        Vertex second_copy(Vertex v) const { return static_cast<Vertex>(source_n + v); }
        Vertex source(std::size_t i) const { return static_cast<Vertex>(2 * source_n + i); }
        Vertex sink(std::size_t j) const { return static_cast<Vertex>(2 * source_n + k + j); }
    };

    // Uniform random partition into k parts on substream "dsn-partition". With
    // `rainbow`, its i-th vertex is forced into part i (the rest stay random).
    DsnReduction skes_to_dsn(const Graph &g, std::size_t k, Seed seed,
                             const std::optional<VertexSet> &rainbow = std::nullopt);

    // Vertices touching a weight-1 arc of the solution.
    VertexSet extract_from_dsn(const DsnReduction &reduction, const std::vector<std::size_t> &arcs);

    // True when, for every pair of distinct parts i != j, s has a vertex in V_i
    // and one in V_j that are adjacent in g.
    bool spans_all_part_pairs(const Graph &g, const DsnReduction &reduction, const VertexSet &s);

    // Hyperedges are the 2*ell-cliques of g; rho = 2k; t = floor(k / 8).
    struct HypergraphReduction
    {
        Hypergraph hypergraph;
        std::size_t rho = 0;
        std::size_t ell = 0;
        std::size_t t = 0;
        ReductionCertificate certificate;
    };

    HypergraphReduction biclique_to_dksh(const Graph &g, std::size_t k, std::size_t ell, Budget budget = {});

    struct BicliqueExtraction
    {
        Biclique biclique; // in the ids of g
        bool reaches_t = false;
    };

    // Maximum balanced biclique of g[s].
    BicliqueExtraction extract_biclique(const Graph &g, const HypergraphReduction &reduction, const VertexSet &s,
                                        Budget budget = {});

    struct ColoringReduction
    {
        Graph reduced;  // G' on the vertex set of g
        Graph pattern;  // H, or its complement when complemented
        Graph source;   // g, or its complement when complemented
        std::vector<std::size_t> coloring;
        bool complemented = false;
        ReductionCertificate certificate;
    };

    // Colors on substream "pattern-coloring". If den(H) < k/4, both H and g are
    // complemented first. With `rainbow` (k vertices), its i-th vertex gets color i.
    ColoringReduction dks_to_induced_pattern(const Graph &g, const Graph &h, Seed seed,
                                             const std::optional<VertexSet> &rainbow = std::nullopt);

    // 2 e^{-ell^2/(16t)} C(kappa, ell) C(kappa-ell, ell), rounded up to a double.
    // Requires 0 < ell < t <= kappa/16.
    double lemma44_bound(std::size_t kappa, std::size_t t, std::size_t ell);
    BigFloat lemma44_bound_exact(std::size_t kappa, std::size_t t, std::size_t ell);
} // namespace cliquelab
