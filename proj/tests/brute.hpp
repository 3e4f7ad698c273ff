#pragma once

// Naive reference implementations for small graphs (n <= ~20): plain subset
// enumeration over bitmasks, sharing no code with the library's oracles.

#include <cliquelab/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace brute
{
    using cliquelab::Graph;
    using Mask = std::uint32_t;

    inline std::vector<Mask> adjacency(const Graph &g)
    {
        std::vector<Mask> adj(g.order(), 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
        }
        return adj;
    }

    inline int edges_in(const std::vector<Mask> &adj, Mask s)
    {
        int twice = 0;
        for (Mask rest = s; rest; rest &= rest - 1)
            twice += std::popcount(adj[std::countr_zero(rest)] & s);
        return twice / 2;
    }

    inline bool clique(const std::vector<Mask> &adj, Mask s) { return 2 * edges_in(adj, s) == std::popcount(s) * (std::popcount(s) - 1); }

    inline std::vector<cliquelab::Vertex> members(Mask s)
    {
        std::vector<cliquelab::Vertex> out;
        for (; s; s &= s - 1)
            out.push_back(static_cast<cliquelab::Vertex>(std::countr_zero(s)));
        return out;
    }

    // Sorted-sequence lexicographic order on sets.
    inline bool lex_less(Mask a, Mask b) { return members(a) < members(b); }

    inline int max_clique_size(const Graph &g)
    {
        const auto adj = adjacency(g);
        int best = 0;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
            if (clique(adj, s))
                best = std::max(best, std::popcount(s));
        return best;
    }

    // (edges, lexicographically least maximizer)
    inline std::pair<int, Mask> dks(const Graph &g, int k)
    {
        const auto adj = adjacency(g);
        int best = -1;
        Mask arg = 0;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
            if (std::popcount(s) != k)
                continue;
            const int e = edges_in(adj, s);
            if (e > best || (e == best && lex_less(s, arg))) {
                best = e;
                arg = s;
            }
        }
        return {best, arg};
    }

    // max |E[S]|/|S| over 1 <= |S| <= k, as (numerator, denominator) reduced
    inline cliquelab::Rational den_leq_k(const Graph &g, int k)
    {
        const auto adj = adjacency(g);
        cliquelab::Rational best(0);
        for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
            const int size = std::popcount(s);
            if (size <= k)
                best = std::max(best, cliquelab::Rational(edges_in(adj, s), size));
        }
        return best;
    }

    inline Mask common(const std::vector<Mask> &adj, Mask s, std::size_t n)
    {
        Mask c = n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
        for (Mask rest = s; rest; rest &= rest - 1)
            c &= adj[std::countr_zero(rest)];
        return c;
    }

    // Largest t with disjoint A, B, |A| = |B| = t, complete between them.
    inline int balanced_biclique(const Graph &g)
    {
        const auto adj = adjacency(g);
        int best = 0;
        for (Mask a = 1; a < (Mask{1} << g.order()); ++a) {
            const int t = std::popcount(a);
            if (std::popcount(common(adj, a, g.order()) & ~a) >= t)
                best = std::max(best, t);
        }
        return best;
    }

    // Ordered pairs (S, T) of disjoint ell-sets, complete between them.
    inline std::uint64_t ordered_bicliques(const Graph &g, int ell)
    {
        const auto adj = adjacency(g);
        const Mask full = Mask{1} << g.order();
        std::uint64_t count = 0;
        for (Mask s = 1; s < full; ++s) {
            if (std::popcount(s) != ell)
                continue;
            for (Mask t = 1; t < full; ++t) {
                if (std::popcount(t) != ell || (s & t))
                    continue;
                bool ok = true;
                for (Mask rest = s; rest && ok; rest &= rest - 1)
                    ok = (adj[std::countr_zero(rest)] & t) == t;
                count += ok;
            }
        }
        return count;
    }

    inline std::uint64_t cliques_of_size(const Graph &g, int r)
    {
        const auto adj = adjacency(g);
        std::uint64_t count = 0;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
            count += std::popcount(s) == r && clique(adj, s);
        return count;
    }

    // Size of the smallest S with |E[S]| >= k (k <= |E|).
    inline int skes(const Graph &g, int k)
    {
        const auto adj = adjacency(g);
        int best = static_cast<int>(g.order()) + 1;
        for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
            if (edges_in(adj, s) >= k)
                best = std::min(best, std::popcount(s));
        return best;
    }

    // ---------------------------------------------------------------- graph families

    inline Graph from_mask(std::size_t n, std::uint64_t edge_mask)
    {
        std::vector<cliquelab::Edge> edges;
        std::size_t bit = 0;
        for (cliquelab::Vertex u = 0; u < n; ++u)
            for (cliquelab::Vertex v = u + 1; v < n; ++v, ++bit)
                if (edge_mask >> bit & 1)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    inline std::uint64_t to_mask(std::size_t n, const std::vector<Mask> &adj, const std::vector<int> &perm)
    {
        // bit index of the pair (perm[u], perm[v]) in the upper-triangle order
        std::uint64_t mask = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (Mask rest = adj[u]; rest; rest &= rest - 1) {
                const auto v = static_cast<std::size_t>(std::countr_zero(rest));
                std::size_t a = static_cast<std::size_t>(perm[u]), b = static_cast<std::size_t>(perm[v]);
                if (a > b)
                    std::swap(a, b);
                const std::size_t bit = a * n - a * (a + 1) / 2 + (b - a - 1);
                mask |= std::uint64_t{1} << bit;
            }
        return mask;
    }

    inline std::uint64_t canonical(std::size_t n, const std::vector<Mask> &adj)
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do
            best = std::min(best, to_mask(n, adj, perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    // One representative of every isomorphism class on n vertices, built by
    // attaching a new vertex to every neighborhood of each class on n-1.
    inline std::vector<Graph> nonisomorphic(std::size_t n)
    {
        std::vector<std::vector<Mask>> classes{{}};
        for (std::size_t size = 1; size <= n; ++size) {
            std::set<std::uint64_t> seen;
            std::vector<std::vector<Mask>> next;
            for (const auto &base : classes)
                for (Mask nbrs = 0; nbrs < (Mask{1} << (size - 1)); ++nbrs) {
                    std::vector<Mask> adj = base;
                    adj.push_back(nbrs);
                    for (std::size_t u = 0; u + 1 < size; ++u)
                        if (nbrs >> u & 1)
                            adj[u] |= Mask{1} << (size - 1);
                    if (seen.insert(canonical(size, adj)).second)
                        next.push_back(std::move(adj));
                }
            classes = std::move(next);
        }
        std::vector<Graph> out;
        for (const auto &adj : classes) {
            std::vector<cliquelab::Edge> edges;
            for (cliquelab::Vertex u = 0; u < n; ++u)
                for (Mask rest = adj[u]; rest; rest &= rest - 1)
                    if (auto v = static_cast<cliquelab::Vertex>(std::countr_zero(rest)); v > u)
                        edges.emplace_back(u, v);
            out.emplace_back(n, edges);
        }
        return out;
    }

    inline bool connected(const Graph &g)
    {
        if (g.order() == 0)
            return true;
        const auto adj = adjacency(g);
        Mask seen = 1, frontier = 1;
        while (frontier) {
            Mask next = 0;
            for (Mask rest = frontier; rest; rest &= rest - 1)
                next |= adj[std::countr_zero(rest)];
            frontier = next & ~seen;
            seen |= next;
        }
        return std::popcount(seen) == static_cast<int>(g.order());
    }

    inline Graph cycle(std::size_t n)
    {
        std::vector<cliquelab::Edge> edges;
        for (cliquelab::Vertex v = 0; v < n; ++v)
            edges.emplace_back(v, static_cast<cliquelab::Vertex>((v + 1) % n));
        return Graph(n, edges);
    }

    inline Graph path(std::size_t n)
    {
        std::vector<cliquelab::Edge> edges;
        for (cliquelab::Vertex v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, edges);
    }
} // namespace brute
