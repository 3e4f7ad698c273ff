#include <cliquelab/errors.hpp>
#include <cliquelab/io.hpp>
#include <cliquelab/reductions.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cliquelab
{
    namespace
    {
        std::vector<std::size_t> random_labels(std::size_t n, std::size_t k, Seed seed, const char *tag,
                                               const std::optional<VertexSet> &rainbow)
        {
            Rng rng(seed, tag);
            std::vector<std::size_t> labels(n);
            for (auto &label : labels)
                label = static_cast<std::size_t>(rng.below(k));
            if (rainbow) {
                if (rainbow->size() != k)
                    throw DomainError("rainbow set must have exactly k vertices");
                VertexSet sorted = normalize(*rainbow, n);
                if (sorted.size() != k)
                    throw DomainError("rainbow set has repeated vertices");
                for (std::size_t i = 0; i < k; ++i)
                    labels[(*rainbow)[i]] = i;
            }
            return labels;
        }
    } // namespace

    VertexSet dks_from_biclique(const Graph &g, std::size_t k, const Biclique &biclique)
    {
        const std::size_t t = biclique.size();
        if (t == 0)
            throw DomainError("empty biclique carries no density guarantee");
        if (!is_biclique(g, biclique.left, biclique.right))
            throw DomainError("not a biclique of the graph");
        if (k < 2 * t || k > g.order())
            throw DomainError("dks_from_biclique needs 2t <= k <= n");

        VertexSet chosen = biclique.left;
        chosen.insert(chosen.end(), biclique.right.begin(), biclique.right.end());
        chosen = normalize(chosen, g.order());
        Bitset used = to_bitset(chosen, g.order());
        for (Vertex v = 0; chosen.size() < k; ++v)
            if (!used.test(v))
                chosen.push_back(v);
        std::sort(chosen.begin(), chosen.end());
        if (edges_within(g, chosen) < t * t)
            throw InvariantViolation("padded biclique induces fewer than t^2 edges");
        return chosen;
    }

    std::size_t averaging_bound(std::size_t k, std::size_t s, std::size_t edges)
    {
        if (k > s)
            throw DomainError("averaging bound needs k <= |S|");
        if (s < 2)
            return 0;
        const auto num = static_cast<unsigned __int128>(k) * (k - 1) * edges;
        const auto den = static_cast<unsigned __int128>(s) * (s - 1);
        return static_cast<std::size_t>((num + den - 1) / den);
    }

    DksResult best_k_subset(const Graph &g, const VertexSet &s, std::size_t k, Budget budget)
    {
        const VertexSet members = normalize(s, g.order());
        if (k < 1 || k > members.size())
            throw DomainError("best_k_subset needs 1 <= k <= |S|");
        const double count = static_cast<double>(binomial(members.size(), k));
        budget.require_enumerable(count, "k-subsets of S");
        DksResult inner = densest_k_subgraph(induced_subgraph(g, members), k, std::move(budget));
        for (auto &v : inner.vertices)
            v = members[v];
        return inner;
    }

    VertexSet dks_via_skes(const Graph &g, std::size_t k, const VertexSet &s, Budget budget)
    {
        const VertexSet members = normalize(s, g.order());
        if (members.size() < k)
            throw DomainError("SkES solution has fewer than k vertices");
        const std::size_t inside = edges_within(g, members);
        if (inside < k * (k - 1) / 2)
            throw DomainError("SkES solution induces fewer than C(k,2) edges");
        DksResult best = best_k_subset(g, members, k, std::move(budget));
        if (best.edges < averaging_bound(k, members.size(), inside))
            throw InvariantViolation("best k-subset falls below the averaging bound");
        return best.vertices;
    }

    StarReduction skes_to_steiner_forest(const Graph &g, std::size_t k)
    {
        const std::size_t n = g.order();
        if (n < 1)
            throw DomainError("star reduction needs at least one vertex");
        const auto center = static_cast<Vertex>(n);
        std::vector<Edge> spokes;
        for (Vertex v = 0; v < n; ++v)
            spokes.emplace_back(v, center);
        StarReduction out;
        out.center = center;
        out.instance.graph = Graph(n + 1, spokes);
        out.instance.weights.assign(n, Rational(1));
        out.instance.demands = g.edges();
        out.instance.k = k;
        out.certificate.reduction = "skes-to-steiner-forest";
        out.certificate.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)},
                                      {"center", std::to_string(center)}};
        return out;
    }

    VertexSet extract_from_forest(const StarReduction &reduction, const std::vector<Edge> &forest)
    {
        VertexSet leaves;
        for (auto [u, v] : forest) {
            if (v != reduction.center)
                throw DomainError("forest edge is not a spoke of the star");
            leaves.push_back(u);
        }
        std::sort(leaves.begin(), leaves.end());
        leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
        return leaves;
    }

    DsnReduction skes_to_dsn(const Graph &g, std::size_t k, Seed seed, const std::optional<VertexSet> &rainbow)
    {
        if (k < 1)
            throw DomainError("DSN reduction needs k >= 1");
        const std::size_t n = g.order();
        DsnReduction out;
        out.source_n = n;
        out.k = k;
        out.part = random_labels(n, k, seed, "dsn-partition", rainbow);

        std::vector<Arc> arcs;
        for (Vertex v = 0; v < n; ++v) {
            arcs.push_back({out.first_copy(v), out.second_copy(v), Rational(0)});
            for (Vertex u : g.neighbors(v))
                arcs.push_back({out.first_copy(v), out.second_copy(u), Rational(0)});
        }
        for (Vertex v = 0; v < n; ++v) {
            arcs.push_back({out.source(out.part[v]), out.first_copy(v), Rational(1)});
            arcs.push_back({out.second_copy(v), out.sink(out.part[v]), Rational(1)});
        }
        out.instance.digraph = WeightedDigraph(2 * n + 2 * k, std::move(arcs));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                out.instance.demands.emplace_back(out.source(i), out.sink(j));

        out.certificate.reduction = "skes-to-dsn";
        out.certificate.seed = seed;
        out.certificate.parameters = {{"n", std::to_string(n)},
                                      {"k", std::to_string(k)},
                                      {"mode", rainbow ? "rainbow" : "random"}};
        out.certificate.labels = out.part;
        return out;
    }

    VertexSet extract_from_dsn(const DsnReduction &reduction, const std::vector<std::size_t> &arcs)
    {
        const auto &all = reduction.instance.digraph.arcs();
        const std::size_t n = reduction.source_n;
        VertexSet s;
        for (auto i : arcs) {
            if (i >= all.size())
                throw DomainError("arc index out of range");
            const Arc &a = all[i];
            if (a.weight != 1)
                continue;
            // s_i -> v^1 or v^2 -> t_j
            s.push_back(a.to < n ? a.to : a.from - static_cast<Vertex>(n));
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    bool spans_all_part_pairs(const Graph &g, const DsnReduction &reduction, const VertexSet &s)
    {
        const std::size_t k = reduction.k;
        std::vector<char> linked(k * k, 0);
        for (Vertex v : s)
            for (Vertex u : s)
                if (u != v && g.adjacent(u, v))
                    linked[reduction.part[v] * k + reduction.part[u]] = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i != j && !linked[i * k + j])
                    return false;
        return true;
    }

    HypergraphReduction biclique_to_dksh(const Graph &g, std::size_t k, std::size_t ell, Budget budget)
    {
        if (ell < 1)
            throw DomainError("hypergraph reduction needs ell >= 1");
        HypergraphReduction out;
        out.rho = 2 * k;
        out.ell = ell;
        out.t = k / 8;
        out.hypergraph = Hypergraph(g.order(), list_cliques(g, 2 * ell, std::move(budget)));
        out.certificate.reduction = "biclique-to-dksh";
        out.certificate.parameters = {{"k", std::to_string(k)},
                                      {"rho", std::to_string(out.rho)},
                                      {"ell", std::to_string(ell)},
                                      {"t", std::to_string(out.t)}};
        return out;
    }

    BicliqueExtraction extract_biclique(const Graph &g, const HypergraphReduction &reduction, const VertexSet &s,
                                        Budget budget)
    {
        const VertexSet members = normalize(s, g.order());
        Biclique local = max_balanced_biclique(induced_subgraph(g, members), std::move(budget));
        BicliqueExtraction out;
        for (Vertex v : local.left)
            out.biclique.left.push_back(members[v]);
        for (Vertex v : local.right)
            out.biclique.right.push_back(members[v]);
        out.reaches_t = out.biclique.size() >= reduction.t;
        return out;
    }

    ColoringReduction dks_to_induced_pattern(const Graph &g, const Graph &h, Seed seed,
                                             const std::optional<VertexSet> &rainbow)
    {
        const std::size_t k = h.order();
        if (k < 1 || k > g.order())
            throw DomainError("pattern reduction needs 1 <= |V(H)| <= |V(G)|");

        ColoringReduction out;
        // den(H) < k/4  <=>  4|E(H)| < k^2
        out.complemented = 4 * h.size() < k * k;
        out.pattern = out.complemented ? complement(h) : h;
        out.source = out.complemented ? complement(g) : g;
        out.coloring = random_labels(g.order(), k, seed, "pattern-coloring", rainbow);

        std::vector<Edge> kept;
        for (auto [u, v] : out.source.edges()) {
            const auto cu = static_cast<Vertex>(out.coloring[u]);
            const auto cv = static_cast<Vertex>(out.coloring[v]);
            if (cu != cv && out.pattern.adjacent(cu, cv))
                kept.emplace_back(u, v);
        }
        out.reduced = Graph(g.order(), kept);

        out.certificate.reduction = "dks-to-induced-pattern";
        out.certificate.seed = seed;
        out.certificate.parameters = {{"n", std::to_string(g.order())},
                                      {"k", std::to_string(k)},
                                      {"mode", rainbow ? "rainbow" : "random"}};
        out.certificate.labels = out.coloring;
        out.certificate.complemented = out.complemented;
        return out;
    }

    BigFloat lemma44_bound_exact(std::size_t kappa, std::size_t t, std::size_t ell)
    {
        if (!(0 < ell && ell < t && 16 * t <= kappa))
            throw DomainError("lemma44_bound needs 0 < ell < t <= kappa/16");
        const BigFloat exponent = -BigFloat(ell * ell) / BigFloat(16 * t);
        const BigFloat binomials = BigFloat(binomial(kappa, ell)) * BigFloat(binomial(kappa - ell, ell));
        return 2 * boost::multiprecision::exp(exponent) * binomials;
    }

    double lemma44_bound(std::size_t kappa, std::size_t t, std::size_t ell)
    {
        const BigFloat exact = lemma44_bound_exact(kappa, t, ell);
        double value = exact.convert_to<double>();
        // the 100-digit value is far more precise than a double, so one step up
        // past it is an upper bound on the true value
        while (BigFloat(value) <= exact)
            value = std::nextafter(value, std::numeric_limits<double>::infinity());
        return value;
    }
} // namespace cliquelab
