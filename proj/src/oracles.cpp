#include <cliquelab/errors.hpp>
#include <cliquelab/oracles.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace cliquelab
{
    namespace
    {
        void require_dense(const Graph &g, const char *what)
        {
            if (g.order() > kDenseVertexCap || !g.has_rows())
                throw CapExceeded(std::string(what) + ": graph on " + std::to_string(g.order()) +
                                  " vertices exceeds the oracle cap of " + std::to_string(kDenseVertexCap));
        }

        void check(bool ok, const char *what)
        {
            if (!ok)
                throw InvariantViolation(std::string(what) + ": returned solution failed its checker");
        }

        // vertices >= from
        Bitset suffix_mask(std::size_t n, std::size_t from)
        {
            Bitset mask(n);
            for (std::size_t v = from; v < n; ++v)
                mask.set(v);
            return mask;
        }

        // Greedy sequential coloring of `candidates`; the number of colors bounds
        // the clique number of the induced subgraph.
        std::size_t coloring_bound(const Graph &g, Bitset candidates)
        {
            std::size_t colors = 0;
            while (candidates.any()) {
                ++colors;
                Bitset uncolored = candidates;
                while (uncolored.any()) {
                    const auto v = uncolored.find_first();
                    uncolored.reset(v);
                    uncolored -= g.row(static_cast<Vertex>(v));
                    candidates.reset(v);
                }
            }
            return colors;
        }

        // k-subset walk in lexicographic order (include-before-exclude).
        // `threshold` fixes the edge count a leaf must reach; when absent the
        // search maximizes and the bar rises with every strict improvement.
        class SubsetSearch
        {
        public:
            SubsetSearch(const Graph &g, std::size_t k, Budget &budget, const char *what)
                : g_(g), k_(k), budget_(budget), what_(what), chosen_(g.order())
            {
            }

            std::optional<DksResult> maximize()
            {
                best_edges_ = -1;
                fixed_ = false;
                descend(0, 0);
                if (best_edges_ < 0)
                    return std::nullopt;
                return DksResult{best_, static_cast<std::size_t>(best_edges_)};
            }

            std::optional<DksResult> first_reaching(std::size_t threshold)
            {
                best_edges_ = static_cast<long long>(threshold) - 1;
                fixed_ = true;
                found_ = false;
                descend(0, 0);
                if (!found_)
                    return std::nullopt;
                return DksResult{best_, static_cast<std::size_t>(best_edges_)};
            }

        private:
            // 2 * upper bound on edges of any completion, for chosen set with
            // `edges` edges and candidates {next, ...}.
            long long doubled_bound(std::size_t next, std::size_t edges) const
            {
                const std::size_t need = k_ - picked_.size();
                if (need == 0)
                    return 2 * static_cast<long long>(edges);
                const std::size_t n = g_.order();
                if (n - next < need)
                    return -1;
                const Bitset pool = suffix_mask(n, next);
                std::vector<long long> scores;
                scores.reserve(n - next);
                for (std::size_t v = next; v < n; ++v) {
                    const auto &row = g_.row(static_cast<Vertex>(v));
                    const auto into_chosen = static_cast<long long>((row & chosen_).count());
                    const auto into_pool = static_cast<long long>((row & pool).count());
                    scores.push_back(2 * into_chosen + std::min<long long>(into_pool, static_cast<long long>(need) - 1));
                }
                std::partial_sort(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(need), scores.end(),
                                  std::greater<>());
                return 2 * static_cast<long long>(edges) +
                       std::accumulate(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(need), 0LL);
            }

            void descend(std::size_t next, std::size_t edges)
            {
                if (fixed_ && found_)
                    return;
                budget_.tick(what_);
                if (picked_.size() == k_) {
                    if (static_cast<long long>(edges) > best_edges_ || (fixed_ && static_cast<long long>(edges) >= best_edges_ + 1)) {
                        best_ = picked_;
                        best_edges_ = static_cast<long long>(edges);
                        found_ = true;
                    }
                    return;
                }
                // prune unless some completion beats (maximize) or reaches (fixed) the bar
                const long long bound = doubled_bound(next, edges);
                if (bound < 0 || bound / 2 <= best_edges_)
                    return;

                const auto v = static_cast<Vertex>(next);
                const std::size_t gained = (g_.row(v) & chosen_).count();
                picked_.push_back(v);
                chosen_.set(v);
                descend(next + 1, edges + gained);
                chosen_.reset(v);
                picked_.pop_back();
                descend(next + 1, edges);
            }

            const Graph &g_;
            std::size_t k_;
            Budget &budget_;
            const char *what_;
            Bitset chosen_;
            VertexSet picked_;
            VertexSet best_;
            long long best_edges_ = -1;
            bool fixed_ = false;
            bool found_ = false;
        };

        // Lexicographically least t-subset A with |N(A)| >= t.
        std::optional<VertexSet> biclique_side(const Graph &g, std::size_t t, Budget &budget)
        {
            const std::size_t n = g.order();
            VertexSet side;
            std::function<bool(std::size_t, const Bitset &)> descend = [&](std::size_t next, const Bitset &common) {
                budget.tick("biclique search");
                if (side.size() == t)
                    return true;
                for (std::size_t v = next; v + (t - side.size()) <= n; ++v) {
                    Bitset narrowed = common & g.row(static_cast<Vertex>(v));
                    if (narrowed.count() < t)
                        continue;
                    side.push_back(static_cast<Vertex>(v));
                    if (descend(v + 1, narrowed))
                        return true;
                    side.pop_back();
                }
                return false;
            };
            Bitset all(n);
            all.set();
            if (descend(0, all))
                return side;
            return std::nullopt;
        }

        Biclique complete_side(const Graph &g, VertexSet left)
        {
            Bitset common(g.order());
            common.set();
            for (Vertex a : left)
                common &= g.row(a);
            VertexSet right = from_bitset(common);
            right.resize(left.size());
            return {std::move(left), std::move(right)};
        }

        struct DisjointSets
        {
            std::vector<std::size_t> parent;

            explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

            std::size_t find(std::size_t x)
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
        };

        std::size_t count_connected(std::size_t n, const std::vector<Demand> &demands,
                                    const std::vector<Edge> &edges)
        {
            DisjointSets sets(n);
            for (auto [u, v] : edges)
                sets.unite(u, v);
            return static_cast<std::size_t>(std::count_if(demands.begin(), demands.end(), [&](const Demand &d) {
                return sets.find(d.first) == sets.find(d.second);
            }));
        }

        // Reachability of every demand using arcs flagged in `usable`.
        bool all_reachable(const DsnInstance &instance, const std::vector<char> &usable)
        {
            const std::size_t n = instance.digraph.order();
            std::vector<std::vector<Vertex>> out(n);
            const auto &arcs = instance.digraph.arcs();
            for (std::size_t i = 0; i < arcs.size(); ++i)
                if (usable[i])
                    out[arcs[i].from].push_back(arcs[i].to);

            std::vector<Vertex> sources;
            for (const auto &d : instance.demands)
                sources.push_back(d.first);
            std::sort(sources.begin(), sources.end());
            sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

            std::vector<char> seen(n);
            std::vector<Vertex> stack;
            for (Vertex s : sources) {
                std::fill(seen.begin(), seen.end(), 0);
                seen[s] = 1;
                stack.assign(1, s);
                while (!stack.empty()) {
                    const Vertex u = stack.back();
                    stack.pop_back();
                    for (Vertex w : out[u])
                        if (!seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                }
                for (const auto &d : instance.demands)
                    if (d.first == s && !seen[d.second])
                        return false;
            }
            return true;
        }
    } // namespace

    VertexSet max_clique(const Graph &g, Budget budget)
    {
        require_dense(g, "max_clique");
        const std::size_t n = g.order();
        if (n == 0)
            return {};

        VertexSet current;
        VertexSet best;
        std::function<void(const Bitset &)> descend = [&](const Bitset &candidates) {
            budget.tick("max_clique");
            if (current.size() > best.size())
                best = current;
            if (current.size() + coloring_bound(g, candidates) <= best.size())
                return;
            for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                Bitset later = candidates & suffix_mask(n, v + 1);
                if (current.size() + 1 + later.count() <= best.size())
                    break;
                current.push_back(static_cast<Vertex>(v));
                descend(later & g.row(static_cast<Vertex>(v)));
                current.pop_back();
            }
        };
        Bitset all(n);
        all.set();
        descend(all);

        check(is_clique(g, best), "max_clique");
        return best;
    }

    DksResult densest_k_subgraph(const Graph &g, std::size_t k, Budget budget)
    {
        require_dense(g, "densest_k_subgraph");
        if (k < 1 || k > g.order())
            throw DomainError("densest_k_subgraph needs 1 <= k <= n");
        SubsetSearch search(g, k, budget, "densest_k_subgraph");
        auto result = search.maximize();
        check(result && result->vertices.size() == k && edges_within(g, result->vertices) == result->edges,
              "densest_k_subgraph");
        return *result;
    }

    DensityResult densest_at_most_k(const Graph &g, std::size_t k, Budget budget)
    {
        require_dense(g, "den_leq_k");
        const std::size_t n = g.order();
        if (k < 1 || k > n)
            throw DomainError("den_leq_k needs 1 <= k <= n");

        // The densest set of at most k vertices can be taken connected: one of
        // the components of any maximizer is at least as dense.
        DensityResult best{Rational(0), VertexSet{0}};
        const Rational ceiling(static_cast<std::int64_t>(k) - 1, 2);
        bool done = false;

        VertexSet current;
        Bitset members(n);
        Bitset seen(n); // members plus their neighbors
        std::function<void(Bitset, std::size_t, Vertex)> extend = [&](Bitset extension, std::size_t edges,
                                                                      Vertex root) {
            budget.tick("den_leq_k");
            const Rational here(static_cast<std::int64_t>(edges), static_cast<std::int64_t>(current.size()));
            if (here > best.density) {
                best = {here, current};
                std::sort(best.vertices.begin(), best.vertices.end());
                if (best.density == ceiling) {
                    done = true;
                    return;
                }
            }
            if (current.size() == k)
                return;
            while (extension.any() && !done) {
                const auto w = static_cast<Vertex>(extension.find_first());
                extension.reset(w);
                Bitset next = extension;
                Bitset fresh = g.row(w) - seen;
                for (auto u = fresh.find_first(); u != Bitset::npos; u = fresh.find_next(u))
                    if (u > root)
                        next.set(u);
                const Bitset saved_seen = seen;
                const std::size_t gained = (g.row(w) & members).count();
                current.push_back(w);
                members.set(w);
                seen |= g.row(w);
                seen.set(w);
                extend(std::move(next), edges + gained, root);
                seen = saved_seen;
                members.reset(w);
                current.pop_back();
            }
        };

        for (Vertex root = 0; root < n && !done; ++root) {
            Bitset extension(n);
            for (Vertex u : g.neighbors(root))
                if (u > root)
                    extension.set(u);
            current.assign(1, root);
            members.reset();
            members.set(root);
            seen = g.row(root);
            seen.set(root);
            extend(std::move(extension), 0, root);
        }

        check(!best.vertices.empty() && best.vertices.size() <= k &&
                  Rational(static_cast<std::int64_t>(edges_within(g, best.vertices)),
                           static_cast<std::int64_t>(best.vertices.size())) == best.density,
              "den_leq_k");
        return best;
    }

    Rational den_leq_k(const Graph &g, std::size_t k, Budget budget)
    {
        return densest_at_most_k(g, k, std::move(budget)).density;
    }

    Biclique max_balanced_biclique(const Graph &g, Budget budget)
    {
        require_dense(g, "max_balanced_biclique");
        Biclique best;
        for (std::size_t t = 1; 2 * t <= g.order(); ++t) {
            auto side = biclique_side(g, t, budget);
            if (!side)
                break;
            best = complete_side(g, std::move(*side));
        }
        check(is_biclique(g, best.left, best.right), "max_balanced_biclique");
        return best;
    }

    BigInt count_bicliques(const Graph &g, std::size_t ell, Budget budget)
    {
        require_dense(g, "count_bicliques");
        if (ell < 1)
            throw DomainError("count_bicliques needs ell >= 1");
        const std::size_t n = g.order();
        BigInt total = 0;
        std::function<void(std::size_t, std::size_t, const Bitset &)> descend = [&](std::size_t next,
                                                                                    std::size_t depth,
                                                                                    const Bitset &common) {
            budget.tick("count_bicliques");
            if (depth == ell) {
                total += binomial(common.count(), ell);
                return;
            }
            for (std::size_t v = next; v + (ell - depth) <= n; ++v) {
                Bitset narrowed = common & g.row(static_cast<Vertex>(v));
                // common neighborhoods only shrink, so an S with fewer than
                // ell of them contributes nothing
                if (narrowed.count() >= ell)
                    descend(v + 1, depth + 1, narrowed);
            }
        };
        Bitset all(n);
        all.set();
        descend(0, 0, all);
        return total;
    }

    std::optional<Biclique> find_ktt(const Graph &g, std::size_t t, Budget budget)
    {
        require_dense(g, "contains_ktt");
        if (t == 0)
            return Biclique{};
        if (2 * t > g.order())
            return std::nullopt;
        auto side = biclique_side(g, t, budget);
        if (!side)
            return std::nullopt;
        Biclique found = complete_side(g, std::move(*side));
        check(is_biclique(g, found.left, found.right) && found.size() == t, "contains_ktt");
        return found;
    }

    bool contains_ktt(const Graph &g, std::size_t t, Budget budget)
    {
        return find_ktt(g, t, std::move(budget)).has_value();
    }

    std::vector<VertexSet> list_cliques(const Graph &g, std::size_t r, Budget budget)
    {
        require_dense(g, "count_cliques");
        const std::size_t n = g.order();
        std::vector<VertexSet> found;
        VertexSet current;
        std::function<void(const Bitset &)> descend = [&](const Bitset &candidates) {
            budget.tick("count_cliques");
            if (current.size() == r) {
                found.push_back(current);
                return;
            }
            if (current.size() + candidates.count() < r)
                return;
            for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                current.push_back(static_cast<Vertex>(v));
                descend(candidates & g.row(static_cast<Vertex>(v)) & suffix_mask(n, v + 1));
                current.pop_back();
            }
        };
        Bitset all(n);
        all.set();
        descend(all);
        return found;
    }

    std::uint64_t count_cliques(const Graph &g, std::size_t r, Budget budget)
    {
        require_dense(g, "count_cliques");
        const std::size_t n = g.order();
        std::uint64_t count = 0;
        std::size_t depth = 0;
        std::function<void(const Bitset &)> descend = [&](const Bitset &candidates) {
            budget.tick("count_cliques");
            if (depth == r) {
                ++count;
                return;
            }
            if (depth + candidates.count() < r)
                return;
            if (depth + 1 == r) {
                count += candidates.count();
                return;
            }
            for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                ++depth;
                descend(candidates & g.row(static_cast<Vertex>(v)) & suffix_mask(n, v + 1));
                --depth;
            }
        };
        Bitset all(n);
        all.set();
        descend(all);
        return count;
    }

    VertexSet smallest_k_edge_subgraph(const Graph &g, std::size_t k, Budget budget)
    {
        require_dense(g, "smallest_k_edge_subgraph");
        if (g.size() < k)
            throw Infeasible("graph has " + std::to_string(g.size()) + " edges, fewer than k = " + std::to_string(k));
        if (k == 0)
            return {};
        std::size_t size = 2;
        while (size * (size - 1) / 2 < k)
            ++size;
        for (; size <= g.order(); ++size) {
            SubsetSearch search(g, size, budget, "smallest_k_edge_subgraph");
            if (auto hit = search.first_reaching(k)) {
                check(edges_within(g, hit->vertices) >= k, "smallest_k_edge_subgraph");
                return hit->vertices;
            }
        }
        throw InvariantViolation("smallest_k_edge_subgraph: no subset reached k edges although the graph has them");
    }

    std::size_t connected_demands(const SteinerForestInstance &instance, const std::vector<Edge> &edges)
    {
        return count_connected(instance.graph.order(), instance.demands, edges);
    }

    Rational forest_cost(const SteinerForestInstance &instance, const std::vector<Edge> &edges)
    {
        const auto all = instance.graph.edges();
        Rational cost(0);
        for (const auto &e : edges) {
            auto it = std::lower_bound(all.begin(), all.end(), e);
            if (it == all.end() || *it != e)
                throw DomainError("forest uses an edge that is not in the instance graph");
            cost += instance.weights[static_cast<std::size_t>(it - all.begin())];
        }
        return cost;
    }

    SteinerForestSolution steiner_k_forest(const SteinerForestInstance &instance, Budget budget)
    {
        const Graph &g = instance.graph;
        const auto all = g.edges();
        if (instance.weights.size() != all.size())
            throw DomainError("Steiner forest instance needs one weight per edge");
        for (const auto &w : instance.weights)
            if (w < 0)
                throw DomainError("Steiner forest weights must be non-negative");
        for (const auto &d : instance.demands)
            if (d.first >= g.order() || d.second >= g.order())
                throw DomainError("demand endpoint out of range");
        if (instance.k > instance.demands.size())
            throw DomainError("k exceeds the number of demand pairs");
        if (instance.k == 0)
            return {};

        std::vector<Edge> free_edges;
        std::vector<std::size_t> paid;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (instance.weights[i] == 0)
                free_edges.push_back(all[i]);
            else
                paid.push_back(i);
        }
        auto satisfied = [&](const std::vector<Edge> &extra) {
            std::vector<Edge> used = free_edges;
            used.insert(used.end(), extra.begin(), extra.end());
            return count_connected(g.order(), instance.demands, used) >= instance.k;
        };

        std::vector<Edge> everything;
        for (auto i : paid)
            everything.push_back(all[i]);
        if (!satisfied(everything))
            throw Infeasible("fewer than k demand pairs can be connected");

        std::vector<Edge> chosen;
        std::vector<Edge> best = everything;
        Rational best_cost(0);
        for (auto i : paid)
            best_cost += instance.weights[i];

        std::function<void(std::size_t, Rational)> descend = [&](std::size_t next, Rational cost) {
            budget.tick("steiner_k_forest");
            if (cost >= best_cost)
                return;
            if (satisfied(chosen)) {
                best = chosen;
                best_cost = cost;
                return;
            }
            if (next == paid.size())
                return;
            std::vector<Edge> optimistic = chosen;
            for (std::size_t j = next; j < paid.size(); ++j)
                optimistic.push_back(all[paid[j]]);
            if (!satisfied(optimistic))
                return;
            chosen.push_back(all[paid[next]]);
            descend(next + 1, cost + instance.weights[paid[next]]);
            chosen.pop_back();
            descend(next + 1, cost);
        };
        descend(0, Rational(0));

        SteinerForestSolution solution{free_edges, best_cost};
        solution.edges.insert(solution.edges.end(), best.begin(), best.end());
        std::sort(solution.edges.begin(), solution.edges.end());
        check(connected_demands(instance, solution.edges) >= instance.k &&
                  forest_cost(instance, solution.edges) == solution.cost,
              "steiner_k_forest");
        return solution;
    }

    bool dsn_feasible(const DsnInstance &instance, const std::vector<std::size_t> &arcs)
    {
        std::vector<char> usable(instance.digraph.arcs().size(), 0);
        for (auto i : arcs) {
            if (i >= usable.size())
                return false;
            usable[i] = 1;
        }
        return all_reachable(instance, usable);
    }

    DsnSolution directed_steiner_network(const DsnInstance &instance, Budget budget)
    {
        const auto &arcs = instance.digraph.arcs();
        for (const auto &d : instance.demands)
            if (d.first >= instance.digraph.order() || d.second >= instance.digraph.order())
                throw DomainError("demand endpoint out of range");

        std::vector<char> usable(arcs.size(), 1);
        if (!all_reachable(instance, usable))
            throw Infeasible("some demand is unreachable even using every arc");

        std::vector<std::size_t> paid;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (arcs[i].weight != 0)
                paid.push_back(i);

        // usable[i] for paid arcs: 1 = chosen, 0 = excluded; zero arcs stay 1
        std::vector<char> best_usable = usable;
        Rational best_cost(0);
        for (auto i : paid)
            best_cost += arcs[i].weight;
        for (auto i : paid)
            usable[i] = 0;

        std::function<void(std::size_t, Rational)> descend = [&](std::size_t next, Rational cost) {
            budget.tick("directed_steiner_network");
            if (cost >= best_cost)
                return;
            if (all_reachable(instance, usable)) {
                best_cost = cost;
                best_usable = usable;
                return;
            }
            if (next == paid.size())
                return;
            for (std::size_t j = next; j < paid.size(); ++j)
                usable[paid[j]] = 1;
            const bool possible = all_reachable(instance, usable);
            for (std::size_t j = next; j < paid.size(); ++j)
                usable[paid[j]] = 0;
            if (!possible)
                return;
            usable[paid[next]] = 1;
            descend(next + 1, cost + arcs[paid[next]].weight);
            usable[paid[next]] = 0;
            descend(next + 1, cost);
        };
        descend(0, Rational(0));

        DsnSolution solution;
        solution.cost = best_cost;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (best_usable[i])
                solution.arcs.push_back(i);
        Rational recomputed(0);
        for (auto i : solution.arcs)
            recomputed += arcs[i].weight;
        check(dsn_feasible(instance, solution.arcs) && recomputed == solution.cost, "directed_steiner_network");
        return solution;
    }

    DkshResult densest_k_subhypergraph(const Hypergraph &h, std::size_t k, Budget budget)
    {
        const std::size_t n = h.order();
        if (n > kDenseVertexCap)
            throw CapExceeded("densest_k_subhypergraph: hypergraph exceeds the oracle cap");
        if (k < 1 || k > n)
            throw DomainError("densest_k_subhypergraph needs 1 <= k <= n");

        std::vector<Bitset> edges;
        for (const auto &e : h.hyperedges())
            if (e.size() <= k)
                edges.push_back(to_bitset(e, n));

        VertexSet picked;
        VertexSet best;
        long long best_count = -1;
        Bitset chosen(n);
        std::function<void(std::size_t)> descend = [&](std::size_t next) {
            budget.tick("densest_k_subhypergraph");
            const std::size_t need = k - picked.size();
            if (need == 0) {
                long long inside = 0;
                for (const auto &e : edges)
                    inside += e.is_subset_of(chosen);
                if (inside > best_count) {
                    best_count = inside;
                    best = picked;
                }
                return;
            }
            if (n - next < need)
                return;
            // hyperedges that some completion could still contain
            const Bitset reachable = chosen | suffix_mask(n, next);
            long long bound = 0;
            for (const auto &e : edges)
                if (e.is_subset_of(reachable) && (e - chosen).count() <= need)
                    ++bound;
            if (bound <= best_count)
                return;
            picked.push_back(static_cast<Vertex>(next));
            chosen.set(next);
            descend(next + 1);
            chosen.reset(next);
            picked.pop_back();
            descend(next + 1);
        };
        descend(0);

        DkshResult result{best, static_cast<std::size_t>(best_count)};
        check(result.vertices.size() == k && h.edges_inside(result.vertices) == result.hyperedges,
              "densest_k_subhypergraph");
        return result;
    }

    std::optional<PatternMapping> detect_pattern(const Graph &g, const Graph &pattern, bool induced, Budget budget)
    {
        require_dense(g, "detect_pattern");
        require_dense(pattern, "detect_pattern");
        const std::size_t n = g.order();
        const std::size_t k = pattern.order();
        if (k > n)
            return std::nullopt;

        // order pattern vertices so each has as many earlier neighbors as possible
        std::vector<Vertex> order;
        std::vector<char> placed(k, 0);
        for (std::size_t step = 0; step < k; ++step) {
            Vertex pick = 0;
            long long best_key = -1;
            for (Vertex h = 0; h < k; ++h) {
                if (placed[h])
                    continue;
                long long earlier = 0;
                for (Vertex o : order)
                    earlier += pattern.adjacent(h, o);
                const long long key = earlier * static_cast<long long>(k + 1) + static_cast<long long>(pattern.degree(h));
                if (key > best_key) {
                    best_key = key;
                    pick = h;
                }
            }
            placed[pick] = 1;
            order.push_back(pick);
        }

        PatternMapping mapping(k, 0);
        Bitset used(n);
        std::function<bool(std::size_t)> descend = [&](std::size_t depth) {
            budget.tick("detect_pattern");
            if (depth == k)
                return true;
            const Vertex h = order[depth];
            Bitset candidates = ~used;
            for (std::size_t i = 0; i < depth; ++i) {
                const Vertex o = order[i];
                if (pattern.adjacent(h, o))
                    candidates &= g.row(mapping[o]);
                else if (induced)
                    candidates -= g.row(mapping[o]);
            }
            for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
                if (g.degree(static_cast<Vertex>(v)) < pattern.degree(h))
                    continue;
                mapping[h] = static_cast<Vertex>(v);
                used.set(v);
                if (descend(depth + 1))
                    return true;
                used.reset(v);
            }
            return false;
        };
        if (!descend(0))
            return std::nullopt;
        check(is_pattern_embedding(g, pattern, induced, mapping), "detect_pattern");
        return mapping;
    }

    bool is_biclique(const Graph &g, const VertexSet &left, const VertexSet &right)
    {
        if (left.size() != right.size())
            return false;
        for (Vertex a : left)
            for (Vertex b : right)
                if (a == b || !g.adjacent(a, b))
                    return false;
        return true;
    }

    bool is_pattern_embedding(const Graph &g, const Graph &pattern, bool induced, const PatternMapping &mapping)
    {
        if (mapping.size() != pattern.order())
            return false;
        VertexSet image(mapping.begin(), mapping.end());
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            return false;
        for (Vertex v : image)
            if (v >= g.order())
                return false;
        for (Vertex a = 0; a < pattern.order(); ++a)
            for (Vertex b = a + 1; b < pattern.order(); ++b) {
                const bool want = pattern.adjacent(a, b);
                const bool have = g.adjacent(mapping[a], mapping[b]);
                if (want && !have)
                    return false;
                if (induced && !want && have)
                    return false;
            }
        return true;
    }
} // namespace cliquelab
