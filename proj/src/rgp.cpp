#include <cliquelab/caps.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/rgp.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cliquelab
{
    SubsetFamily sample_family(std::size_t source_n, std::size_t count, std::size_t ell, Seed seed)
    {
        if (source_n < 1 || count < 1 || ell < 1)
            throw DomainError("rgp needs n >= 1, N >= 1 and ell >= 1");
        if (count > kProductVertexCap)
            throw CapExceeded("N = " + std::to_string(count) + " exceeds the product materialization cap of " +
                              std::to_string(kProductVertexCap) + " vertices");
        Rng rng(seed, "rgp-family");
        SubsetFamily family{source_n, ell, {}};
        family.sets.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            VertexSet s;
            s.reserve(ell);
            for (std::size_t draw = 0; draw < ell; ++draw)
                s.push_back(static_cast<Vertex>(rng.below(source_n)));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            family.sets.push_back(std::move(s));
        }
        return family;
    }

    Graph product_graph(const Graph &g, const SubsetFamily &family)
    {
        const std::size_t n = g.order();
        if (family.source_n != n)
            throw DomainError("subset family was drawn for a graph on " + std::to_string(family.source_n) +
                              " vertices, not " + std::to_string(n));
        if (!g.has_rows())
            throw CapExceeded("rgp source graph exceeds the dense adjacency cap");
        if (family.size() > kProductVertexCap)
            throw CapExceeded("N exceeds the product materialization cap");

        // S_i u S_j is a clique iff both sets are cliques and S_j lies in the
        // closed common neighborhood of S_i.
        std::vector<Bitset> members;
        std::vector<Bitset> closed;
        std::vector<std::size_t> cliquey;
        members.reserve(family.size());
        closed.reserve(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            Bitset bits = to_bitset(family.sets[i], n);
            Bitset common(n);
            common.set();
            for (Vertex v : family.sets[i]) {
                Bitset row = g.row(v);
                row.set(v);
                common &= row;
            }
            if (bits.is_subset_of(common))
                cliquey.push_back(i);
            members.push_back(std::move(bits));
            closed.push_back(std::move(common));
        }

        std::vector<Edge> edges;
        for (std::size_t a = 0; a < cliquey.size(); ++a)
            for (std::size_t b = a + 1; b < cliquey.size(); ++b) {
                const auto i = cliquey[a];
                const auto j = cliquey[b];
                if (members[j].is_subset_of(closed[i]))
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        return Graph(family.size(), edges);
    }

    ProductGraph rgp(const Graph &g, std::size_t count, std::size_t ell, Seed seed)
    {
        SubsetFamily family = sample_family(g.order(), count, ell, seed);
        Graph product = product_graph(g, family);
        return {std::move(product), std::move(family)};
    }

    std::vector<Edge> implied_edges(const SubsetFamily &family, std::span<const Edge> product_edges)
    {
        std::vector<Edge> result;
        for (auto [i, j] : product_edges) {
            if (i >= family.size() || j >= family.size())
                throw DomainError("product edge refers to a family index out of range");
            for (Vertex u : family.sets[i])
                for (Vertex v : family.sets[j])
                    if (u != v)
                        result.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    namespace
    {
        class DisperserWalk
        {
        public:
            DisperserWalk(const SubsetFamily &family, Rational delta, std::size_t max_set_size,
                          DisperserReport &report)
                : family_(family), delta_(delta), max_size_(max_set_size), report_(report)
            {
                for (const auto &s : family.sets)
                    bits_.push_back(to_bitset(s, family.source_n));
            }

            // Examines one index set; `members` sorted, `cover` their union.
            void examine(const std::vector<std::size_t> &members, std::size_t cover)
            {
                ++report_.examined;
                const auto m = static_cast<std::int64_t>(members.size());
                const auto ell = static_cast<std::int64_t>(family_.ell);
                const Rational needed = delta_ * Rational(m * ell, 100);
                if (Rational(static_cast<std::int64_t>(cover)) < needed) {
                    ++report_.violation_count;
                    if (report_.violations.size() < DisperserReport::kMaxListedViolations)
                        report_.violations.push_back({members, cover});
                }
                const Rational ratio(static_cast<std::int64_t>(cover), m * ell);
                if (report_.worst_members.empty() || ratio < report_.worst_ratio) {
                    report_.worst_ratio = ratio;
                    report_.worst_members = members;
                }
            }

            void exhaustive()
            {
                std::vector<std::size_t> members;
                Bitset cover(family_.source_n);
                descend(members, cover, 0);
            }

            const Bitset &set_bits(std::size_t i) const { return bits_[i]; }

        private:
            void descend(std::vector<std::size_t> &members, const Bitset &cover, std::size_t next)
            {
                for (std::size_t j = next; j < bits_.size(); ++j) {
                    Bitset grown = cover | bits_[j];
                    members.push_back(j);
                    const std::size_t size = grown.count();
                    examine(members, size);
                    if (members.size() < max_size_ && !subtree_settled(size))
                        descend(members, grown, j + 1);
                    members.pop_back();
                }
            }

            // Every extension M' of the current set has |M'| <= max_size_ and
            // union >= size, so it can neither violate nor lower the worst ratio when
            // size >= delta*max*ell/100 and size/(max*ell) >= worst.
            bool subtree_settled(std::size_t size) const
            {
                const auto cap = static_cast<std::int64_t>(max_size_ * family_.ell);
                const auto cover = static_cast<std::int64_t>(size);
                if (Rational(cover) < delta_ * Rational(cap, 100))
                    return false;
                return Rational(cover, cap) >= report_.worst_ratio;
            }

            const SubsetFamily &family_;
            Rational delta_;
            std::size_t max_size_;
            DisperserReport &report_;
            std::vector<Bitset> bits_;
        };

        double subset_count(std::size_t n, std::size_t max_size)
        {
            double total = 0.0;
            double term = 1.0;
            for (std::size_t t = 1; t <= max_size && t <= n; ++t) {
                term = term * static_cast<double>(n - t + 1) / static_cast<double>(t);
                total += term;
            }
            return total;
        }
    } // namespace

    DisperserReport check_disperser(const SubsetFamily &family, Rational delta, std::size_t max_set_size,
                                    const DisperserOptions &options)
    {
        if (family.sets.empty())
            throw DomainError("check_disperser needs a non-empty family");
        if (max_set_size < 1)
            throw DomainError("max_set_size must be at least 1");
        if (delta <= 0)
            throw DomainError("delta must be positive");

        DisperserReport report;
        DisperserWalk walk(family, delta, max_set_size, report);
        if (options.mode == DisperserMode::exhaustive) {
            const double count = subset_count(family.size(), max_set_size);
            if (count > static_cast<double>(enumeration_cap()))
                throw CapExceeded("exhaustive disperser check would enumerate " + std::to_string(count) +
                                  " index sets (cap " + std::to_string(enumeration_cap()) +
                                  "); use sampled mode instead");
            walk.exhaustive();
            return report;
        }

        Rng rng(options.seed, "disperser-sample");
        const std::size_t largest = std::min(max_set_size, family.size());
        for (std::uint64_t trial = 0; trial < options.samples; ++trial) {
            const auto size = 1 + static_cast<std::size_t>(rng.below(largest));
            std::vector<std::size_t> members;
            while (members.size() < size) {
                const auto pick = static_cast<std::size_t>(rng.below(family.size()));
                if (std::find(members.begin(), members.end(), pick) == members.end())
                    members.push_back(pick);
            }
            std::sort(members.begin(), members.end());
            Bitset cover(family.source_n);
            for (auto i : members)
                cover |= walk.set_bits(i);
            walk.examine(members, cover.count());
        }
        return report;
    }
} // namespace cliquelab
