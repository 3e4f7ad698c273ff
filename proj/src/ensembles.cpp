#include <cliquelab/ensembles.hpp>
#include <cliquelab/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace cliquelab
{
    Graph sample_er(std::size_t n, double p, Seed seed)
    {
        if (!(p >= 0.0 && p <= 1.0))
            throw DomainError("edge probability must lie in [0, 1]");
        Rng rng(seed, "er");
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.bernoulli(p))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    PlantedInstance sample_planted(std::size_t n, double p, std::size_t kappa, Seed seed)
    {
        if (kappa < 1 || kappa > n)
            throw DomainError("planted clique size must satisfy 1 <= kappa <= n");
        Graph base = sample_er(n, p, seed);

        Rng rng(seed, "planted-clique");
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        for (std::size_t i = 0; i < kappa; ++i) {
            const auto j = i + static_cast<std::size_t>(rng.below(n - i));
            std::swap(perm[i], perm[j]);
        }
        VertexSet clique(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(kappa));
        std::sort(clique.begin(), clique.end());

        std::vector<Edge> edges = base.edges();
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(clique[i], clique[j]);
        return {Graph(n, edges), std::move(clique)};
    }

    Graph sample_pattern(std::size_t k, Seed seed)
    {
        return sample_er(k, 0.5, seed);
    }

    std::uint64_t ceil_power(std::uint64_t n, Rational delta)
    {
        using boost::multiprecision::cpp_int;
        if (delta < 0)
            throw DomainError("ceil_power needs a non-negative exponent");
        if (n <= 1)
            return n == 0 && delta == 0 ? 1 : n;
        const auto p = static_cast<unsigned>(delta.numerator());
        const auto q = static_cast<unsigned>(delta.denominator());
        const cpp_int target = boost::multiprecision::pow(cpp_int(n), p);
        auto at_least = [&](std::uint64_t m) { return boost::multiprecision::pow(cpp_int(m), q) >= target; };

        const double estimate = std::exp(boost::rational_cast<double>(delta) * std::log(static_cast<double>(n)));
        auto m = static_cast<std::uint64_t>(std::max(1.0, std::ceil(estimate)));
        while (m > 1 && at_least(m - 1))
            --m;
        while (!at_least(m))
            ++m;
        return m;
    }
} // namespace cliquelab
