#include "brute.hpp"

#include <cliquelab/caps.hpp>
#include <cliquelab/ensembles.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/rgp.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquelab;

namespace
{
    bool union_is_clique(const Graph &g, const VertexSet &a, const VertexSet &b)
    {
        VertexSet u = a;
        u.insert(u.end(), b.begin(), b.end());
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j)
                if (u[i] != u[j] && !g.adjacent(u[i], u[j]))
                    return false;
        return true;
    }
} // namespace

TEST_CASE("family shape")
{
    const SubsetFamily f = sample_family(10, 50, 3, Seed{1});
    CHECK(f.size() == 50);
    CHECK(f.source_n == 10);
    for (const auto &s : f.sets) {
        CHECK((s.size() >= 1 && s.size() <= 3));
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        for (Vertex v : s)
            CHECK(v < 10);
    }
    CHECK(sample_family(10, 50, 3, Seed{1}) == f);
    CHECK_THROWS_AS(sample_family(10, kProductVertexCap + 1, 2, Seed{0}), CapExceeded);
    CHECK_THROWS_AS(sample_family(10, 5, 0, Seed{0}), DomainError);
}

TEST_CASE("edge rule matches the union definition in both directions")
{
    for (std::uint64_t s = 0; s < 30; ++s) {
        const std::size_t ell = 1 + s % 4;
        const Graph g = s % 2 ? sample_planted(25, 0.5, 8, Seed{s}).graph : sample_er(25, 0.6, Seed{s});
        const ProductGraph p = rgp(g, 120, ell, Seed{s});
        for (Vertex i = 0; i < 120; ++i)
            for (Vertex j = i + 1; j < 120; ++j)
                REQUIRE(p.graph.adjacent(i, j) == union_is_clique(g, p.family.sets[i], p.family.sets[j]));
    }
}

TEST_CASE("edge rule special cases")
{
    // ell = 1: adjacent iff equal singletons or adjacent singletons
    const Graph g = sample_er(12, 0.5, Seed{3});
    const ProductGraph p = rgp(g, 80, 1, Seed{3});
    for (Vertex i = 0; i < 80; ++i)
        for (Vertex j = i + 1; j < 80; ++j) {
            const Vertex a = p.family.sets[i][0], b = p.family.sets[j][0];
            CHECK(p.graph.adjacent(i, j) == (a == b || g.adjacent(a, b)));
        }

    // complete source: complete product
    CHECK(rgp(Graph::complete(9), 40, 3, Seed{1}).graph == Graph::complete(40));

    // empty source, ell >= 2: adjacent iff the union is one vertex
    const ProductGraph e = rgp(Graph(4), 60, 2, Seed{8});
    for (Vertex i = 0; i < 60; ++i)
        for (Vertex j = i + 1; j < 60; ++j) {
            const auto &a = e.family.sets[i];
            const auto &b = e.family.sets[j];
            CHECK(e.graph.adjacent(i, j) == (a.size() == 1 && a == b));
        }
}

TEST_CASE("implied edges")
{
    SubsetFamily f{6, 2, {{0, 1}, {2, 3}, {1}, {1, 4}}};
    CHECK(implied_edges(f, std::vector<Edge>{}).empty());
    // disjoint sets of size ell: all ell^2 cross pairs
    CHECK(implied_edges(f, std::vector<Edge>{{0, 1}}) == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    // shared vertex contributes no self pair
    CHECK(implied_edges(f, std::vector<Edge>{{2, 3}}) == std::vector<Edge>{{1, 4}});
    CHECK(implied_edges(f, std::vector<Edge>{{0, 2}}) == std::vector<Edge>{{0, 1}});
    CHECK_THROWS_AS(implied_edges(f, std::vector<Edge>{{0, 9}}), DomainError);

    for (std::uint64_t s = 0; s < 10; ++s) {
        const Graph g = sample_er(30, 0.5, Seed{s});
        const ProductGraph p = rgp(g, 200, 2, Seed{s});
        for (const Edge &e : p.graph.edges())
            for (auto [u, v] : implied_edges(p.family, std::vector<Edge>{e}))
                REQUIRE(g.adjacent(u, v));
    }
}

TEST_CASE("indices inside a planted clique form a clique, at the expected rate")
{
    // mean count is N (kappa/n)^ell = 400 * (1/4)^2 = 25
    const std::size_t n = 40, kappa = 10, N = 400, ell = 2;
    double total = 0;
    const int runs = 200;
    for (int r = 0; r < runs; ++r) {
        const PlantedInstance inst = sample_planted(n, 0.5, kappa, Seed{static_cast<std::uint64_t>(r)});
        const ProductGraph p = rgp(inst.graph, N, ell, Seed{static_cast<std::uint64_t>(r)});
        const Bitset clique = to_bitset(inst.clique, n);
        VertexSet inside;
        for (Vertex i = 0; i < N; ++i)
            if (std::all_of(p.family.sets[i].begin(), p.family.sets[i].end(), [&](Vertex v) { return clique.test(v); }))
                inside.push_back(i);
        REQUIRE(is_clique(p.graph, inside));
        total += static_cast<double>(inside.size());
    }
    const double q = 1.0 / 16;
    const double expected = N * q;
    const double se = std::sqrt(N * q * (1 - q) / runs);
    CHECK(std::abs(total / runs - expected) <= 5 * se);
}

TEST_CASE("disperser checker")
{
    // singletons always pass for small ell
    const SubsetFamily f = sample_family(100, 50, 2, Seed{4});
    CHECK(check_disperser(f, Rational(1, 2), 1).passed());

    // every set the same singleton, ell = 200: pairs cover 1 < 0.01 * 0.5 * 2 * 200 = 2
    SubsetFamily same{10, 200, std::vector<VertexSet>(5, VertexSet{3})};
    const DisperserReport bad = check_disperser(same, Rational(1, 2), 2);
    CHECK_FALSE(bad.passed());
    CHECK(bad.violation_count == 10); // all C(5,2) pairs, no singletons
    CHECK(bad.violations.front().members == std::vector<std::size_t>{0, 1});
    CHECK(bad.violations.front().union_size == 1);
    CHECK(bad.worst_ratio == Rational(1, 400));

    // sampled mode finds the same failure
    DisperserOptions sampled{DisperserMode::sampled, 200, Seed{1}};
    const DisperserReport found = check_disperser(same, Rational(1, 2), 2, sampled);
    CHECK(found.examined == 200);
    CHECK(found.violation_count > 0);

    CHECK_THROWS_AS(check_disperser(sample_family(100, 5000, 2, Seed{0}), Rational(1, 2), 4), CapExceeded);
}

TEST_CASE("pruned disperser walk agrees with plain enumeration")
{
    // tiny source, long draws trimmed to 1..3 vertices: with delta = 1 and
    // ell = 150 the bound is 1.5 |M|, so many index sets violate it
    for (std::uint64_t s = 0; s < 5; ++s) {
        SubsetFamily f = sample_family(6, 14, 150, Seed{s});
        for (std::size_t i = 0; i < f.size(); ++i)
            f.sets[i].resize(std::min<std::size_t>(f.sets[i].size(), 1 + (s + i) % 3));

        const DisperserReport r = check_disperser(f, Rational(1), 3);
        std::uint64_t violations = 0;
        Rational worst(1000);
        for (brute::Mask m = 1; m < (brute::Mask{1} << f.size()); ++m) {
            const int size = std::popcount(m);
            if (size > 3)
                continue;
            VertexSet u;
            for (auto i : brute::members(m))
                u.insert(u.end(), f.sets[i].begin(), f.sets[i].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            const auto cover = static_cast<std::int64_t>(u.size());
            violations += Rational(cover) < Rational(size * 150, 100);
            worst = std::min(worst, Rational(cover, size * 150));
        }
        CHECK(violations > 0);
        CHECK(r.violation_count == violations);
        CHECK(r.worst_ratio == worst);
    }
}
