#pragma once

#include <cliquelab/graph.hpp>
#include <cliquelab/instances.hpp>
#include <cliquelab/rgp.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace cliquelab
{
    // Text formats. Blank lines and lines starting with '#' are ignored on input.
    //
    //   graph:       g <n> <m>, then m lines "<u> <v>" with u < v
    //   digraph:     d <n> <m>, then m lines "<u> <v> <w>" (w decimal or p/q)
    //   hypergraph:  h <n> <m>, then m lines of vertex ids
    //   family:      f <N> <ell>, then N lines of vertex ids
    //
    // Parse errors throw DomainError with the offending line number.

    void write_graph(std::ostream &out, const Graph &g);
    Graph read_graph(std::istream &in);

    // A planted instance is a graph followed by "# clique: <ids>".
    void write_planted(std::ostream &out, const Graph &g, const VertexSet &clique);
    std::optional<VertexSet> read_clique_annotation(std::istream &in);

    void write_digraph(std::ostream &out, const WeightedDigraph &d);
    WeightedDigraph read_digraph(std::istream &in);

    void write_hypergraph(std::ostream &out, const Hypergraph &h);
    Hypergraph read_hypergraph(std::istream &in);

    // The family's source_n goes in a "# source_n: <n>" comment; without it the
    // reader uses (largest id + 1).
    void write_family(std::ostream &out, const SubsetFamily &family);
    SubsetFamily read_family(std::istream &in);

    std::string format_rational(const Rational &r);
    Rational parse_rational(std::string_view text);

    std::string to_string(const Graph &g);

    // Writes via a temporary file in the same directory and renames it into place,
    // so readers never observe a partially written file.
    void atomic_write(const std::filesystem::path &path, std::string_view contents);
    std::string read_file(const std::filesystem::path &path);
} // namespace cliquelab
