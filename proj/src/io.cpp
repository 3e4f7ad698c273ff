#include <cliquelab/errors.hpp>
#include <cliquelab/io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

namespace cliquelab
{
    namespace
    {
        struct LineReader
        {
            std::istream &in;
            std::size_t line_number = 0;

            // Next non-blank, non-comment line split into tokens; false at EOF.
            bool next(std::vector<std::string> &tokens)
            {
                std::string line;
                while (std::getline(in, line)) {
                    ++line_number;
                    const auto start = line.find_first_not_of(" \t\r");
                    if (start == std::string::npos || line[start] == '#')
                        continue;
                    tokens.clear();
                    std::istringstream fields(line);
                    std::string token;
                    while (fields >> token)
                        tokens.push_back(token);
                    return true;
                }
                return false;
            }

            [[noreturn]] void fail(const std::string &message) const
            {
                throw DomainError("line " + std::to_string(line_number) + ": " + message);
            }

            std::uint64_t number(const std::string &token) const
            {
                std::uint64_t value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc{} || ptr != token.data() + token.size())
                    fail("expected a non-negative integer, got '" + token + "'");
                return value;
            }

            Vertex vertex(const std::string &token, std::size_t n) const
            {
                const auto v = number(token);
                if (v >= n)
                    fail("vertex " + token + " out of range");
                return static_cast<Vertex>(v);
            }

            std::pair<std::size_t, std::size_t> header(char tag)
            {
                std::vector<std::string> tokens;
                if (!next(tokens))
                    fail(std::string("missing '") + tag + "' header");
                if (tokens.size() < 3 || tokens[0] != std::string(1, tag))
                    fail(std::string("expected header '") + tag + " <count> <count>'");
                return {number(tokens[1]), number(tokens[2])};
            }

            void expect_end()
            {
                std::vector<std::string> tokens;
                if (next(tokens))
                    fail("unexpected trailing content");
            }
        };

        void write_ids(std::ostream &out, std::span<const Vertex> ids)
        {
            for (std::size_t i = 0; i < ids.size(); ++i)
                out << (i ? " " : "") << ids[i];
            out << '\n';
        }
    } // namespace

    void write_graph(std::ostream &out, const Graph &g)
    {
        out << "g " << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    Graph read_graph(std::istream &in)
    {
        LineReader reader{in};
        auto [n, m] = reader.header('g');
        std::vector<Edge> edges;
        edges.reserve(m);
        std::vector<std::string> tokens;
        for (std::size_t i = 0; i < m; ++i) {
            if (!reader.next(tokens))
                reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
            if (tokens.size() != 2)
                reader.fail("edge line must be '<u> <v>'");
            const Vertex u = reader.vertex(tokens[0], n);
            const Vertex v = reader.vertex(tokens[1], n);
            if (u >= v)
                reader.fail("edge endpoints must satisfy u < v");
            edges.emplace_back(u, v);
        }
        reader.expect_end();
        Graph g(n, edges);
        if (g.size() != m)
            throw DomainError("graph file lists a repeated edge");
        return g;
    }

    void write_planted(std::ostream &out, const Graph &g, const VertexSet &clique)
    {
        write_graph(out, g);
        out << "# clique:";
        for (Vertex v : clique)
            out << ' ' << v;
        out << '\n';
    }

    std::optional<VertexSet> read_clique_annotation(std::istream &in)
    {
        const std::string marker = "# clique:";
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind(marker, 0) == 0) {
                std::istringstream ids(line.substr(marker.size()));
                VertexSet clique;
                std::uint64_t v = 0;
                while (ids >> v)
                    clique.push_back(static_cast<Vertex>(v));
                return clique;
            }
        }
        return std::nullopt;
    }

    std::string format_rational(const Rational &r)
    {
        // decimal when the denominator is 2^a 5^b, p/q otherwise
        auto den = r.denominator();
        int twos = 0, fives = 0;
        while (den % 2 == 0) {
            den /= 2;
            ++twos;
        }
        while (den % 5 == 0) {
            den /= 5;
            ++fives;
        }
        if (den != 1)
            return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
        const int digits = std::max(twos, fives);
        std::int64_t scale = 1;
        for (int i = 0; i < digits; ++i)
            scale *= 10;
        const std::int64_t scaled = r.numerator() * (scale / r.denominator());
        const bool negative = scaled < 0;
        const std::int64_t magnitude = negative ? -scaled : scaled;
        std::string text = std::to_string(magnitude / scale);
        if (digits > 0) {
            std::string fraction = std::to_string(magnitude % scale);
            fraction.insert(0, static_cast<std::size_t>(digits) - fraction.size(), '0');
            text += "." + fraction;
        }
        return negative ? "-" + text : text;
    }

    Rational parse_rational(std::string_view text)
    {
        auto bad = [&] { return DomainError("cannot parse '" + std::string(text) + "' as a rational number"); };
        auto integer = [&](std::string_view digits) {
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
                throw bad();
            return value;
        };
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            const auto den = integer(text.substr(slash + 1));
            if (den == 0)
                throw bad();
            return Rational(integer(text.substr(0, slash)), den);
        }
        const auto dot = text.find('.');
        if (dot == std::string_view::npos)
            return Rational(integer(text));
        const std::string_view whole = text.substr(0, dot);
        const std::string_view fraction = text.substr(dot + 1);
        if (fraction.size() > 15 || fraction.find_first_not_of("0123456789") != std::string_view::npos)
            throw bad();
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < fraction.size(); ++i)
            scale *= 10;
        const bool negative = !whole.empty() && whole[0] == '-';
        const std::int64_t int_part = whole.empty() || whole == "-" ? 0 : integer(whole);
        const std::int64_t frac_part = fraction.empty() ? 0 : integer(fraction);
        const std::int64_t magnitude = (negative ? -int_part : int_part) * scale + frac_part;
        return Rational(negative ? -magnitude : magnitude, scale);
    }

    void write_digraph(std::ostream &out, const WeightedDigraph &d)
    {
        out << "d " << d.order() << ' ' << d.arcs().size() << '\n';
        for (const auto &arc : d.arcs())
            out << arc.from << ' ' << arc.to << ' ' << format_rational(arc.weight) << '\n';
    }

    WeightedDigraph read_digraph(std::istream &in)
    {
        LineReader reader{in};
        auto [n, m] = reader.header('d');
        std::vector<Arc> arcs;
        std::vector<std::string> tokens;
        for (std::size_t i = 0; i < m; ++i) {
            if (!reader.next(tokens))
                reader.fail("expected " + std::to_string(m) + " arcs, found " + std::to_string(i));
            if (tokens.size() != 3)
                reader.fail("arc line must be '<u> <v> <w>'");
            arcs.push_back({reader.vertex(tokens[0], n), reader.vertex(tokens[1], n), parse_rational(tokens[2])});
        }
        reader.expect_end();
        return WeightedDigraph(n, std::move(arcs));
    }

    void write_hypergraph(std::ostream &out, const Hypergraph &h)
    {
        out << "h " << h.order() << ' ' << h.size() << '\n';
        for (const auto &e : h.hyperedges())
            write_ids(out, e);
    }

    Hypergraph read_hypergraph(std::istream &in)
    {
        LineReader reader{in};
        auto [n, m] = reader.header('h');
        std::vector<VertexSet> edges;
        std::vector<std::string> tokens;
        for (std::size_t i = 0; i < m; ++i) {
            if (!reader.next(tokens))
                reader.fail("expected " + std::to_string(m) + " hyperedges, found " + std::to_string(i));
            VertexSet e;
            for (const auto &t : tokens)
                e.push_back(reader.vertex(t, n));
            edges.push_back(std::move(e));
        }
        reader.expect_end();
        return Hypergraph(n, std::move(edges));
    }

    void write_family(std::ostream &out, const SubsetFamily &family)
    {
        out << "f " << family.size() << ' ' << family.ell << '\n';
        out << "# source_n: " << family.source_n << '\n';
        for (const auto &s : family.sets)
            write_ids(out, s);
    }

    SubsetFamily read_family(std::istream &in)
    {
        // source_n comment has to be seen before LineReader skips it
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        std::optional<std::size_t> source_n;
        if (auto pos = text.find("# source_n:"); pos != std::string::npos)
            source_n = std::stoull(text.substr(pos + 11));

        std::istringstream body(text);
        LineReader reader{body};
        auto [count, ell] = reader.header('f');
        SubsetFamily family{0, ell, {}};
        std::vector<std::string> tokens;
        std::size_t largest = 0;
        const std::size_t limit = source_n.value_or(std::numeric_limits<Vertex>::max());
        for (std::size_t i = 0; i < count; ++i) {
            if (!reader.next(tokens))
                reader.fail("expected " + std::to_string(count) + " sets, found " + std::to_string(i));
            VertexSet s;
            for (const auto &t : tokens) {
                s.push_back(reader.vertex(t, limit));
                largest = std::max<std::size_t>(largest, s.back() + 1);
            }
            if (s.empty() || s.size() > ell)
                reader.fail("each set must hold between 1 and ell ids");
            family.sets.push_back(normalize(s, limit));
        }
        reader.expect_end();
        family.source_n = source_n.value_or(largest);
        return family;
    }

    std::string to_string(const Graph &g)
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }

    void atomic_write(const std::filesystem::path &path, std::string_view contents)
    {
        auto dir = path.parent_path();
        if (dir.empty())
            dir = ".";
        std::random_device entropy;
        const auto temp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(entropy()));
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open " + temp.string() + " for writing");
            out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            out.flush();
            if (!out) {
                std::error_code ignored;
                std::filesystem::remove(temp, ignored);
                throw std::runtime_error("failed writing " + temp.string());
            }
        }
        std::filesystem::rename(temp, path);
    }

    std::string read_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open " + path.string());
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
} // namespace cliquelab
