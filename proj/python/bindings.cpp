#include <cliquelab/ensembles.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/io.hpp>
#include <cliquelab/oracles.hpp>
#include <cliquelab/params.hpp>
#include <cliquelab/reductions.hpp>
#include <cliquelab/rgp.hpp>
#include <cliquelab/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cliquelab;

namespace
{
    py::object fraction(const Rational &r)
    {
        return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
    }

    py::object big_int(const BigInt &x) { return py::int_(py::str(x.str())); }

    py::object to_python(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

    py::dict params_dict(const RgpParams &p)
    {
        py::dict d;
        d["ell"] = big_int(p.ell);
        d["exponent"] = p.exponent.str();
        d["N"] = p.N_exact ? big_int(*p.N_exact) : py::none();
        d["log2_N"] = p.log2_N.convert_to<double>();
        d["d"] = p.d.convert_to<double>();
        py::dict conditions;
        for (const auto &c : p.conditions)
            conditions[py::str(c.name)] = c.holds;
        d["conditions"] = conditions;
        d["all_conditions_hold"] = p.all_conditions_hold();
        return d;
    }
} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "C++ core: graphs, samplers, the randomized graph product, oracles and harnesses";
    m.attr("__version__") = CLIQUELAB_VERSION;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<Infeasible>(m, "Infeasible", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init([](std::size_t n, const std::vector<Edge> &edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_static("complete", &Graph::complete)
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::size)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph &g, Vertex v) {
            auto span = g.neighbors(v);
            return std::vector<Vertex>(span.begin(), span.end());
        })
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
        .def("__str__", [](const Graph &g) { return to_string(g); })
        .def("__repr__", [](const Graph &g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("density", [](const Graph &g) { return fraction(density(g)); });
    m.def("complement", &complement);
    m.def("induced_subgraph", [](const Graph &g, const VertexSet &s) { return induced_subgraph(g, s); });
    m.def("peel_to_min_degree", &peel_to_min_degree);

    m.def("sample_er", [](std::size_t n, double p, std::uint64_t seed) { return sample_er(n, p, Seed{seed}); },
          py::arg("n"), py::arg("p"), py::arg("seed") = 0);
    m.def(
        "sample_planted",
        [](std::size_t n, double p, std::size_t kappa, std::uint64_t seed) {
            auto inst = sample_planted(n, p, kappa, Seed{seed});
            return py::make_tuple(inst.graph, inst.clique);
        },
        py::arg("n"), py::arg("p"), py::arg("kappa"), py::arg("seed") = 0);

    m.def(
        "rgp",
        [](const Graph &g, std::size_t N, std::size_t ell, std::uint64_t seed) {
            auto product = rgp(g, N, ell, Seed{seed});
            return py::make_tuple(product.graph, product.family.sets);
        },
        py::arg("g"), py::arg("N"), py::arg("ell"), py::arg("seed") = 0,
        "Product graph and its subset family (list of sorted vertex lists).");

    m.def("max_clique", [](const Graph &g) { return max_clique(g); });
    m.def("densest_k_subgraph", [](const Graph &g, std::size_t k) {
        auto r = densest_k_subgraph(g, k);
        return py::make_tuple(r.vertices, r.edges);
    });
    m.def("den_leq_k", [](const Graph &g, std::size_t k) { return fraction(den_leq_k(g, k)); });
    m.def("count_bicliques", [](const Graph &g, std::size_t ell) { return big_int(count_bicliques(g, ell)); });
    m.def("contains_ktt", [](const Graph &g, std::size_t t) { return contains_ktt(g, t); });
    m.def("count_cliques", [](const Graph &g, std::size_t r) { return count_cliques(g, r); });
    m.def("smallest_k_edge_subgraph", [](const Graph &g, std::size_t k) { return smallest_k_edge_subgraph(g, k); });
    m.def(
        "detect_pattern",
        [](const Graph &g, const Graph &h, bool induced) { return detect_pattern(g, h, induced); }, py::arg("g"),
        py::arg("pattern"), py::arg("induced") = true);

    m.def(
        "paper_params",
        [](std::uint64_t n, const std::string &delta, std::uint64_t k, const std::string &C) {
            ApproxTarget target;
            target.value = parse_big_rational(C);
            return params_dict(paper_params(n, parse_big_rational(delta), k, target));
        },
        py::arg("n"), py::arg("delta"), py::arg("k"), py::arg("C") = "1",
        "Product parameters; delta and C accept decimals or fractions given as strings.");
    m.def("lemma44_bound", &lemma44_bound, py::arg("kappa"), py::arg("t"), py::arg("ell"));
    m.def("averaging_bound", &averaging_bound, py::arg("k"), py::arg("s"), py::arg("edges"));

    m.def(
        "verify_lemma44",
        [](std::size_t kappa, std::size_t t, std::size_t ell, std::size_t trials, std::uint64_t seed) {
            Lemma44Config c;
            c.kappa = kappa;
            c.t = t;
            c.ell = ell;
            c.trials = trials;
            c.seed = Seed{seed};
            return to_python(verify_lemma44(c, {1}).summary());
        },
        py::arg("kappa") = 32, py::arg("t") = 2, py::arg("ell") = 1, py::arg("trials") = 50, py::arg("seed") = 0);
    m.def(
        "verify_averaging",
        [](std::size_t n, std::size_t s, std::size_t k, std::size_t trials, std::uint64_t seed) {
            return to_python(verify_averaging_trials({n, s, k, trials, Seed{seed}}, {1}).summary());
        },
        py::arg("n") = 12, py::arg("s") = 10, py::arg("k") = 4, py::arg("trials") = 100, py::arg("seed") = 0);
}
