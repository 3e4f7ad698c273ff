#include <cliquelab/cli.hpp>
#include <cliquelab/ensembles.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/io.hpp>
#include <cliquelab/oracles.hpp>
#include <cliquelab/params.hpp>
#include <cliquelab/reductions.hpp>
#include <cliquelab/rgp.hpp>
#include <cliquelab/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cliquelab
{
    namespace
    {
        using json = nlohmann::json;

        constexpr int kUsage = 1;
        constexpr int kInvariant = 3;
        constexpr int kInfeasible = 4;

        struct Settings
        {
            // gen / rgp
            std::size_t n = 0;
            double p = 0.5;
            std::size_t kappa = 0;
            std::uint64_t seed = 0;
            std::size_t N = 0;
            std::size_t ell = 0;
            std::size_t k = 0;
            std::size_t t = 0;
            std::size_t r = 0;
            std::string in;
            std::string out;
            std::string family_out;
            std::string pattern;
            std::string demands;
            std::string cert;
            std::vector<Vertex> rainbow;
            std::vector<Vertex> left;
            std::vector<Vertex> right;
            std::vector<Vertex> set;
            bool induced = false;
            // params
            std::string delta = "1/2";
            std::string C;
            std::string g;
            // verify
            CompletenessConfig completeness;
            std::string completeness_delta = "1/2";
            SoundnessConfig soundness;
            std::size_t planted = 0;
            DisperserConfig disperser;
            std::string disperser_delta = "1/2";
            Lemma44Config lemma44;
            AveragingConfig averaging;
            std::string csv;
            std::string json_out;
            std::string format = "json";
            // report
            std::vector<std::string> inputs;
            std::string long_csv;
            // global
            std::int64_t budget_ms = 0;
            std::size_t threads = 0;
        };

        Budget make_budget(const Settings &s)
        {
            if (s.budget_ms > 0)
                return Budget(enumeration_cap(), std::chrono::milliseconds(s.budget_ms));
            return Budget();
        }

        // Every option the user set on the active subcommand chain.
        json run_config(const CLI::App &app)
        {
            json config;
            config["version"] = CLIQUELAB_VERSION;
            json chain = json::array();
            json parameters = json::object();
            std::vector<const CLI::App *> apps{&app};
            for (const CLI::App *current = &app;;) {
                auto subs = current->get_subcommands();
                if (subs.empty())
                    break;
                current = subs.front();
                chain.push_back(current->get_name());
                apps.push_back(current);
            }
            for (const CLI::App *a : apps)
                for (const CLI::Option *opt : a->get_options()) {
                    if (opt->count() == 0 || opt->get_name() == "--help")
                        continue;
                    auto results = opt->results();
                    std::string name = opt->get_name();
                    while (!name.empty() && name.front() == '-')
                        name.erase(name.begin());
                    if (results.size() == 1)
                        parameters[name] = results.front();
                    else
                        parameters[name] = results;
                }
            config["subcommand"] = chain;
            config["parameters"] = parameters;
            return config;
        }

        std::string provenance_line(const json &config) { return "# run: " + config.dump() + "\n"; }

        void emit(const std::string &path, const std::string &text, std::ostream &out)
        {
            if (path.empty() || path == "-")
                out << text;
            else
                atomic_write(path, text);
        }

        Graph load_graph(const std::string &path)
        {
            std::istringstream in(read_file(path));
            return read_graph(in);
        }

        json set_json(const VertexSet &s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

        json certificate_json(const ReductionCertificate &c, const json &config)
        {
            json out{{"reduction", c.reduction}, {"run", config}, {"complemented", c.complemented}};
            out["seed"] = c.seed ? json(c.seed->value) : json(nullptr);
            json params = json::object();
            for (const auto &[key, value] : c.parameters)
                params[key] = value;
            out["parameters"] = params;
            out["labels"] = c.labels;
            return out;
        }

        std::vector<Demand> demands_from(const json &doc)
        {
            std::vector<Demand> demands;
            for (const auto &d : doc.at("demands"))
                demands.emplace_back(d.at(0).get<Vertex>(), d.at(1).get<Vertex>());
            return demands;
        }

        // -------------------------------------------------------------- gen
        void add_gen(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *gen = app.add_subcommand("gen", "Sample a random instance");
            gen->require_subcommand(1);

            auto *er = gen->add_subcommand("er", "Erdos-Renyi G(n, p)");
            er->add_option("--n", s.n, "Vertices")->required();
            er->add_option("--p", s.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
            er->add_option("--seed", s.seed, "Seed");
            er->add_option("--out", s.out, "Output graph file (default stdout)");
            er->callback([&, er] {
                action = [&, er] {
                    const Graph g = sample_er(s.n, s.p, Seed{s.seed});
                    emit(s.out, provenance_line(run_config(*er->get_parent()->get_parent())) + to_string(g), out);
                    return 0;
                };
            });

            auto *planted = gen->add_subcommand("planted", "G(n, p) plus a planted kappa-clique");
            planted->add_option("--n", s.n, "Vertices")->required();
            planted->add_option("--p", s.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
            planted->add_option("--kappa", s.kappa, "Clique size")->required();
            planted->add_option("--seed", s.seed, "Seed");
            planted->add_option("--out", s.out, "Output file (default stdout)");
            planted->callback([&, planted] {
                action = [&, planted] {
                    const PlantedInstance inst = sample_planted(s.n, s.p, s.kappa, Seed{s.seed});
                    std::ostringstream text;
                    text << provenance_line(run_config(*planted->get_parent()->get_parent()));
                    write_planted(text, inst.graph, inst.clique);
                    emit(s.out, text.str(), out);
                    return 0;
                };
            });

            auto *pattern = gen->add_subcommand("pattern", "Random k-vertex pattern G(k, 1/2)");
            pattern->add_option("--k", s.k, "Vertices")->required();
            pattern->add_option("--seed", s.seed, "Seed");
            pattern->add_option("--out", s.out, "Output graph file (default stdout)");
            pattern->callback([&, pattern] {
                action = [&, pattern] {
                    const Graph g = sample_pattern(s.k, Seed{s.seed});
                    emit(s.out, provenance_line(run_config(*pattern->get_parent()->get_parent())) + to_string(g), out);
                    return 0;
                };
            });
        }

        // -------------------------------------------------------------- rgp
        void add_rgp(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *cmd = app.add_subcommand("rgp", "Randomized graph product of a graph");
            cmd->add_option("--in", s.in, "Source graph file")->required()->check(CLI::ExistingFile);
            cmd->add_option("--N", s.N, "Number of subsets")->required();
            cmd->add_option("--ell", s.ell, "Draws per subset")->required();
            cmd->add_option("--seed", s.seed, "Seed");
            cmd->add_option("--out", s.out, "Product graph file (default stdout)");
            cmd->add_option("--family-out", s.family_out, "Subset family file");
            cmd->callback([&, cmd] {
                action = [&, cmd] {
                    const Graph g = load_graph(s.in);
                    const ProductGraph product = rgp(g, s.N, s.ell, Seed{s.seed});
                    const std::string header = provenance_line(run_config(*cmd->get_parent()));
                    std::ostringstream family;
                    family << header;
                    write_family(family, product.family);
                    const std::string graph_text = header + to_string(product.graph);
                    if (!s.family_out.empty())
                        atomic_write(s.family_out, family.str());
                    emit(s.out, graph_text, out);
                    return 0;
                };
            });
        }

        // -------------------------------------------------------------- solve
        void add_solve(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *solve = app.add_subcommand("solve", "Exact oracles");
            solve->require_subcommand(1);

            auto finish = [&s, &out](CLI::App *cmd, json result) {
                result["run"] = run_config(*cmd->get_parent()->get_parent());
                emit(s.out, result.dump(2) + "\n", out);
                return 0;
            };
            auto graph_cmd = [&](const char *name, const char *help) {
                auto *cmd = solve->add_subcommand(name, help);
                cmd->add_option("--in", s.in, "Graph file")->required()->check(CLI::ExistingFile);
                cmd->add_option("--out", s.out, "Result JSON (default stdout)");
                return cmd;
            };

            auto *mc = graph_cmd("max-clique", "Maximum clique");
            mc->callback([&, mc, finish] {
                action = [&, mc, finish] {
                    const VertexSet c = max_clique(load_graph(s.in), make_budget(s));
                    return finish(mc, {{"clique", set_json(c)}, {"size", c.size()}});
                };
            });

            auto *dks = graph_cmd("dks", "Densest k-subgraph");
            dks->add_option("--k", s.k, "Subset size")->required();
            dks->callback([&, dks, finish] {
                action = [&, dks, finish] {
                    const DksResult r = densest_k_subgraph(load_graph(s.in), s.k, make_budget(s));
                    return finish(dks, {{"vertices", set_json(r.vertices)}, {"edges", r.edges}});
                };
            });

            auto *den = graph_cmd("den-leq-k", "Maximum density over at most k vertices");
            den->add_option("--k", s.k, "Size bound")->required();
            den->callback([&, den, finish] {
                action = [&, den, finish] {
                    const DensityResult r = densest_at_most_k(load_graph(s.in), s.k, make_budget(s));
                    return finish(den, {{"density", format_rational(r.density)}, {"vertices", set_json(r.vertices)}});
                };
            });

            auto *bic = graph_cmd("biclique", "Maximum balanced biclique");
            bic->callback([&, bic, finish] {
                action = [&, bic, finish] {
                    const Biclique b = max_balanced_biclique(load_graph(s.in), make_budget(s));
                    return finish(bic, {{"left", set_json(b.left)}, {"right", set_json(b.right)}, {"size", b.size()}});
                };
            });

            auto *cb = graph_cmd("count-bicliques", "Ordered K_{ell,ell} copies");
            cb->add_option("--ell", s.ell, "Side size")->required();
            cb->callback([&, cb, finish] {
                action = [&, cb, finish] {
                    const BigInt c = count_bicliques(load_graph(s.in), s.ell, make_budget(s));
                    return finish(cb, {{"count", c.str()}});
                };
            });

            auto *ktt = graph_cmd("ktt", "Find a K_{t,t}");
            ktt->add_option("--t", s.t, "Side size")->required();
            ktt->callback([&, ktt, finish] {
                action = [&, ktt, finish] {
                    const auto b = find_ktt(load_graph(s.in), s.t, make_budget(s));
                    json r{{"contains", b.has_value()}};
                    if (b) {
                        r["left"] = set_json(b->left);
                        r["right"] = set_json(b->right);
                    }
                    return finish(ktt, r);
                };
            });

            auto *cc = graph_cmd("count-cliques", "Number of r-cliques");
            cc->add_option("--r", s.r, "Clique size")->required();
            cc->callback([&, cc, finish] {
                action = [&, cc, finish] { return finish(cc, {{"count", count_cliques(load_graph(s.in), s.r, make_budget(s))}}); };
            });

            auto *skes = graph_cmd("skes", "Smallest vertex set inducing at least k edges");
            skes->add_option("--k", s.k, "Edge target")->required();
            skes->callback([&, skes, finish] {
                action = [&, skes, finish] {
                    const VertexSet v = smallest_k_edge_subgraph(load_graph(s.in), s.k, make_budget(s));
                    return finish(skes, {{"vertices", set_json(v)}, {"size", v.size()}});
                };
            });

            auto *sf = graph_cmd("steiner-forest", "Steiner k-forest (unit weights unless given)");
            sf->add_option("--demands", s.demands, "JSON with \"demands\" (and optional \"k\", \"weights\")")
                ->required()
                ->check(CLI::ExistingFile);
            sf->add_option("--k", s.k, "Pairs to connect (overrides the JSON)");
            sf->callback([&, sf, finish] {
                action = [&, sf, finish] {
                    const json doc = json::parse(read_file(s.demands));
                    SteinerForestInstance inst;
                    inst.graph = load_graph(s.in);
                    inst.demands = demands_from(doc);
                    inst.k = sf->count("--k") ? s.k : doc.value("k", inst.demands.size());
                    if (doc.contains("weights"))
                        for (const auto &w : doc["weights"])
                            inst.weights.push_back(parse_rational(w.get<std::string>()));
                    else
                        inst.weights.assign(inst.graph.size(), Rational(1));
                    const SteinerForestSolution sol = steiner_k_forest(inst, make_budget(s));
                    json edges = json::array();
                    for (auto [u, v] : sol.edges)
                        edges.push_back({u, v});
                    return finish(sf, {{"edges", edges}, {"cost", format_rational(sol.cost)}});
                };
            });

            auto *dsn = solve->add_subcommand("dsn", "Directed Steiner network");
            dsn->add_option("--in", s.in, "Digraph file")->required()->check(CLI::ExistingFile);
            dsn->add_option("--demands", s.demands, "JSON with \"demands\"")->required()->check(CLI::ExistingFile);
            dsn->add_option("--out", s.out, "Result JSON (default stdout)");
            dsn->callback([&, dsn, finish] {
                action = [&, dsn, finish] {
                    std::istringstream text(read_file(s.in));
                    DsnInstance inst{read_digraph(text), demands_from(json::parse(read_file(s.demands)))};
                    const DsnSolution sol = directed_steiner_network(inst, make_budget(s));
                    return finish(dsn, {{"arcs", sol.arcs}, {"cost", format_rational(sol.cost)}});
                };
            });

            auto *dksh = solve->add_subcommand("dksh", "Densest k-subhypergraph");
            dksh->add_option("--in", s.in, "Hypergraph file")->required()->check(CLI::ExistingFile);
            dksh->add_option("--k", s.k, "Subset size")->required();
            dksh->add_option("--out", s.out, "Result JSON (default stdout)");
            dksh->callback([&, dksh, finish] {
                action = [&, dksh, finish] {
                    std::istringstream text(read_file(s.in));
                    const DkshResult r = densest_k_subhypergraph(read_hypergraph(text), s.k, make_budget(s));
                    return finish(dksh, {{"vertices", set_json(r.vertices)}, {"hyperedges", r.hyperedges}});
                };
            });

            auto *pat = graph_cmd("pattern", "Detect a copy of a pattern graph");
            pat->add_option("--pattern", s.pattern, "Pattern graph file")->required()->check(CLI::ExistingFile);
            pat->add_flag("--induced", s.induced, "Require an induced copy");
            pat->callback([&, pat, finish] {
                action = [&, pat, finish] {
                    const auto m = detect_pattern(load_graph(s.in), load_graph(s.pattern), s.induced, make_budget(s));
                    json r{{"found", m.has_value()}};
                    if (m)
                        r["mapping"] = *m;
                    return finish(pat, r);
                };
            });
        }

        // -------------------------------------------------------------- reduce
        void add_reduce(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *reduce = app.add_subcommand("reduce", "Instance reductions and extraction maps");
            reduce->require_subcommand(1);

            auto base = [&](const char *name, const char *help) {
                auto *cmd = reduce->add_subcommand(name, help);
                cmd->add_option("--in", s.in, "Source graph file")->required()->check(CLI::ExistingFile);
                cmd->add_option("--out", s.out, "Target instance file (default stdout)");
                cmd->add_option("--cert", s.cert, "Certificate JSON file");
                return cmd;
            };
            auto write_pair = [&s, &out](CLI::App *cmd, const std::string &instance, json cert) {
                const json config = run_config(*cmd->get_parent()->get_parent());
                cert["run"] = config;
                if (!s.cert.empty())
                    atomic_write(s.cert, cert.dump(2) + "\n");
                emit(s.out, provenance_line(config) + instance, out);
                return 0;
            };

            auto *star = base("skes-to-steiner-forest", "Star instance whose demands are the edges");
            star->add_option("--k", s.k, "Edge target")->required();
            star->callback([&, star, write_pair] {
                action = [&, star, write_pair] {
                    const StarReduction r = skes_to_steiner_forest(load_graph(s.in), s.k);
                    json cert = certificate_json(r.certificate, {});
                    json demands = json::array();
                    for (auto [u, v] : r.instance.demands)
                        demands.push_back({u, v});
                    cert["demands"] = demands;
                    cert["k"] = r.instance.k;
                    return write_pair(star, to_string(r.instance.graph), cert);
                };
            });

            auto *dsn = base("skes-to-dsn", "Two-layer directed gadget over a random partition");
            dsn->add_option("--k", s.k, "Parts")->required();
            dsn->add_option("--seed", s.seed, "Seed");
            dsn->add_option("--rainbow", s.rainbow, "k vertices forced into distinct parts");
            dsn->callback([&, dsn, write_pair] {
                action = [&, dsn, write_pair] {
                    std::optional<VertexSet> rainbow;
                    if (dsn->count("--rainbow"))
                        rainbow = VertexSet(s.rainbow.begin(), s.rainbow.end());
                    const DsnReduction r = skes_to_dsn(load_graph(s.in), s.k, Seed{s.seed}, rainbow);
                    json cert = certificate_json(r.certificate, {});
                    json demands = json::array();
                    for (auto [a, b] : r.instance.demands)
                        demands.push_back({a, b});
                    cert["demands"] = demands;
                    std::ostringstream text;
                    write_digraph(text, r.instance.digraph);
                    return write_pair(dsn, text.str(), cert);
                };
            });

            auto *hyp = base("biclique-to-dksh", "Hypergraph of 2*ell-cliques");
            hyp->add_option("--k", s.k, "Biclique size")->required();
            hyp->add_option("--ell", s.ell, "Half the clique size")->required();
            hyp->callback([&, hyp, write_pair] {
                action = [&, hyp, write_pair] {
                    const HypergraphReduction r = biclique_to_dksh(load_graph(s.in), s.k, s.ell, make_budget(s));
                    std::ostringstream text;
                    write_hypergraph(text, r.hypergraph);
                    return write_pair(hyp, text.str(), certificate_json(r.certificate, {}));
                };
            });

            auto *pat = base("dks-to-induced-pattern", "Color-filtered graph for induced pattern detection");
            pat->add_option("--pattern", s.pattern, "Pattern graph H")->required()->check(CLI::ExistingFile);
            pat->add_option("--seed", s.seed, "Seed");
            pat->add_option("--rainbow", s.rainbow, "|V(H)| vertices receiving colors 0..k-1");
            pat->callback([&, pat, write_pair] {
                action = [&, pat, write_pair] {
                    std::optional<VertexSet> rainbow;
                    if (pat->count("--rainbow"))
                        rainbow = VertexSet(s.rainbow.begin(), s.rainbow.end());
                    const ColoringReduction r =
                        dks_to_induced_pattern(load_graph(s.in), load_graph(s.pattern), Seed{s.seed}, rainbow);
                    return write_pair(pat, to_string(r.reduced), certificate_json(r.certificate, {}));
                };
            });

            auto *fromb = reduce->add_subcommand("dks-from-biclique", "Pad a biclique to k vertices");
            fromb->add_option("--in", s.in, "Graph file")->required()->check(CLI::ExistingFile);
            fromb->add_option("--k", s.k, "Target size")->required();
            fromb->add_option("--left", s.left, "Left side")->required();
            fromb->add_option("--right", s.right, "Right side")->required();
            fromb->add_option("--out", s.out, "Result JSON (default stdout)");
            fromb->callback([&, fromb, write_pair] {
                action = [&, fromb, write_pair] {
                    const Graph g = load_graph(s.in);
                    Biclique b{VertexSet(s.left.begin(), s.left.end()), VertexSet(s.right.begin(), s.right.end())};
                    const VertexSet v = dks_from_biclique(g, s.k, b);
                    json r{{"vertices", set_json(v)}, {"edges", edges_within(g, v)},
                           {"run", run_config(*fromb->get_parent()->get_parent())}};
                    emit(s.out, r.dump(2) + "\n", out);
                    return 0;
                };
            });

            auto *viaskes = reduce->add_subcommand("dks-via-skes", "Best k-subset of a SkES solution");
            viaskes->add_option("--in", s.in, "Graph file")->required()->check(CLI::ExistingFile);
            viaskes->add_option("--k", s.k, "Target size")->required();
            viaskes->add_option("--set", s.set, "SkES solution vertices")->required();
            viaskes->add_option("--out", s.out, "Result JSON (default stdout)");
            viaskes->callback([&, viaskes, write_pair] {
                action = [&, viaskes, write_pair] {
                    const Graph g = load_graph(s.in);
                    const VertexSet sol(s.set.begin(), s.set.end());
                    const VertexSet v = dks_via_skes(g, s.k, sol, make_budget(s));
                    const VertexSet norm = normalize(sol, g.order());
                    json r{{"vertices", set_json(v)},
                           {"edges", edges_within(g, v)},
                           {"averaging_bound", averaging_bound(s.k, norm.size(), edges_within(g, norm))},
                           {"run", run_config(*viaskes->get_parent()->get_parent())}};
                    emit(s.out, r.dump(2) + "\n", out);
                    return 0;
                };
            });
        }

        // -------------------------------------------------------------- verify
        void add_verify(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *verify = app.add_subcommand("verify", "Lemma harnesses");
            verify->require_subcommand(1);

            auto common = [&s](CLI::App *cmd, std::size_t &trials, Seed &seed) {
                cmd->add_option("--trials", trials, "Trials")->capture_default_str();
                cmd->add_option("--seed", seed.value, "Seed")->capture_default_str();
                cmd->add_option("--csv", s.csv, "Per-trial CSV file");
                cmd->add_option("--json", s.json_out, "JSON summary file");
                cmd->add_option("--format", s.format, "Format on stdout")->check(CLI::IsMember({"json", "csv"}));
            };
            auto deliver = [&s, &out](CLI::App *cmd, TrialReport report) {
                report.config["run"] = run_config(*cmd->get_parent()->get_parent());
                const std::string csv = report.csv();
                const std::string summary = report.summary().dump(2) + "\n";
                if (!s.csv.empty())
                    atomic_write(s.csv, csv);
                if (!s.json_out.empty())
                    atomic_write(s.json_out, summary);
                out << (s.format == "csv" ? csv : summary);
                return exit_code(report.verdict);
            };

            auto &cc = s.completeness;
            auto *comp = verify->add_subcommand("completeness", "Planted clique survives the product");
            comp->add_option("--n", cc.n)->capture_default_str();
            comp->add_option("--delta", s.completeness_delta)->capture_default_str();
            comp->add_option("--ell", cc.ell)->capture_default_str();
            comp->add_option("--N", cc.N)->capture_default_str();
            comp->add_option("--k", cc.k)->capture_default_str();
            common(comp, cc.trials, cc.seed);
            comp->callback([&, comp, deliver] {
                action = [&, comp, deliver] {
                    cc.delta = parse_rational(s.completeness_delta);
                    return deliver(comp, verify_completeness(cc, {s.threads}));
                };
            });

            auto &sc = s.soundness;
            auto *snd = verify->add_subcommand("soundness", "Product edge rule, implied edges, den_{<=k}");
            snd->add_option("--n", sc.n)->capture_default_str();
            snd->add_option("--ell", sc.ell)->capture_default_str();
            snd->add_option("--N", sc.N)->capture_default_str();
            snd->add_option("--k", sc.k)->capture_default_str();
            snd->add_option("--kappa", s.planted, "Planted clique size (null model if absent)");
            snd->add_option("--index-sets", sc.index_sets_per_trial, "Index sets sampled per trial")
                ->capture_default_str();
            common(snd, sc.trials, sc.seed);
            snd->callback([&, snd, deliver] {
                action = [&, snd, deliver] {
                    if (snd->count("--kappa"))
                        sc.kappa = s.planted;
                    return deliver(snd, verify_soundness_structure(sc, {s.threads}));
                };
            });

            auto &dc = s.disperser;
            auto *disp = verify->add_subcommand("disperser", "Union sizes of small index sets");
            disp->add_option("--n", dc.n)->capture_default_str();
            disp->add_option("--ell", dc.ell)->capture_default_str();
            disp->add_option("--N", dc.N)->capture_default_str();
            disp->add_option("--delta", s.disperser_delta)->capture_default_str();
            disp->add_option("--max-set-size", dc.max_set_size)->capture_default_str();
            common(disp, dc.trials, dc.seed);
            disp->callback([&, disp, deliver] {
                action = [&, disp, deliver] {
                    dc.delta = parse_rational(s.disperser_delta);
                    return deliver(disp, verify_disperser(dc, {s.threads}));
                };
            });

            auto &lc = s.lemma44;
            auto *l44 = verify->add_subcommand("lemma44", "Biclique counts in K_{t,t}-free graphs");
            l44->add_option("--kappa", lc.kappa)->capture_default_str();
            l44->add_option("--t", lc.t)->capture_default_str();
            l44->add_option("--ell", lc.ell)->capture_default_str();
            l44->add_option("--graph", s.in, "Explicit graph instead of random samples")->check(CLI::ExistingFile);
            l44->add_option("--retries", lc.max_retries)->capture_default_str();
            common(l44, lc.trials, lc.seed);
            l44->callback([&, l44, deliver] {
                action = [&, l44, deliver] {
                    if (!s.in.empty())
                        lc.graph = load_graph(s.in);
                    return deliver(l44, verify_lemma44(lc, {s.threads}));
                };
            });

            auto &ac = s.averaging;
            auto *avg = verify->add_subcommand("averaging", "Best k-subset versus the averaging bound");
            avg->add_option("--n", ac.n)->capture_default_str();
            avg->add_option("--s", ac.s)->capture_default_str();
            avg->add_option("--k", ac.k)->capture_default_str();
            common(avg, ac.trials, ac.seed);
            avg->callback([&, avg, deliver] {
                action = [&, avg, deliver] { return deliver(avg, verify_averaging_trials(ac, {s.threads})); };
            });
        }

        // -------------------------------------------------------------- params
        void add_params(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *cmd = app.add_subcommand("params", "Product parameters for a DkS hardness instantiation");
            cmd->add_option("--n", s.n, "Source vertices")->required();
            cmd->add_option("--delta", s.delta, "Clique exponent, decimal or p/q")->required();
            cmd->add_option("--k", s.k, "Clique size")->required();
            auto *c = cmd->add_option("--C", s.C, "Constant approximation factor");
            auto *g = cmd->add_option("--g", s.g, "Ratio value g(k)");
            c->excludes(g);
            cmd->add_option("--out", s.out, "Output file (default stdout)");
            cmd->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
            cmd->callback([&, cmd] {
                s.format = cmd->count("--format") ? s.format : "text";
                action = [&, cmd] {
                    ApproxTarget target;
                    if (!s.g.empty()) {
                        target.kind = ApproxTarget::Kind::ratio;
                        target.value = parse_big_rational(s.g);
                    } else {
                        target.value = parse_big_rational(s.C.empty() ? "1" : s.C);
                    }
                    const RgpParams p = paper_params(s.n, parse_big_rational(s.delta), s.k, target);
                    json conditions = json::array();
                    for (const auto &sc : p.conditions)
                        conditions.push_back({{"name", sc.name}, {"holds", sc.holds}, {"method", sc.method}});
                    std::ostringstream d;
                    d << std::setprecision(12) << p.d;
                    std::ostringstream log2n;
                    log2n << std::setprecision(12) << p.log2_N;
                    json doc{{"ell", p.ell.str()},
                             {"exponent", p.exponent.str()},
                             {"N", p.N_exact ? json(p.N_exact->str()) : json(nullptr)},
                             {"log2_N", log2n.str()},
                             {"d", d.str()},
                             {"d_exact", p.d_exact ? json(p.d_exact->str()) : json(nullptr)},
                             {"conditions", conditions},
                             {"all_conditions_hold", p.all_conditions_hold()},
                             {"run", run_config(*cmd->get_parent())}};
                    std::ostringstream text;
                    if (s.format == "json") {
                        text << doc.dump(2) << '\n';
                    } else {
                        text << "# run: " << doc["run"].dump() << '\n';
                        text << "ell = " << p.ell.str() << '\n';
                        text << "exponent = " << p.exponent.str() << '\n';
                        if (p.N_exact && p.N_exact->str().size() <= 80)
                            text << "N = " << p.N_exact->str() << '\n';
                        text << "log2(N) = " << log2n.str() << '\n';
                        text << "d = " << d.str() << '\n';
                        for (const auto &sc : p.conditions)
                            text << "[" << (sc.holds ? "ok" : "VIOLATED") << "] " << sc.name << " (" << sc.method
                                 << ")\n";
                    }
                    emit(s.out, text.str(), out);
                    return 0;
                };
            });
        }

        // -------------------------------------------------------------- report
        void add_report(CLI::App &app, Settings &s, std::function<int()> &action, std::ostream &out)
        {
            auto *cmd = app.add_subcommand("report", "Merge per-trial CSVs into a summary");
            cmd->add_option("inputs", s.inputs, "Trial CSV files")->check(CLI::ExistingFile);
            cmd->add_option("--out", s.out, "Summary JSON (default stdout)");
            cmd->add_option("--long-csv", s.long_csv, "Long-format CSV (lemma,run,param,trial,value)");
            cmd->callback([&, cmd] {
                if (s.inputs.empty())
                    throw CLI::ValidationError("inputs", "at least one trial CSV is required");
                action = [&, cmd] {
                    std::vector<std::string> texts;
                    for (const auto &path : s.inputs)
                        texts.push_back(read_file(path));
                    MergedReport merged = merge_reports(texts);
                    merged.summary["run"] = run_config(*cmd->get_parent());
                    if (!s.long_csv.empty())
                        atomic_write(s.long_csv, merged.long_csv);
                    emit(s.out, merged.summary.dump(2) + "\n", out);
                    return 0;
                };
            });
        }
    } // namespace

    int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        Settings s;
        std::function<int()> action;
        CLI::App app{"cliquelab: randomized graph products, exact oracles, reductions and lemma harnesses"};
        app.set_version_flag("--version", std::string(CLIQUELAB_VERSION));
        app.require_subcommand(1);
        app.add_option("--budget-ms", s.budget_ms, "Wall-clock limit for exact searches (0 = none)");
        app.add_option("--threads", s.threads, "Worker threads for trials (0 = all cores)");

        add_gen(app, s, action, out);
        add_rgp(app, s, action, out);
        add_solve(app, s, action, out);
        add_reduce(app, s, action, out);
        add_verify(app, s, action, out);
        add_params(app, s, action, out);
        add_report(app, s, action, out);

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &) {
            out << app.help();
            return 0;
        } catch (const CLI::CallForVersion &) {
            out << CLIQUELAB_VERSION << '\n';
            return 0;
        } catch (const CLI::ParseError &e) {
            if (e.get_exit_code() == 0) {
                // help requested on a subcommand
                out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
                return 0;
            }
            err << "error: " << e.what() << "\nRun with --help for usage.\n";
            return kUsage;
        }

        if (!action) {
            err << app.help();
            return kUsage;
        }
        try {
            return action();
        } catch (const DomainError &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        } catch (const InvariantViolation &e) {
            err << "invariant violated: " << e.what() << '\n';
            return kInvariant;
        } catch (const Infeasible &e) {
            err << "infeasible: " << e.what() << '\n';
            return kInfeasible;
        } catch (const CapExceeded &e) {
            err << "cap exceeded: " << e.what() << '\n';
            return kInfeasible;
        } catch (const Timeout &e) {
            err << "timeout: " << e.what() << '\n';
            return kInfeasible;
        } catch (const nlohmann::json::exception &e) {
            err << "error: bad JSON input: " << e.what() << '\n';
            return kUsage;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }
    }
} // namespace cliquelab
