#include <cliquelab/ensembles.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/io.hpp>
#include <cliquelab/oracles.hpp>
#include <cliquelab/params.hpp>
#include <cliquelab/reductions.hpp>
#include <cliquelab/rgp.hpp>
#include <cliquelab/verify.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace cliquelab
{
    namespace
    {
        using json = nlohmann::json;

        void parallel_trials(std::size_t trials, std::size_t threads, const std::function<void(std::size_t)> &body)
        {
            if (threads == 0)
                threads = std::max(1u, std::thread::hardware_concurrency());
            threads = std::min(threads, std::max<std::size_t>(trials, 1));
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_lock;
            auto worker = [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= trials)
                        return;
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure)
                            failure = std::current_exception();
                        next = trials;
                        return;
                    }
                }
            };
            if (threads == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (std::size_t t = 0; t < threads; ++t)
                    pool.emplace_back(worker);
                for (auto &th : pool)
                    th.join();
            }
            if (failure)
                std::rethrow_exception(failure);
        }

        json base_config(const std::string &lemma, std::size_t trials, Seed seed)
        {
            return json{{"lemma", lemma},
                        {"trials", trials},
                        {"seed", seed.value},
                        {"generator", std::string(Rng::kGenerator)},
                        {"version", CLIQUELAB_VERSION},
                        {"confidence", kConfidence},
                        {"margin_policy", "exact one-sided binomial bound"}};
        }

        std::string format_number(double x)
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%.17g", x);
            return buffer;
        }

        Verdict decide(const std::vector<TrialRecord> &trials, const std::optional<double> &claimed, bool diagnostic)
        {
            std::size_t successes = 0;
            for (const auto &t : trials) {
                if (!t.deterministic)
                    return Verdict::invariant_fail;
                successes += t.passed;
            }
            if (diagnostic)
                return Verdict::diagnostic;
            if (trials.empty())
                return Verdict::pass;
            if (claimed)
                return rate_consistent_with(successes, trials.size(), *claimed, kConfidence) ? Verdict::pass
                                                                                             : Verdict::statistical_fail;
            return successes == trials.size() ? Verdict::pass : Verdict::invariant_fail;
        }

        void finalize(TrialReport &report)
        {
            json agg;
            const std::size_t n = report.trials.size();
            const std::size_t s = report.successes();
            agg["trials"] = n;
            agg["successes"] = s;
            agg["rate"] = report.success_rate();
            if (n > 0) {
                agg["rate_lower"] = binomial_lower_bound(s, n, kConfidence);
                agg["rate_upper"] = binomial_upper_bound(s, n, kConfidence);
            }
            agg["claimed_rate"] = report.claimed_rate ? json(*report.claimed_rate) : json(nullptr);
            agg["diagnostic"] = report.diagnostic_mode;

            std::vector<std::string> names;
            for (const auto &t : report.trials)
                for (const auto &[name, value] : t.statistics)
                    if (std::find(names.begin(), names.end(), name) == names.end())
                        names.push_back(name);
            json means = json::object();
            for (const auto &name : names) {
                auto values = report.values(name);
                auto summary = summarize_mean(values, kConfidence);
                means[name] = {{"mean", summary.mean},
                               {"stddev", summary.stddev},
                               {"ci_lower", summary.ci.lower},
                               {"ci_upper", summary.ci.upper},
                               {"min", *std::min_element(values.begin(), values.end())},
                               {"max", *std::max_element(values.begin(), values.end())}};
            }
            agg["statistics"] = means;
            report.aggregates = agg;
            report.verdict = decide(report.trials, report.claimed_rate, report.diagnostic_mode);
        }

        VertexSet merge_sets(const VertexSet &a, const VertexSet &b)
        {
            VertexSet out;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return out;
        }

        std::vector<std::string> split(const std::string &line, char sep)
        {
            std::vector<std::string> parts;
            std::string part;
            std::istringstream in(line);
            while (std::getline(in, part, sep))
                parts.push_back(part);
            if (!line.empty() && line.back() == sep)
                parts.emplace_back();
            return parts;
        }
    } // namespace

    std::string to_string(Verdict v)
    {
        switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::statistical_fail:
            return "statistical_fail";
        case Verdict::invariant_fail:
            return "invariant_fail";
        case Verdict::diagnostic:
            return "diagnostic";
        }
        return "unknown";
    }

    int exit_code(Verdict v)
    {
        switch (v) {
        case Verdict::statistical_fail:
            return 2;
        case Verdict::invariant_fail:
            return 3;
        default:
            return 0;
        }
    }

    std::optional<double> TrialRecord::statistic(const std::string &name) const
    {
        for (const auto &[key, value] : statistics)
            if (key == name)
                return value;
        return std::nullopt;
    }

    std::size_t TrialReport::successes() const
    {
        return static_cast<std::size_t>(
            std::count_if(trials.begin(), trials.end(), [](const TrialRecord &t) { return t.passed; }));
    }

    double TrialReport::success_rate() const
    {
        return trials.empty() ? 0.0 : static_cast<double>(successes()) / static_cast<double>(trials.size());
    }

    std::vector<double> TrialReport::values(const std::string &statistic) const
    {
        std::vector<double> out;
        for (const auto &t : trials)
            if (auto v = t.statistic(statistic))
                out.push_back(*v);
        return out;
    }

    json TrialReport::summary() const
    {
        return json{{"lemma", lemma},
                    {"config", config},
                    {"aggregates", aggregates},
                    {"verdict", to_string(verdict)}};
    }

    const std::vector<std::string> &trial_csv_columns()
    {
        static const std::vector<std::string> columns{"lemma",  "version",       "seed",         "trial",
                                                      "trial_seed", "passed",    "deterministic", "claimed_rate",
                                                      "statistics", "note"};
        return columns;
    }

    std::string TrialReport::csv() const
    {
        std::ostringstream out;
        out << "# config: " << config.dump() << '\n';
        const auto &columns = trial_csv_columns();
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << '\n';
        const std::string claimed =
            diagnostic_mode ? "diagnostic" : (claimed_rate ? format_number(*claimed_rate) : "none");
        for (const auto &t : trials) {
            std::string stats;
            for (const auto &[name, value] : t.statistics)
                stats += (stats.empty() ? "" : ";") + name + "=" + format_number(value);
            std::string note = t.note;
            std::replace(note.begin(), note.end(), ',', ';');
            out << lemma << ',' << CLIQUELAB_VERSION << ',' << config.value("seed", std::uint64_t{0}) << ','
                << t.trial << ',' << t.seed << ',' << (t.passed ? 1 : 0) << ',' << (t.deterministic ? 1 : 0) << ','
                << claimed << ',' << stats << ',' << note << '\n';
        }
        return out.str();
    }

    TrialReport verify_completeness(const CompletenessConfig &c, const VerifyOptions &options)
    {
        if (c.k < 1 || c.ell < 1 || c.n < 1)
            throw DomainError("completeness needs n, ell, k >= 1");
        if (c.delta <= 0 || c.delta > 1)
            throw DomainError("completeness needs 0 < delta <= 1");
        const std::size_t kappa = ceil_power(c.n, c.delta);

        TrialReport report;
        report.lemma = "completeness";
        report.config = base_config(report.lemma, c.trials, c.seed);
        report.config["params"] = {{"n", c.n},   {"delta", format_rational(c.delta)},
                                   {"ell", c.ell}, {"N", c.N},
                                   {"k", c.k},   {"kappa", kappa}};
        // N >= 10 k (n / kappa)^ell  <=>  N kappa^ell >= 10 k n^ell
        const BigInt lhs = BigInt(c.N) * boost::multiprecision::pow(BigInt(kappa), static_cast<unsigned>(c.ell));
        const BigInt rhs = BigInt(10 * c.k) * boost::multiprecision::pow(BigInt(c.n), static_cast<unsigned>(c.ell));
        report.diagnostic_mode = lhs < rhs;
        report.config["diagnostic"] = report.diagnostic_mode;
        if (!report.diagnostic_mode)
            report.claimed_rate = 0.9;

        report.trials.resize(c.trials);
        parallel_trials(c.trials, options.threads, [&](std::size_t i) {
            const Seed seed = derive(c.seed, "completeness", i);
            const PlantedInstance planted = sample_planted(c.n, 0.5, kappa, seed);
            const ProductGraph product = rgp(planted.graph, c.N, c.ell, seed);
            const Bitset clique = to_bitset(planted.clique, c.n);

            VertexSet witness;
            std::size_t inside = 0;
            for (std::size_t j = 0; j < product.family.size(); ++j) {
                const auto &s = product.family.sets[j];
                if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return clique.test(v); })) {
                    ++inside;
                    if (witness.size() < c.k)
                        witness.push_back(static_cast<Vertex>(j));
                }
            }
            TrialRecord &r = report.trials[i];
            r.trial = i;
            r.seed = seed.value;
            r.passed = witness.size() == c.k && is_clique(product.graph, witness);
            // indices inside the clique are pairwise adjacent by construction
            r.deterministic = witness.size() < c.k || r.passed;
            r.statistics = {{"inside", static_cast<double>(inside)}};
            if (witness.size() < c.k)
                r.note = "fewer than k subsets inside the planted clique";
        });
        finalize(report);
        return report;
    }

    TrialReport verify_soundness_structure(const SoundnessConfig &c, const VerifyOptions &options)
    {
        if (c.k < 1 || c.ell < 1 || c.N < 1)
            throw DomainError("soundness needs ell, N, k >= 1");
        if (c.kappa && *c.kappa > c.n)
            throw DomainError("planted clique larger than the graph");

        TrialReport report;
        report.lemma = "soundness";
        report.config = base_config(report.lemma, c.trials, c.seed);
        report.config["params"] = {{"n", c.n},
                                   {"ell", c.ell},
                                   {"N", c.N},
                                   {"k", c.k},
                                   {"model", c.kappa ? "planted" : "null"},
                                   {"kappa", c.kappa ? json(*c.kappa) : json(nullptr)},
                                   {"index_sets_per_trial", c.index_sets_per_trial}};

        report.trials.resize(c.trials);
        parallel_trials(c.trials, options.threads, [&](std::size_t i) {
            const Seed seed = derive(c.seed, "soundness", i);
            const Graph g = c.kappa ? sample_planted(c.n, 0.5, *c.kappa, seed).graph : sample_er(c.n, 0.5, seed);
            const ProductGraph product = rgp(g, c.N, c.ell, seed);
            const auto &sets = product.family.sets;

            std::size_t rule_violations = 0;
            for (std::size_t a = 0; a < sets.size(); ++a)
                for (std::size_t b = a + 1; b < sets.size(); ++b) {
                    const bool expected = is_clique(g, merge_sets(sets[a], sets[b]));
                    if (expected != product.graph.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)))
                        ++rule_violations;
                }

            Rng rng(seed, "soundness-index-sets");
            std::size_t containment_violations = 0;
            const std::size_t target = std::min(c.k, c.N);
            for (std::size_t q = 0; q < c.index_sets_per_trial; ++q) {
                // a random index, some of its product neighbors, random filler
                const auto root = static_cast<Vertex>(rng.below(c.N));
                VertexSet j{root};
                std::vector<Vertex> pool(product.graph.neighbors(root).begin(), product.graph.neighbors(root).end());
                while (j.size() < target && !pool.empty()) {
                    const auto pick = static_cast<std::size_t>(rng.below(pool.size()));
                    j.push_back(pool[pick]);
                    pool[pick] = pool.back();
                    pool.pop_back();
                }
                while (j.size() < target) {
                    const auto pick = static_cast<Vertex>(rng.below(c.N));
                    if (std::find(j.begin(), j.end(), pick) == j.end())
                        j.push_back(pick);
                }
                std::sort(j.begin(), j.end());
                std::vector<Edge> inner;
                for (std::size_t a = 0; a < j.size(); ++a)
                    for (std::size_t b = a + 1; b < j.size(); ++b)
                        if (product.graph.adjacent(j[a], j[b]))
                            inner.emplace_back(j[a], j[b]);
                for (auto [u, v] : implied_edges(product.family, inner))
                    if (!g.adjacent(u, v))
                        ++containment_violations;
            }

            const Rational den = den_leq_k(product.graph, std::min(c.k, c.N));
            TrialRecord &r = report.trials[i];
            r.trial = i;
            r.seed = seed.value;
            r.passed = rule_violations == 0 && containment_violations == 0;
            r.deterministic = r.passed;
            r.statistics = {{"den", boost::rational_cast<double>(den)},
                            {"product_edges", static_cast<double>(product.graph.size())},
                            {"rule_violations", static_cast<double>(rule_violations)},
                            {"containment_violations", static_cast<double>(containment_violations)}};
        });
        finalize(report);
        return report;
    }

    DensitySeparation compare_density(const TrialReport &null_model, const TrialReport &planted, double confidence)
    {
        const auto a = null_model.values("den");
        const auto b = planted.values("den");
        DensitySeparation out;
        out.null_model = summarize_mean(a, confidence);
        out.planted = summarize_mean(b, confidence);
        out.separated = out.planted.mean > out.null_model.mean && out.planted.ci.lower > out.null_model.ci.upper;
        return out;
    }

    TrialReport verify_disperser(const DisperserConfig &c, const VerifyOptions &options)
    {
        TrialReport report;
        report.lemma = "disperser";
        report.config = base_config(report.lemma, c.trials, c.seed);
        report.config["params"] = {{"n", c.n},
                                   {"ell", c.ell},
                                   {"N", c.N},
                                   {"delta", format_rational(c.delta)},
                                   {"max_set_size", c.max_set_size}};
        report.claimed_rate = 0.95;

        report.trials.resize(c.trials);
        parallel_trials(c.trials, options.threads, [&](std::size_t i) {
            const Seed seed = derive(c.seed, "disperser", i);
            const SubsetFamily family = sample_family(c.n, c.N, c.ell, seed);
            const DisperserReport check = check_disperser(family, c.delta, c.max_set_size);
            TrialRecord &r = report.trials[i];
            r.trial = i;
            r.seed = seed.value;
            r.passed = check.passed();
            r.statistics = {{"violations", static_cast<double>(check.violation_count)},
                            {"worst_ratio", boost::rational_cast<double>(check.worst_ratio)},
                            {"examined", static_cast<double>(check.examined)}};
        });
        finalize(report);
        return report;
    }

    double ktt_free_probability(std::size_t kappa, std::size_t t)
    {
        const BigFloat copies = BigFloat(binomial(kappa, t)) * BigFloat(binomial(kappa - t, t));
        const BigFloat p = boost::multiprecision::pow(BigFloat(0.5) / copies, BigFloat(1) / BigFloat(t * t));
        return std::min(1.0, p.convert_to<double>());
    }

    TrialReport verify_lemma44(const Lemma44Config &c, const VerifyOptions &options)
    {
        const std::size_t kappa = c.graph ? c.graph->order() : c.kappa;
        const BigFloat bound = lemma44_bound_exact(kappa, c.t, c.ell);

        TrialReport report;
        report.lemma = "lemma44";
        report.config = base_config(report.lemma, c.trials, c.seed);
        report.config["params"] = {{"kappa", kappa},
                                   {"t", c.t},
                                   {"ell", c.ell},
                                   {"source", c.graph ? "explicit" : "random-filtered"},
                                   {"max_retries", c.max_retries},
                                   {"bound", lemma44_bound(kappa, c.t, c.ell)}};
        const double p = ktt_free_probability(kappa, c.t);
        if (!c.graph)
            report.config["params"]["p"] = p;
        if (c.graph && contains_ktt(*c.graph, c.t))
            throw DomainError("explicit graph contains K_{t,t}; the bound does not apply");

        report.trials.resize(c.trials);
        parallel_trials(c.trials, options.threads, [&](std::size_t i) {
            const Seed seed = derive(c.seed, "lemma44", i);
            TrialRecord &r = report.trials[i];
            r.trial = i;
            r.seed = seed.value;

            std::optional<Graph> sample;
            std::size_t attempts = 0;
            if (c.graph) {
                sample = *c.graph;
            } else {
                while (!sample && attempts < c.max_retries) {
                    Graph g = sample_er(kappa, p, derive(seed, "attempt", attempts));
                    ++attempts;
                    if (!contains_ktt(g, c.t))
                        sample = std::move(g);
                }
            }
            if (!sample) {
                r.passed = false;
                r.note = "no K_{t;t}-free sample within the retry limit";
                r.statistics = {{"attempts", static_cast<double>(attempts)}};
                return;
            }
            const BigInt count = count_bicliques(*sample, c.ell);
            r.passed = BigFloat(count) <= bound;
            r.deterministic = r.passed;
            r.statistics = {{"count", count.convert_to<double>()},
                            {"edges", static_cast<double>(sample->size())},
                            {"attempts", static_cast<double>(attempts)}};
        });
        report.claimed_rate = 1.0;
        finalize(report);
        return report;
    }

    bool verify_averaging(const Graph &g, const VertexSet &s, std::size_t k, Budget budget)
    {
        const VertexSet members = normalize(s, g.order());
        const std::size_t bound = averaging_bound(k, members.size(), edges_within(g, members));
        return best_k_subset(g, members, k, std::move(budget)).edges >= bound;
    }

    TrialReport verify_averaging_trials(const AveragingConfig &c, const VerifyOptions &options)
    {
        if (c.s > c.n || c.k > c.s || c.k < 1)
            throw DomainError("averaging needs 1 <= k <= s <= n");
        TrialReport report;
        report.lemma = "averaging";
        report.config = base_config(report.lemma, c.trials, c.seed);
        report.config["params"] = {{"n", c.n}, {"s", c.s}, {"k", c.k}};

        VertexSet s(c.s);
        for (std::size_t v = 0; v < c.s; ++v)
            s[v] = static_cast<Vertex>(v);
        report.trials.resize(c.trials);
        parallel_trials(c.trials, options.threads, [&](std::size_t i) {
            const Seed seed = derive(c.seed, "averaging", i);
            const Graph g = sample_er(c.n, 0.5, seed);
            const std::size_t inside = edges_within(g, s);
            const std::size_t bound = averaging_bound(c.k, c.s, inside);
            const std::size_t best = best_k_subset(g, s, c.k).edges;
            TrialRecord &r = report.trials[i];
            r.trial = i;
            r.seed = seed.value;
            r.passed = best >= bound;
            r.deterministic = r.passed;
            r.statistics = {{"edges_in_s", static_cast<double>(inside)},
                            {"best", static_cast<double>(best)},
                            {"bound", static_cast<double>(bound)}};
        });
        finalize(report);
        return report;
    }

    MergedReport merge_reports(const std::vector<std::string> &csv_texts)
    {
        if (csv_texts.empty())
            throw DomainError("report needs at least one trial CSV");
        const auto &columns = trial_csv_columns();

        struct Pool
        {
            std::vector<TrialRecord> trials;
            std::optional<double> claimed;
            bool diagnostic = false;
            json runs = json::array();
        };
        std::map<std::string, Pool> pools;
        std::ostringstream long_csv;
        long_csv << "lemma,run,param,trial,value\n";

        for (std::size_t run = 0; run < csv_texts.size(); ++run) {
            std::istringstream in(csv_texts[run]);
            std::string line;
            json config;
            bool header_seen = false;
            std::size_t run_trials = 0;
            std::size_t run_successes = 0;
            std::string lemma;
            while (std::getline(in, line)) {
                if (line.empty())
                    continue;
                if (line.rfind("# config: ", 0) == 0) {
                    config = json::parse(line.substr(10));
                    continue;
                }
                if (line[0] == '#')
                    continue;
                const auto fields = split(line, ',');
                if (!header_seen) {
                    for (std::size_t i = 0; i < columns.size(); ++i) {
                        if (i >= fields.size())
                            throw DomainError("input " + std::to_string(run + 1) + ": missing column '" + columns[i] + "'");
                        if (fields[i] != columns[i])
                            throw DomainError("input " + std::to_string(run + 1) + ": unexpected column '" + fields[i] +
                                              "' where '" + columns[i] + "' belongs");
                    }
                    if (fields.size() > columns.size())
                        throw DomainError("input " + std::to_string(run + 1) + ": unexpected column '" +
                                          fields[columns.size()] + "'");
                    header_seen = true;
                    continue;
                }
                if (fields.size() != columns.size())
                    throw DomainError("input " + std::to_string(run + 1) + ": row has " + std::to_string(fields.size()) +
                                      " fields, expected " + std::to_string(columns.size()));
                lemma = fields[0];
                Pool &pool = pools[lemma];
                TrialRecord r;
                try {
                    r.trial = std::stoull(fields[3]);
                    r.seed = std::stoull(fields[4]);
                } catch (const std::exception &) {
                    throw DomainError("input " + std::to_string(run + 1) + ": column 'trial' or 'trial_seed' is not an integer");
                }
                r.passed = fields[5] == "1";
                r.deterministic = fields[6] == "1";
                if (fields[7] == "diagnostic")
                    pool.diagnostic = true;
                else if (fields[7] != "none")
                    pool.claimed = std::stod(fields[7]);
                for (const auto &item : split(fields[8], ';')) {
                    const auto eq = item.find('=');
                    if (eq == std::string::npos)
                        continue;
                    const std::string name = item.substr(0, eq);
                    const double value = std::stod(item.substr(eq + 1));
                    r.statistics.emplace_back(name, value);
                    long_csv << lemma << ',' << run << ',' << name << ',' << r.trial << ',' << format_number(value)
                             << '\n';
                }
                ++run_trials;
                run_successes += r.passed;
                pool.trials.push_back(std::move(r));
            }
            if (!header_seen)
                throw DomainError("input " + std::to_string(run + 1) + ": missing header row");
            if (!lemma.empty())
                pools[lemma].runs.push_back({{"run", run},
                                             {"config", config},
                                             {"trials", run_trials},
                                             {"successes", run_successes},
                                             {"rate", run_trials ? double(run_successes) / double(run_trials) : 0.0}});
        }

        json lemmas = json::object();
        for (auto &[lemma, pool] : pools) {
            const std::size_t n = pool.trials.size();
            std::size_t s = 0;
            for (const auto &t : pool.trials)
                s += t.passed;
            lemmas[lemma] = {{"trials", n},
                             {"successes", s},
                             {"pooled_rate", n ? double(s) / double(n) : 0.0},
                             {"claimed_rate", pool.claimed ? json(*pool.claimed) : json(nullptr)},
                             {"verdict", to_string(decide(pool.trials, pool.claimed, pool.diagnostic))},
                             {"runs", pool.runs}};
        }
        MergedReport out;
        out.summary = {{"version", CLIQUELAB_VERSION}, {"inputs", csv_texts.size()}, {"lemmas", lemmas}};
        out.long_csv = long_csv.str();
        return out;
    }
} // namespace cliquelab
