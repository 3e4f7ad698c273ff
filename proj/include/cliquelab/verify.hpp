#pragma once

#include <cliquelab/caps.hpp>
#include <cliquelab/graph.hpp>
#include <cliquelab/random.hpp>
#include <cliquelab/stats.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Monte Carlo / exhaustive harnesses for the lemmas. Trial i runs on seed
// derive(seed, lemma, i), so a report is reproducible from its config alone and
// does not depend on the thread count.
namespace cliquelab
{
    inline constexpr double kConfidence = 0.99;

    enum class Verdict
    {
        pass,
        statistical_fail, // a claimed rate is refuted at kConfidence
        invariant_fail,   // a deterministic sub-claim failed
        diagnostic        // preconditions of the claim not met; no threshold applied
    };

    std::string to_string(Verdict v);
    int exit_code(Verdict v);

    struct TrialRecord
    {
        std::size_t trial = 0;
        std::uint64_t seed = 0;
        bool passed = false;
        bool deterministic = true; // false: a deterministic sub-claim failed
        std::vector<std::pair<std::string, double>> statistics;
        std::string note;

        std::optional<double> statistic(const std::string &name) const;
    };

    struct TrialReport
    {
        std::string lemma;
        nlohmann::json config;
        std::vector<TrialRecord> trials;
        // Rate the claim asserts; nullopt for deterministic claims.
        std::optional<double> claimed_rate;
        bool diagnostic_mode = false;
        nlohmann::json aggregates;
        Verdict verdict = Verdict::pass;

        std::size_t successes() const;
        double success_rate() const;
        std::vector<double> values(const std::string &statistic) const;

        nlohmann::json summary() const;
        std::string csv() const;
    };

    struct VerifyOptions
    {
        std::size_t threads = 0; // 0 = hardware concurrency
    };

    struct CompletenessConfig
    {
        std::size_t n = 100;
        Rational delta{1, 2};
        std::size_t ell = 2;
        std::size_t N = 3000;
        std::size_t k = 3;
        std::size_t trials = 200;
        Seed seed{};
    };

    // Planted G(n, 1/2, ceil(n^delta)); success when the first k indices with
    // S_i inside the clique exist and form a clique of the product.
    TrialReport verify_completeness(const CompletenessConfig &config, const VerifyOptions &options = {});

    struct SoundnessConfig
    {
        std::size_t n = 60;
        std::size_t ell = 2;
        std::size_t N = 500;
        std::size_t k = 4;
        std::size_t trials = 200;
        Seed seed{};
        std::optional<std::size_t> kappa; // planted clique size; null model when absent
        std::size_t index_sets_per_trial = 50;
    };

    // Edge rule on every pair, implied-edge containment on sampled index sets,
    // and den_{<=k} of the product (statistic "den").
    TrialReport verify_soundness_structure(const SoundnessConfig &config, const VerifyOptions &options = {});

    struct DensitySeparation
    {
        MeanSummary null_model;
        MeanSummary planted;
        bool separated = false; // planted interval strictly above the null interval
    };

    DensitySeparation compare_density(const TrialReport &null_model, const TrialReport &planted,
                                      double confidence = kConfidence);

    struct DisperserConfig
    {
        std::size_t n = 100;
        std::size_t ell = 2;
        std::size_t N = 200;
        Rational delta{1, 2};
        std::size_t max_set_size = 4;
        std::size_t trials = 100;
        Seed seed{};
    };

    TrialReport verify_disperser(const DisperserConfig &config, const VerifyOptions &options = {});

    struct Lemma44Config
    {
        std::size_t kappa = 32;
        std::size_t t = 2;
        std::size_t ell = 1;
        std::size_t trials = 50;
        Seed seed{};
        std::size_t max_retries = 1000;
        std::optional<Graph> graph; // explicit source instead of random K_{t,t}-free samples
    };

    // Edge probability making the expected number of ordered K_{t,t} copies in
    // G(kappa, p) equal to 1/2.
    double ktt_free_probability(std::size_t kappa, std::size_t t);

    TrialReport verify_lemma44(const Lemma44Config &config, const VerifyOptions &options = {});

    // max over k-subsets T of s of |E[T]| >= averaging_bound(k, |s|, |E[s]|).
    bool verify_averaging(const Graph &g, const VertexSet &s, std::size_t k, Budget budget = {});

    struct AveragingConfig
    {
        std::size_t n = 12;
        std::size_t s = 10;
        std::size_t k = 4;
        std::size_t trials = 100;
        Seed seed{};
    };

    // G(n, 1/2) with S = {0, ..., s-1}.
    TrialReport verify_averaging_trials(const AveragingConfig &config, const VerifyOptions &options = {});

    // Merge of per-trial CSVs written by TrialReport::csv.
    struct MergedReport
    {
        nlohmann::json summary;
        std::string long_csv; // lemma,run,param,trial,value
    };

    // Throws DomainError on an empty list or a schema mismatch (naming the column).
    MergedReport merge_reports(const std::vector<std::string> &csv_texts);

    // Header row of TrialReport::csv.
    const std::vector<std::string> &trial_csv_columns();
} // namespace cliquelab
