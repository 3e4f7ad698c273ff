#include "brute.hpp"

#include <cliquelab/ensembles.hpp>
#include <cliquelab/errors.hpp>
#include <cliquelab/reductions.hpp>
#include <cliquelab/stats.hpp>
#include <cliquelab/verify.hpp>

#include <doctest.h>

#include <cmath>

using namespace cliquelab;

TEST_CASE("binomial bounds")
{
    // closed forms at the extremes
    CHECK(binomial_upper_bound(0, 50, 0.99) == doctest::Approx(1 - std::pow(0.01, 1.0 / 50)).epsilon(1e-9));
    CHECK(binomial_lower_bound(50, 50, 0.99) == doctest::Approx(std::pow(0.01, 1.0 / 50)).epsilon(1e-9));
    CHECK(binomial_upper_bound(50, 50, 0.99) == 1.0);
    CHECK(binomial_lower_bound(0, 50, 0.99) == 0.0);

    CHECK(rate_consistent_with(180, 200, 0.9, 0.99));
    CHECK(rate_consistent_with(170, 200, 0.9, 0.99));
    CHECK_FALSE(rate_consistent_with(100, 200, 0.9, 0.99));
    CHECK(rate_consistent_with(50, 50, 1.0, 0.99));
    CHECK_FALSE(rate_consistent_with(49, 50, 1.0, 0.99));
}

TEST_CASE("mean summaries")
{
    const std::vector<double> v{1, 2, 3};
    const MeanSummary m = summarize_mean(v, 0.99);
    CHECK(m.mean == doctest::Approx(2));
    CHECK(m.stddev == doctest::Approx(1));
    CHECK(m.ci.upper - m.mean == doctest::Approx(2.5758293035489 / std::sqrt(3.0)));
    const std::vector<double> flat(10, 1.5);
    const MeanSummary f = summarize_mean(flat, 0.99);
    CHECK(f.ci.lower == f.ci.upper);
    CHECK_THROWS_AS(summarize_mean(std::vector<double>{}, 0.99), DomainError);
}

TEST_CASE("completeness harness")
{
    CompletenessConfig c;
    c.n = 30;
    c.N = 800;
    c.trials = 20;
    c.seed = Seed{3};
    const TrialReport r = verify_completeness(c);
    CHECK(r.trials.size() == 20);
    CHECK(r.claimed_rate == 0.9);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.success_rate() >= 0.9);

    // too few draws for the expected count to reach 10k: reported, not judged
    c.N = 100;
    const TrialReport d = verify_completeness(c);
    CHECK(d.diagnostic_mode);
    CHECK(d.verdict == Verdict::diagnostic);
}

TEST_CASE("reports do not depend on the thread count")
{
    CompletenessConfig c;
    c.n = 30;
    c.N = 800;
    c.trials = 12;
    c.seed = Seed{9};
    const TrialReport one = verify_completeness(c, VerifyOptions{1});
    const TrialReport four = verify_completeness(c, VerifyOptions{4});
    CHECK(one.csv() == four.csv());
    CHECK(one.summary() == four.summary());
}

TEST_CASE("soundness harness")
{
    SoundnessConfig c;
    c.n = 30;
    c.N = 150;
    c.trials = 6;
    c.index_sets_per_trial = 20;
    c.seed = Seed{1};
    const TrialReport null_model = verify_soundness_structure(c);
    CHECK(null_model.verdict == Verdict::pass);
    CHECK(null_model.values("den").size() == 6);
    for (double den : null_model.values("den"))
        CHECK((den >= 0 && den <= 1.5));

    c.kappa = 12;
    const TrialReport planted = verify_soundness_structure(c);
    CHECK(planted.verdict == Verdict::pass);
    const DensitySeparation sep = compare_density(null_model, planted);
    CHECK(sep.separated == (sep.planted.ci.lower > sep.null_model.ci.upper));
}

TEST_CASE("disperser harness")
{
    DisperserConfig c;
    c.N = 60;
    c.max_set_size = 3;
    c.trials = 8;
    c.seed = Seed{2};
    const TrialReport r = verify_disperser(c);
    CHECK(r.claimed_rate == 0.95);
    CHECK(r.trials.size() == 8);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("counting-bound harness")
{
    Lemma44Config c;
    c.trials = 6;
    c.seed = Seed{1};
    const TrialReport r = verify_lemma44(c);
    CHECK(r.verdict == Verdict::pass);
    for (const auto &t : r.trials)
        CHECK(t.statistic("count").value() <= lemma44_bound(32, 2, 1));

    // C(32,2) C(30,2) p^4: the expected K_{2,2} count is 1/2 at this p
    const double p = ktt_free_probability(32, 2);
    CHECK(std::pow(p, 4) * 496 * 435 == doctest::Approx(0.5));

    // explicit sources: an empty graph passes, a K_{2,2} is refused
    c.graph = Graph(32);
    CHECK(verify_lemma44(c).verdict == Verdict::pass);
    c.graph = Graph(32, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(verify_lemma44(c), DomainError);
}

TEST_CASE("averaging harness")
{
    const Graph g = sample_er(12, 0.5, Seed{4});
    CHECK(verify_averaging(g, VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 4));
    AveragingConfig c;
    c.trials = 10;
    const TrialReport r = verify_averaging_trials(c);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.successes() == 10);
    c.k = 11;
    CHECK_THROWS_AS(verify_averaging_trials(c), DomainError);
}

TEST_CASE("verdict exit codes")
{
    CHECK(exit_code(Verdict::pass) == 0);
    CHECK(exit_code(Verdict::diagnostic) == 0);
    CHECK(exit_code(Verdict::statistical_fail) == 2);
    CHECK(exit_code(Verdict::invariant_fail) == 3);
    CHECK(to_string(Verdict::statistical_fail) == "statistical_fail");
}

TEST_CASE("trial CSV and merged reports")
{
    AveragingConfig c;
    c.trials = 5;
    c.seed = Seed{1};
    const TrialReport a = verify_averaging_trials(c);
    const std::string csv = a.csv();
    CHECK(csv.rfind("# config: ", 0) == 0);
    CHECK(csv.find("lemma,version,seed,trial,trial_seed,passed,deterministic,claimed_rate,statistics,note\n") !=
          std::string::npos);

    // a single run keeps its verdict
    const MergedReport single = merge_reports({csv});
    CHECK(single.summary["lemmas"]["averaging"]["verdict"] == to_string(a.verdict));
    CHECK(single.summary["lemmas"]["averaging"]["trials"] == 5);

    // pooled rate is the trial-weighted mean of the per-run rates
    TrialReport x;
    x.lemma = "demo";
    x.config = {{"seed", 1}};
    x.claimed_rate = 0.5;
    for (std::size_t i = 0; i < 4; ++i)
        x.trials.push_back({i, i, i < 3, true, {{"v", double(i)}}, ""});
    TrialReport y = x;
    y.config = {{"seed", 2}};
    y.trials.clear();
    for (std::size_t i = 0; i < 6; ++i)
        y.trials.push_back({i, 100 + i, i < 2, true, {{"v", 1.0}}, "a, b"});
    const MergedReport both = merge_reports({x.csv(), y.csv()});
    const auto &demo = both.summary["lemmas"]["demo"];
    const double r0 = demo["runs"][0]["rate"], r1 = demo["runs"][1]["rate"];
    CHECK(r0 == doctest::Approx(0.75));
    CHECK(r1 == doctest::Approx(1.0 / 3));
    CHECK(double(demo["pooled_rate"]) == doctest::Approx((4 * r0 + 6 * r1) / 10));
    CHECK(demo["successes"] == 5);
    CHECK(both.long_csv.rfind("lemma,run,param,trial,value\n", 0) == 0);
    CHECK(both.long_csv.find("demo,1,v,5,1\n") != std::string::npos);

    CHECK_THROWS_AS(merge_reports({}), DomainError);
    std::string renamed = csv;
    renamed.replace(renamed.find(",passed,"), 8, ",success,");
    try {
        merge_reports({csv, renamed});
        FAIL("expected a schema error");
    } catch (const DomainError &e) {
        CHECK(std::string(e.what()).find("'success'") != std::string::npos);
    }
}
