#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "pbtk/error.hpp"
#include "pbtk/generator.hpp"
#include "pbtk/rules.hpp"

using namespace pbtk;
using pbtk::testing::add_vote;
using pbtk::testing::golden_instance;
using pbtk::testing::two_project_instance;

namespace {

Decimal dec(std::int64_t v) { return Decimal::from_int(v); }

std::map<std::string, Decimal> expected_worked_example_scores() {
    return {{"1", dec(4)}, {"2", dec(4)}, {"4", dec(6)}, {"5", dec(5)}, {"7", dec(3)}};
}

}  // namespace

TEST_CASE("worked example approval scores match the hand count") {
    PbInstance in = golden_instance();
    CHECK(aggregate_scores(in) == expected_worked_example_scores());
    CHECK(approval_scores(in).at("4") == dec(6));  // voters 1, 3, 5, 8, 9, 10
}

TEST_CASE("an instance with zero votes scores every project zero") {
    PbInstance in = golden_instance();
    in.votes.clear();
    in.meta.num_votes = 0;
    for (const auto& [id, score] : aggregate_scores(in)) {
        CAPTURE(id);
        CHECK(score == Decimal());
    }
}

TEST_CASE("a project approved by nobody scores zero") {
    PbInstance in = two_project_instance(VoteType::approval);
    add_vote(in, "1", {"a"});
    auto scores = approval_scores(in);
    CHECK(scores.at("a") == dec(1));
    CHECK(scores.at("b") == Decimal());
}

TEST_CASE("duplicating every vote doubles every approval score") {
    PbInstance in = golden_instance();
    PbInstance doubled = in;
    for (const VoteRecord& v : in.votes) {
        VoteRecord copy = v;
        copy.voter_id = v.voter_id + "-bis";
        doubled.votes.push_back(copy);
    }
    doubled.meta.num_votes = static_cast<Count>(doubled.votes.size());
    auto before = approval_scores(in);
    auto after = approval_scores(doubled);
    for (const auto& [id, score] : before) {
        CHECK(after.at(id) == score.scaled_by(2));
    }
}

TEST_CASE("borda weights are m minus rank, independent of ballot length") {
    PbInstance in;
    in.meta = golden_instance().meta;  // num_projects 5
    in.meta.vote_type = VoteType::ordinal;
    in.meta = resolve_defaults(in.meta);
    in.project_header = {"project_id", "cost"};
    in.vote_header = {"voter_id", "vote"};
    for (int i = 1; i <= 5; ++i) {
        in.projects.push_back({std::to_string(i), dec(100), {}, {}, {}, {}});
    }
    add_vote(in, "1", {"2", "4", "5"});
    auto scores = borda_scores(in);
    CHECK(scores.at("2") == dec(4));
    CHECK(scores.at("4") == dec(3));
    CHECK(scores.at("5") == dec(2));
    CHECK(scores.at("1") == Decimal());
    CHECK(scores.at("3") == Decimal());

    SUBCASE("a full ranking contributes m-1 down to 0") {
        in.votes.clear();
        add_vote(in, "1", {"3", "1", "4", "2", "5"});
        auto full = borda_scores(in);
        CHECK(full.at("3") == dec(4));
        CHECK(full.at("1") == dec(3));
        CHECK(full.at("4") == dec(2));
        CHECK(full.at("2") == dec(1));
        CHECK(full.at("5") == Decimal());
    }

    SUBCASE("two identical ballots double every score") {
        add_vote(in, "2", {"2", "4", "5"});
        auto doubled = borda_scores(in);
        CHECK(doubled.at("2") == dec(8));
        CHECK(doubled.at("4") == dec(6));
        CHECK(doubled.at("5") == dec(4));
    }
}

TEST_CASE("cumulative scores sum the awarded points") {
    PbInstance in = two_project_instance(VoteType::cumulative);
    add_vote(in, "1", {"a", "b"}, std::vector<Decimal>{dec(7), dec(3)});
    auto scores = points_scores(in);
    CHECK(scores.at("a") == dec(7));
    CHECK(scores.at("b") == dec(3));

    add_vote(in, "2", {"a"}, std::vector<Decimal>{dec(4)});
    scores = points_scores(in);
    CHECK(scores.at("a") == dec(11));  // 7 + 4
    CHECK(scores.at("b") == dec(3));
}

TEST_CASE("scoring treats unlisted projects as default_score") {
    PbInstance in = two_project_instance(VoteType::scoring);
    add_vote(in, "1", {"a"}, std::vector<Decimal>{dec(5)});
    add_vote(in, "2", {"a"}, std::vector<Decimal>{dec(5)});
    add_vote(in, "3", {"a"}, std::vector<Decimal>{dec(5)});

    SUBCASE("default 0 leaves unlisted projects at zero") {
        CHECK(points_scores(in).at("b") == Decimal());
    }

    SUBCASE("default 1 adds one per non-listing vote") {
        in.meta.default_score = dec(1);
        in.meta.mark_explicit("default_score");
        // oracle: direct per-vote summation
        Decimal expected_b;
        for (const VoteRecord& v : in.votes) {
            bool listed = std::find(v.vote.begin(), v.vote.end(), "b") != v.vote.end();
            expected_b = expected_b + (listed ? Decimal() : dec(1));
        }
        REQUIRE(expected_b == dec(3));
        auto scores = points_scores(in);
        CHECK(scores.at("b") == expected_b);
        CHECK(scores.at("a") == dec(15));  // 3 listings of 5
    }
}

TEST_CASE("worked example greedy outcome, skip variant") {
    Outcome outcome = greedy_outcome(golden_instance());
    CHECK(outcome.scores == expected_worked_example_scores());
    CHECK(outcome.funded == std::vector<std::string>{"4", "5"});
    CHECK(outcome.spent == dec(2400));
    CHECK(outcome.remaining == dec(100));
    REQUIRE(outcome.skipped.size() == 3);
    for (const SkippedProject& s : outcome.skipped) {
        CHECK(s.reason == "unaffordable");
    }
    CHECK(outcome.skipped[0].project_id == "1");
    CHECK(outcome.skipped[1].project_id == "2");
    CHECK(outcome.skipped[2].project_id == "7");
    // consideration order: score desc, then numeric id asc for the 4-4 tie
    REQUIRE(outcome.decisions.size() == 5);
    CHECK(outcome.decisions[0].project_id == "4");
    CHECK(outcome.decisions[1].project_id == "5");
    CHECK(outcome.decisions[2].project_id == "1");
    CHECK(outcome.decisions[3].project_id == "2");
    CHECK(outcome.decisions[4].project_id == "7");
}

TEST_CASE("worked example greedy outcome, stop variant") {
    Outcome outcome =
        greedy_outcome(golden_instance(), GreedyVariant::stop_at_first_unaffordable);
    CHECK(outcome.funded == std::vector<std::string>{"4", "5"});
    CHECK(outcome.spent == dec(2400));
    REQUIRE(outcome.skipped.size() == 3);
    CHECK(outcome.skipped[0] == SkippedProject{"1", "unaffordable"});
    CHECK(outcome.skipped[1] == SkippedProject{"2", "not considered"});
    CHECK(outcome.skipped[2] == SkippedProject{"7", "not considered"});
}

TEST_CASE("a zero budget funds nothing") {
    PbInstance in = two_project_instance(VoteType::approval);
    in.meta.budget = Decimal();
    add_vote(in, "1", {"a"});
    Outcome outcome = greedy_outcome(in);
    CHECK(outcome.funded.empty());
    CHECK(outcome.spent == Decimal());
    CHECK(outcome.remaining == Decimal());
}

TEST_CASE("tie-break alternatives order equal scores differently") {
    PbInstance in = two_project_instance(VoteType::approval);
    // both projects approved once: scores tie at 1
    in.projects[0].cost = dec(20);  // a
    in.projects[1].cost = dec(10);  // b
    add_vote(in, "1", {"a", "b"});

    Outcome by_id = greedy_outcome(in, GreedyVariant::skip_unaffordable,
                                   TieBreak::by_project_id_ascending);
    CHECK(by_id.decisions[0].project_id == "a");

    Outcome by_cost = greedy_outcome(in, GreedyVariant::skip_unaffordable,
                                     TieBreak::by_cost_ascending_then_id);
    CHECK(by_cost.decisions[0].project_id == "b");

    PbInstance flipped = in;
    std::swap(flipped.projects[0], flipped.projects[1]);
    Outcome by_input = greedy_outcome(flipped, GreedyVariant::skip_unaffordable,
                                      TieBreak::by_input_order);
    CHECK(by_input.decisions[0].project_id == "b");
}

TEST_CASE("score functions reject the wrong vote type") {
    PbInstance in = golden_instance();  // approval
    CHECK_THROWS_AS(borda_scores(in), Error);
    CHECK_THROWS_AS(points_scores(in), Error);
    in.meta.vote_type = VoteType::ordinal;
    CHECK_THROWS_AS(approval_scores(in), Error);
}

TEST_CASE("only the Borda scoring function is supported") {
    PbInstance in = two_project_instance(VoteType::ordinal);
    add_vote(in, "1", {"a"});
    in.meta.scoring_fn = "Dowdall";
    in.meta.mark_explicit("scoring_fn");
    CHECK_THROWS_WITH_AS(aggregate_scores(in), doctest::Contains("Dowdall"), Error);
}

TEST_CASE("only the greedy rule is supported") {
    PbInstance in = golden_instance();
    in.meta.rule = "mes";
    try {
        greedy_outcome(in);
        FAIL("expected UNSUPPORTED_RULE");
    } catch (const Error& e) {
        CHECK(e.code() == "UNSUPPORTED_RULE");
    }
}

TEST_CASE("outcomes refuse instances with validation errors") {
    PbInstance in = golden_instance();
    in.meta.num_votes = 9;
    try {
        greedy_outcome(in);
        FAIL("expected VALIDATION_REQUIRED");
    } catch (const Error& e) {
        CHECK(e.code() == "VALIDATION_REQUIRED");
    }
}

TEST_CASE("adding an approval for one project never hurts it") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        GeneratorSpec spec;
        spec.vote_type = VoteType::approval;
        spec.num_projects = 6;
        spec.num_votes = 9;
        spec.seed = seed;
        PbInstance in = generate_random_instance(spec);
        auto before = approval_scores(in);
        const std::string target = in.projects[seed % in.projects.size()].id;
        VoteRecord extra;
        extra.voter_id = "extra";
        extra.vote = {target};
        in.votes.push_back(extra);
        in.meta.num_votes += 1;
        auto after = approval_scores(in);
        for (const auto& [id, score] : before) {
            if (id == target) {
                CHECK(after.at(id) == score + Decimal::from_int(1));
            } else {
                CHECK(after.at(id) == score);
            }
        }
    }
}

TEST_CASE("the audit trail replays to a feasible allocation") {
    for (std::uint64_t seed : {10ULL, 11ULL, 12ULL}) {
        GeneratorSpec spec;
        spec.vote_type = VoteType::cumulative;
        spec.num_projects = 8;
        spec.num_votes = 12;
        spec.seed = seed;
        PbInstance in = generate_random_instance(spec);
        for (GreedyVariant variant : {GreedyVariant::skip_unaffordable,
                                      GreedyVariant::stop_at_first_unaffordable}) {
            Outcome outcome = greedy_outcome(in, variant);
            CHECK(outcome.spent + outcome.remaining == in.meta.budget);
            CHECK(outcome.spent <= in.meta.budget);
            Decimal remaining = in.meta.budget;
            std::size_t funded_at = 0;
            for (const GreedyDecision& d : outcome.decisions) {
                CHECK(d.remaining_before == remaining);
                if (d.action == "funded") {
                    CHECK(d.cost <= remaining);
                    REQUIRE(funded_at < outcome.funded.size());
                    CHECK(outcome.funded[funded_at++] == d.project_id);
                    remaining = remaining - d.cost;
                }
            }
            CHECK(funded_at == outcome.funded.size());
            CHECK(remaining == outcome.remaining);
            // funded is duplicate-free and disjoint from skipped
            std::set<std::string> funded_set(outcome.funded.begin(), outcome.funded.end());
            CHECK(funded_set.size() == outcome.funded.size());
            for (const SkippedProject& s : outcome.skipped) {
                CHECK(funded_set.count(s.project_id) == 0);
            }
            CHECK(outcome.funded.size() + outcome.skipped.size() == in.projects.size());
            // identical inputs, identical outcome
            CHECK(greedy_outcome(in, variant) == outcome);
        }
    }
}
