#include <doctest.h>

#include "pbtk/error.hpp"
#include "pbtk/model.hpp"

using namespace pbtk;

namespace {

MetaSection base_meta(VoteType type, Count num_projects = 5) {
    MetaSection m;
    m.description = "d";
    m.country = "c";
    m.unit = "u";
    m.instance = "i";
    m.num_projects = num_projects;
    m.num_votes = 10;
    m.budget = Decimal::from_int(2500);
    m.rule = "greedy";
    m.vote_type = type;
    return m;
}

}  // namespace

TEST_CASE("resolve_defaults keeps explicit approval bounds and fills the rest") {
    MetaSection m = base_meta(VoteType::approval);
    m.min_length = 1;
    m.mark_explicit("min_length");
    m.max_length = 3;
    m.mark_explicit("max_length");

    MetaSection r = resolve_defaults(m);
    CHECK(*r.max_length == 3);
    CHECK(*r.min_length == 1);
    CHECK(*r.min_sum_cost == Decimal());
    CHECK(r.max_sum_cost->is_positive_infinity());
    // other vote types' bounds stay absent
    CHECK_FALSE(r.min_points.has_value());
    CHECK_FALSE(r.max_points.has_value());
    CHECK_FALSE(r.scoring_fn.has_value());
    CHECK_FALSE(r.default_score.has_value());
}

TEST_CASE("resolve_defaults derives max_length from num_projects") {
    MetaSection r = resolve_defaults(base_meta(VoteType::approval, 5));
    CHECK(*r.min_length == 1);
    CHECK(*r.max_length == 5);
}

TEST_CASE("resolve_defaults cumulative point bounds follow max_sum_points") {
    MetaSection m = base_meta(VoteType::cumulative);
    m.max_sum_points = Decimal::from_int(10);
    m.mark_explicit("max_sum_points");
    MetaSection r = resolve_defaults(m);
    CHECK(*r.min_points == Decimal());
    CHECK(*r.max_points == Decimal::from_int(10));
    CHECK(*r.min_sum_points == Decimal());
    CHECK_FALSE(r.default_score.has_value());
    CHECK_FALSE(r.min_sum_cost.has_value());
}

TEST_CASE("resolve_defaults scoring bounds are unbounded with default_score 0") {
    MetaSection r = resolve_defaults(base_meta(VoteType::scoring));
    CHECK(r.min_points->is_negative_infinity());
    CHECK(r.max_points->is_positive_infinity());
    CHECK(*r.default_score == Decimal());
}

TEST_CASE("resolve_defaults ordinal picks Borda") {
    MetaSection r = resolve_defaults(base_meta(VoteType::ordinal));
    CHECK(*r.scoring_fn == "Borda");
}

TEST_CASE("resolve_defaults requires max_sum_points for cumulative") {
    CHECK_THROWS_WITH_AS(resolve_defaults(base_meta(VoteType::cumulative)),
                         doctest::Contains("max_sum_points"), Error);
}

TEST_CASE("resolve_defaults is idempotent and never touches present values") {
    for (VoteType type : {VoteType::approval, VoteType::ordinal, VoteType::cumulative,
                          VoteType::scoring}) {
        CAPTURE(to_string(type));
        MetaSection m = base_meta(type);
        if (type == VoteType::cumulative) {
            m.max_sum_points = Decimal::from_int(42);
            m.mark_explicit("max_sum_points");
        }
        m.max_length = 2;
        m.mark_explicit("max_length");
        MetaSection once = resolve_defaults(m);
        MetaSection twice = resolve_defaults(once);
        CHECK(once == twice);
        CHECK(*once.max_length == 2);
        if (type == VoteType::cumulative) CHECK(*once.max_points == Decimal::from_int(42));
    }
}

TEST_CASE("explicit key tracking is order-insensitive") {
    MetaSection m;
    m.mark_explicit("max_length");
    m.mark_explicit("min_length");
    m.mark_explicit("max_length");  // reinsertion is a no-op
    CHECK(m.explicit_keys == std::vector<std::string>{"max_length", "min_length"});
    CHECK(m.is_explicit("min_length"));
    CHECK_FALSE(m.is_explicit("min_sum_cost"));
}

TEST_CASE("project id ordering is numeric for digit strings") {
    CHECK(project_id_less("2", "10"));
    CHECK_FALSE(project_id_less("10", "2"));
    CHECK(project_id_less("007", "7"));   // equal numerically, byte-wise fallback
    CHECK_FALSE(project_id_less("7", "007"));
    CHECK(project_id_less("9", "urban-12"));  // mixed falls back to byte order
    CHECK(project_id_less("park", "pool"));
    CHECK_FALSE(project_id_less("5", "5"));
}
