#include "pbtk/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pbtk/error.hpp"

namespace pbtk {

const std::vector<std::string>& mutation_codes() {
    static const std::vector<std::string> codes = {
        "COUNT_PROJECTS", "COUNT_VOTES",     "UNKNOWN_PROJECT_REF", "VOTE_LEN",
        "SUM_COST",       "POINTS_PRESENT", "POINTS_REQUIRED",     "POINT_RANGE",
        "SUM_POINTS",     "POINTS_ORDER"};
    return codes;
}

namespace {

[[noreturn]] void infeasible(const std::string& why) {
    throw Error("INFEASIBLE_SPEC", why);
}

class Builder {
public:
    explicit Builder(const GeneratorSpec& spec) : spec_(spec), rng_(spec.seed) {}

    PbInstance build() {
        check_spec();
        make_meta();
        make_projects();
        make_votes();
        if (spec_.mutation) apply_mutation(*spec_.mutation);
        return std::move(out_);
    }

private:
    const GeneratorSpec& spec_;
    std::mt19937_64 rng_;
    PbInstance out_;
    Count eff_max_len_ = 0;
    bool with_name_ = false, with_category_ = false, with_target_ = false,
         with_phase_ = false;
    bool with_age_ = false, with_sex_ = false, with_method_ = false, with_ward_ = false;
    bool with_points_ = false;

    // mt19937_64 is pinned by the standard, and the modulo draw avoids the
    // implementation-defined std distributions, so identical specs generate
    // identical bytes on every platform.
    std::uint64_t draw(std::uint64_t n) { return rng_() % n; }

    std::int64_t uniform(const ValueRange& r) {
        return r.lo + static_cast<std::int64_t>(
                          draw(static_cast<std::uint64_t>(r.hi - r.lo) + 1));
    }

    bool chance(std::uint64_t one_in) { return draw(one_in) == 0; }

    bool needs_points() const {
        return spec_.vote_type == VoteType::cumulative ||
               spec_.vote_type == VoteType::scoring;
    }

    void check_spec() {
        if (spec_.num_projects == 0) infeasible("num_projects must be at least 1");
        if (spec_.num_votes == 0) infeasible("num_votes must be at least 1");
        for (const auto& [name, range] :
             {std::pair<const char*, const ValueRange&>{"budget", spec_.budget},
              {"cost", spec_.cost},
              {"length", spec_.length},
              {"points", spec_.points}}) {
            if (range.empty()) infeasible(std::string(name) + " range is empty");
        }
        if (spec_.budget.lo < 0 || spec_.cost.lo < 0 || spec_.length.lo < 0) {
            infeasible("budget, cost and length bounds must be non-negative");
        }
        eff_max_len_ = static_cast<Count>(
            std::min<std::int64_t>(spec_.length.hi, spec_.num_projects));
        if (spec_.length.lo > eff_max_len_) {
            infeasible("min vote length exceeds the number of available projects");
        }
        if (spec_.vote_type == VoteType::cumulative && spec_.points.lo < 1) {
            infeasible("cumulative points must be strictly positive");
        }
        if (spec_.mutation) check_mutation(*spec_.mutation);
    }

    void check_mutation(const std::string& code) {
        const auto& codes = mutation_codes();
        if (std::find(codes.begin(), codes.end(), code) == codes.end()) {
            infeasible("unknown mutation '" + code + "'");
        }
        VoteType t = spec_.vote_type;
        auto require = [&](bool ok, const char* types) {
            if (!ok) {
                infeasible("mutation " + code + " applies only to " + types +
                           " instances");
            }
        };
        if (code == "SUM_COST") require(t == VoteType::approval, "approval");
        if (code == "POINTS_PRESENT") {
            require(t == VoteType::approval || t == VoteType::ordinal,
                    "approval or ordinal");
        }
        if (code == "POINTS_REQUIRED" || code == "POINT_RANGE" || code == "POINTS_ORDER") {
            require(needs_points(), "cumulative or scoring");
        }
        if (code == "SUM_POINTS") require(t == VoteType::cumulative, "cumulative");
        if ((code == "SUM_POINTS" || code == "POINTS_ORDER") && eff_max_len_ < 2) {
            infeasible("mutation " + code + " needs votes with at least 2 entries");
        }
        if (eff_max_len_ < 1 &&
            (code == "UNKNOWN_PROJECT_REF" || code == "POINTS_PRESENT" ||
             code == "POINTS_REQUIRED" || code == "POINT_RANGE")) {
            infeasible("mutation " + code + " needs a non-empty vote");
        }
    }

    void make_meta() {
        MetaSection& m = out_.meta;
        m.description = "synthetic " + std::string(to_string(spec_.vote_type)) + " instance";
        m.country = "Synthetic";
        m.unit = "generator";
        m.instance = "seed-" + std::to_string(spec_.seed);
        m.num_projects = spec_.num_projects;
        m.num_votes = spec_.num_votes;
        m.budget = Decimal::from_int(uniform(spec_.budget));
        m.rule = "greedy";
        m.vote_type = spec_.vote_type;

        m.min_length = static_cast<Count>(spec_.length.lo);
        m.mark_explicit("min_length");
        m.max_length = eff_max_len_;
        m.mark_explicit("max_length");

        if (spec_.vote_type == VoteType::cumulative) {
            m.max_sum_points = Decimal::from_int(spec_.points.hi *
                                                 static_cast<std::int64_t>(eff_max_len_));
            m.mark_explicit("max_sum_points");
        }
        if (spec_.vote_type == VoteType::scoring) {
            m.min_points = Decimal::from_int(spec_.points.lo);
            m.mark_explicit("min_points");
            m.max_points = Decimal::from_int(spec_.points.hi);
            m.mark_explicit("max_points");
            if (chance(4)) {
                m.default_score = Decimal::from_int(static_cast<std::int64_t>(draw(2)));
                m.mark_explicit("default_score");
            }
        }
        if (chance(4)) {
            m.comment = "synthetic data for toolkit tests";
            m.mark_explicit("comment");
        }
        if (chance(8)) {
            m.edition = std::to_string(1 + draw(9));
            m.mark_explicit("edition");
        }
        if (chance(8)) {
            m.date_begin = "2021-05-01";
            m.mark_explicit("date_begin");
            m.date_end = "2021-05-31";
            m.mark_explicit("date_end");
        }
        if (chance(8)) m.extra.emplace_back("source", "synthetic");
        out_.meta = resolve_defaults(m);
    }

    void make_projects() {
        with_name_ = chance(2);
        with_category_ = chance(2);
        with_target_ = chance(4);
        with_phase_ = chance(8);

        out_.project_header = {"project_id", "cost"};
        if (with_name_) out_.project_header.push_back("name");
        if (with_category_) out_.project_header.push_back("category");
        if (with_target_) out_.project_header.push_back("target");
        if (with_phase_) out_.project_header.push_back("phase");

        static const std::vector<std::string> kCategories = {
            "culture", "education", "sport", "health", "environment", "transit"};
        static const std::vector<std::string> kTargets = {"adults", "seniors", "children",
                                                          "youth", "families"};
        for (Count i = 1; i <= spec_.num_projects; ++i) {
            Project p;
            p.id = std::to_string(i);
            p.cost = Decimal::from_int(uniform(spec_.cost));
            if (with_name_) p.name = "Project " + p.id;
            if (with_category_) {
                std::vector<std::string> labels{kCategories[draw(kCategories.size())]};
                if (chance(3)) {
                    const std::string& second = kCategories[draw(kCategories.size())];
                    if (second != labels.front()) labels.push_back(second);
                }
                p.category = std::move(labels);
            }
            if (with_target_) p.target = std::vector<std::string>{kTargets[draw(kTargets.size())]};
            if (with_phase_) p.extra.emplace_back("phase", std::to_string(1 + draw(3)));
            out_.projects.push_back(std::move(p));
        }
    }

    std::vector<std::string> pick_project_ids(Count how_many) {
        std::vector<Count> indices(spec_.num_projects);
        std::iota(indices.begin(), indices.end(), 0);
        std::vector<std::string> picked;
        picked.reserve(how_many);
        for (Count i = 0; i < how_many; ++i) {
            std::size_t j = i + draw(indices.size() - i);
            std::swap(indices[i], indices[j]);
            picked.push_back(out_.projects[indices[i]].id);
        }
        return picked;
    }

    void make_votes() {
        with_age_ = chance(2);
        with_sex_ = chance(2);
        with_method_ = chance(4);
        with_ward_ = chance(8);
        with_points_ = needs_points();

        out_.vote_header = {"voter_id"};
        if (with_age_) out_.vote_header.push_back("age");
        if (with_sex_) out_.vote_header.push_back("sex");
        if (with_method_) out_.vote_header.push_back("voting_method");
        out_.vote_header.push_back("vote");
        if (with_points_) out_.vote_header.push_back("points");
        if (with_ward_) out_.vote_header.push_back("ward");

        for (Count i = 1; i <= spec_.num_votes; ++i) {
            VoteRecord v;
            v.voter_id = std::to_string(i);
            if (with_age_ && !chance(8)) v.age = static_cast<Count>(18 + draw(73));
            if (with_sex_ && !chance(8)) v.sex = chance(2) ? "f" : "m";
            if (with_method_) v.voting_method = chance(2) ? "internet" : "paper";
            if (with_ward_) v.extra.emplace_back("ward", std::to_string(1 + draw(12)));

            Count length = static_cast<Count>(
                uniform({spec_.length.lo, static_cast<std::int64_t>(eff_max_len_)}));
            if (i == 1) {
                Count floor = needs_points() ? std::min<Count>(2, eff_max_len_)
                                             : std::min<Count>(1, eff_max_len_);
                length = std::max(length, floor);
            }
            v.vote = pick_project_ids(length);

            if (with_points_) {
                std::vector<Decimal> points;
                points.reserve(length);
                for (Count k = 0; k < length; ++k) {
                    points.push_back(Decimal::from_int(uniform(spec_.points)));
                }
                if (i == 1 && length >= 2 && spec_.points.lo < spec_.points.hi) {
                    points[0] = Decimal::from_int(spec_.points.hi);
                    points[1] = Decimal::from_int(spec_.points.lo);
                }
                std::sort(points.begin(), points.end(),
                          [](const Decimal& a, const Decimal& b) { return b < a; });
                v.points = std::move(points);
            }
            out_.votes.push_back(std::move(v));
        }
    }

    VoteRecord* first_nonempty_vote() {
        for (VoteRecord& v : out_.votes) {
            if (!v.vote.empty()) return &v;
        }
        return nullptr;
    }

    void apply_mutation(const std::string& code) {
        MetaSection& m = out_.meta;
        if (code == "COUNT_PROJECTS") {
            m.num_projects += 1;
            return;
        }
        if (code == "COUNT_VOTES") {
            m.num_votes += 1;
            return;
        }
        if (code == "UNKNOWN_PROJECT_REF") {
            VoteRecord* v = first_nonempty_vote();
            if (!v) infeasible("no non-empty vote to mutate");
            v->vote.front() = "ghost";
            return;
        }
        if (code == "VOTE_LEN") {
            Count longest = 0;
            for (const VoteRecord& v : out_.votes) {
                longest = std::max(longest, static_cast<Count>(v.vote.size()));
            }
            if (longest >= 1) {
                m.max_length = longest - 1;
                m.mark_explicit("max_length");
            } else {
                m.min_length = 1;
                m.mark_explicit("min_length");
            }
            return;
        }
        if (code == "SUM_COST") {
            Decimal total;
            for (const Project& p : out_.projects) total = total + p.cost;
            m.min_sum_cost = total + Decimal::from_int(1);
            m.mark_explicit("min_sum_cost");
            return;
        }
        if (code == "POINTS_PRESENT") {
            VoteRecord* v = first_nonempty_vote();
            if (!v) infeasible("no non-empty vote to mutate");
            v->points = std::vector<Decimal>(v->vote.size(), Decimal::from_int(1));
            // approval/ordinal headers have no points column; add one so the
            // mutation survives serialization
            if (std::find(out_.vote_header.begin(), out_.vote_header.end(), "points") ==
                out_.vote_header.end()) {
                out_.vote_header.push_back("points");
            }
            return;
        }
        if (code == "POINTS_REQUIRED") {
            VoteRecord* v = first_nonempty_vote();
            if (!v) infeasible("no non-empty vote to mutate");
            v->points = std::nullopt;
            return;
        }
        if (code == "POINT_RANGE") {
            VoteRecord* v = first_nonempty_vote();
            if (!v || !v->points) infeasible("no pointed vote to mutate");
            if (spec_.vote_type == VoteType::cumulative) {
                v->points->back() = Decimal();  // zero breaks strict positivity
            } else {
                v->points->front() = Decimal::from_int(spec_.points.hi + 1);
            }
            return;
        }
        if (code == "SUM_POINTS") {
            VoteRecord& v = out_.votes.front();
            Decimal sum;
            for (const Decimal& p : *v.points) sum = sum + p;
            Decimal excess = *out_.meta.max_sum_points - sum + Decimal::from_int(1);
            v.points->front() = v.points->front() + excess;
            return;
        }
        if (code == "POINTS_ORDER") {
            VoteRecord& v = out_.votes.front();
            std::vector<Decimal>& points = *v.points;
            for (std::size_t i = 0; i + 1 < points.size(); ++i) {
                if (points[i + 1] < points[i]) {
                    std::swap(points[i], points[i + 1]);
                    return;
                }
            }
            points[1] = points[1] + Decimal::from_int(1);
            return;
        }
    }
};

}  // namespace

PbInstance generate_random_instance(const GeneratorSpec& spec) {
    return Builder(spec).build();
}

}  // namespace pbtk
