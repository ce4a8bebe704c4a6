#include "pbtk/rules.hpp"

#include <algorithm>

#include "pbtk/error.hpp"
#include "pbtk/validator.hpp"

namespace pbtk {

std::string_view to_string(GreedyVariant variant) {
    return variant == GreedyVariant::skip_unaffordable ? "skip_unaffordable"
                                                       : "stop_at_first_unaffordable";
}

std::string_view to_string(TieBreak tie_break) {
    switch (tie_break) {
        case TieBreak::by_project_id_ascending: return "by_project_id_ascending";
        case TieBreak::by_cost_ascending_then_id: return "by_cost_ascending_then_id";
        case TieBreak::by_input_order: return "by_input_order";
    }
    return "by_project_id_ascending";
}

namespace {

std::map<std::string, Decimal> zero_scores(const PbInstance& instance) {
    std::map<std::string, Decimal> scores;
    for (const Project& p : instance.projects) scores.emplace(p.id, Decimal());
    return scores;
}

void require_type(const PbInstance& instance, VoteType expected, const char* fn) {
    if (instance.meta.vote_type != expected) {
        throw Error("WRONG_VOTE_TYPE",
                    std::string(fn) + " requires vote_type " + std::string(to_string(expected)) +
                        ", instance has " + std::string(to_string(instance.meta.vote_type)));
    }
}

}  // namespace

std::map<std::string, Decimal> approval_scores(const PbInstance& instance) {
    require_type(instance, VoteType::approval, "approval_scores");
    auto scores = zero_scores(instance);
    for (const VoteRecord& v : instance.votes) {
        for (const std::string& id : v.vote) {
            auto it = scores.find(id);
            if (it != scores.end()) it->second = it->second + Decimal::from_int(1);
        }
    }
    return scores;
}

std::map<std::string, Decimal> borda_scores(const PbInstance& instance) {
    require_type(instance, VoteType::ordinal, "borda_scores");
    auto scores = zero_scores(instance);
    const std::int64_t m = instance.meta.num_projects;
    for (const VoteRecord& v : instance.votes) {
        std::int64_t rank = 1;
        for (const std::string& id : v.vote) {
            auto it = scores.find(id);
            if (it != scores.end()) {
                it->second = it->second + Decimal::from_int(m - rank);
            }
            ++rank;
        }
    }
    return scores;
}

std::map<std::string, Decimal> points_scores(const PbInstance& instance) {
    VoteType type = instance.meta.vote_type;
    if (type != VoteType::cumulative && type != VoteType::scoring) {
        throw Error("WRONG_VOTE_TYPE", "points_scores requires cumulative or scoring, "
                                       "instance has " +
                                           std::string(to_string(type)));
    }
    auto scores = zero_scores(instance);
    std::map<std::string, std::int64_t> listed_count;
    for (const VoteRecord& v : instance.votes) {
        if (!v.points) continue;
        std::size_t n = std::min(v.vote.size(), v.points->size());
        for (std::size_t i = 0; i < n; ++i) {
            auto it = scores.find(v.vote[i]);
            if (it != scores.end()) {
                it->second = it->second + (*v.points)[i];
                ++listed_count[v.vote[i]];
            }
        }
    }
    if (type == VoteType::scoring) {
        MetaSection meta = resolve_defaults(instance.meta);
        const Decimal default_score = *meta.default_score;
        if (!default_score.is_zero()) {
            const std::int64_t votes = static_cast<std::int64_t>(instance.votes.size());
            for (auto& [id, score] : scores) {
                std::int64_t unlisted = votes - listed_count[id];
                score = score + default_score.scaled_by(unlisted);
            }
        }
    }
    return scores;
}

std::map<std::string, Decimal> aggregate_scores(const PbInstance& instance) {
    switch (instance.meta.vote_type) {
        case VoteType::approval:
            return approval_scores(instance);
        case VoteType::ordinal: {
            MetaSection meta = resolve_defaults(instance.meta);
            if (*meta.scoring_fn != "Borda") {
                throw Error("UNSUPPORTED_SCORING_FN",
                            "scoring_fn '" + *meta.scoring_fn + "' is not supported; "
                            "only Borda is implemented");
            }
            return borda_scores(instance);
        }
        case VoteType::cumulative:
        case VoteType::scoring:
            return points_scores(instance);
    }
    return {};
}

Outcome greedy_outcome(const PbInstance& instance, GreedyVariant variant,
                       TieBreak tie_break) {
    if (instance.meta.rule != "greedy") {
        throw Error("UNSUPPORTED_RULE", "aggregation rule '" + instance.meta.rule +
                                            "' is not supported; only greedy is implemented");
    }
    std::vector<Violation> violations = validate(instance);
    for (const Violation& v : violations) {
        if (v.severity == Severity::error) {
            throw Error("VALIDATION_REQUIRED",
                        "instance has validation errors (first: " + v.code +
                            "); refusing to compute an outcome");
        }
    }

    Outcome outcome;
    outcome.variant = variant;
    outcome.tie_break = tie_break;
    outcome.scores = aggregate_scores(instance);

    std::vector<std::size_t> order(instance.projects.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto score_of = [&](std::size_t i) -> const Decimal& {
        return outcome.scores.at(instance.projects[i].id);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Decimal& sa = score_of(a);
        const Decimal& sb = score_of(b);
        if (sa != sb) return sb < sa;
        const Project& pa = instance.projects[a];
        const Project& pb = instance.projects[b];
        switch (tie_break) {
            case TieBreak::by_project_id_ascending:
                return project_id_less(pa.id, pb.id);
            case TieBreak::by_cost_ascending_then_id:
                if (pa.cost != pb.cost) return pa.cost < pb.cost;
                return project_id_less(pa.id, pb.id);
            case TieBreak::by_input_order:
                return a < b;
        }
        return a < b;
    });

    Decimal remaining = instance.meta.budget;
    Decimal spent;
    bool stopped = false;
    for (std::size_t index : order) {
        const Project& p = instance.projects[index];
        GreedyDecision decision{p.id, score_of(index), p.cost, remaining, ""};
        if (stopped) {
            decision.action = "not considered";
            outcome.skipped.push_back({p.id, "not considered"});
        } else if (p.cost <= remaining) {
            decision.action = "funded";
            outcome.funded.push_back(p.id);
            spent = spent + p.cost;
            remaining = remaining - p.cost;
        } else {
            decision.action = "unaffordable";
            outcome.skipped.push_back({p.id, "unaffordable"});
            if (variant == GreedyVariant::stop_at_first_unaffordable) stopped = true;
        }
        outcome.decisions.push_back(std::move(decision));
    }
    outcome.spent = spent;
    outcome.remaining = remaining;
    return outcome;
}

}  // namespace pbtk
