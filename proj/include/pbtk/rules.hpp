#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pbtk/model.hpp"

namespace pbtk {

/// How the greedy walk treats a project that no longer fits the remaining
/// budget: skip it and keep walking, or stop the allocation there.
enum class GreedyVariant { skip_unaffordable, stop_at_first_unaffordable };

/// Deterministic ordering among equal-score projects.
enum class TieBreak { by_project_id_ascending, by_cost_ascending_then_id, by_input_order };

std::string_view to_string(GreedyVariant variant);
std::string_view to_string(TieBreak tie_break);

struct SkippedProject {
    std::string project_id;
    std::string reason;  // "unaffordable" or "not considered"

    bool operator==(const SkippedProject&) const = default;
};

/// One step of the greedy walk, in consideration order. Together the
/// decisions cover every project exactly once and let the walk be replayed.
struct GreedyDecision {
    std::string project_id;
    Decimal score;
    Decimal cost;
    Decimal remaining_before;
    std::string action;  // "funded", "unaffordable" or "not considered"

    bool operator==(const GreedyDecision&) const = default;
};

struct Outcome {
    GreedyVariant variant = GreedyVariant::skip_unaffordable;
    TieBreak tie_break = TieBreak::by_project_id_ascending;
    std::map<std::string, Decimal> scores;
    std::vector<std::string> funded;  // in funding order
    Decimal spent;
    Decimal remaining;
    std::vector<SkippedProject> skipped;
    std::vector<GreedyDecision> decisions;

    bool operator==(const Outcome&) const = default;
};

/// Total score per project under the instance's vote type: approval counts,
/// Borda for ordinal ballots, point sums for cumulative/scoring. Every
/// project gets an entry, possibly 0. Expects a validated instance.
/// Throws Error(UNSUPPORTED_SCORING_FN) for an ordinal scoring function
/// other than Borda.
std::map<std::string, Decimal> aggregate_scores(const PbInstance& instance);

/// score(p) = number of votes approving p. Throws Error(WRONG_VOTE_TYPE)
/// unless vote_type is approval.
std::map<std::string, Decimal> approval_scores(const PbInstance& instance);

/// Borda positional scores with m = num_projects: the k-th ranked project
/// of a ballot receives m - k points, so a top rank is worth the same no
/// matter how many projects the ballot ranks. Throws Error(WRONG_VOTE_TYPE)
/// unless vote_type is ordinal.
std::map<std::string, Decimal> borda_scores(const PbInstance& instance);

/// Point sums. Cumulative: unlisted projects contribute 0; scoring:
/// unlisted projects contribute default_score. Throws
/// Error(WRONG_VOTE_TYPE) unless vote_type is cumulative or scoring.
std::map<std::string, Decimal> points_scores(const PbInstance& instance);

/// Runs the greedy rule: projects in decreasing score order (ties resolved
/// by tie_break) are funded while they fit the remaining budget. Validates
/// first and throws Error(VALIDATION_REQUIRED) when the instance has
/// error-severity violations; throws Error(UNSUPPORTED_RULE) when meta.rule
/// is not "greedy".
Outcome greedy_outcome(const PbInstance& instance,
                       GreedyVariant variant = GreedyVariant::skip_unaffordable,
                       TieBreak tie_break = TieBreak::by_project_id_ascending);

}  // namespace pbtk
