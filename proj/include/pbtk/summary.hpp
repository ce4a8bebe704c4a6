#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbtk/model.hpp"

namespace pbtk {

/// Descriptive overview of one instance. Counts reflect the actual section
/// sizes, not the META claims, so a summary is honest even for files the
/// validator would reject.
struct InstanceSummary {
    std::string description;
    std::string country;
    std::string unit;
    std::string instance;
    std::string vote_type;
    std::string rule;
    Count num_projects = 0;
    Count num_votes = 0;
    Decimal budget;
    Decimal total_project_cost;
    Decimal min_vote_length;
    Decimal max_vote_length;
    Decimal mean_vote_length;
    std::vector<std::pair<std::string, Count>> category_counts;  // sorted by label

    bool operator==(const InstanceSummary&) const = default;
};

InstanceSummary summarize(const PbInstance& instance);

}  // namespace pbtk
