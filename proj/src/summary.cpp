#include "pbtk/summary.hpp"

#include <algorithm>
#include <map>

namespace pbtk {

InstanceSummary summarize(const PbInstance& instance) {
    InstanceSummary s;
    const MetaSection& m = instance.meta;
    s.description = m.description;
    s.country = m.country;
    s.unit = m.unit;
    s.instance = m.instance;
    s.vote_type = std::string(to_string(m.vote_type));
    s.rule = m.rule;
    s.num_projects = static_cast<Count>(instance.projects.size());
    s.num_votes = static_cast<Count>(instance.votes.size());
    s.budget = m.budget;

    std::map<std::string, Count> categories;
    for (const Project& p : instance.projects) {
        s.total_project_cost = s.total_project_cost + p.cost;
        if (p.category) {
            for (const std::string& label : *p.category) ++categories[label];
        }
    }
    s.category_counts.assign(categories.begin(), categories.end());

    if (!instance.votes.empty()) {
        std::size_t min_len = instance.votes.front().vote.size();
        std::size_t max_len = min_len;
        std::int64_t total = 0;
        for (const VoteRecord& v : instance.votes) {
            min_len = std::min(min_len, v.vote.size());
            max_len = std::max(max_len, v.vote.size());
            total += static_cast<std::int64_t>(v.vote.size());
        }
        s.min_vote_length = Decimal::from_int(static_cast<std::int64_t>(min_len));
        s.max_vote_length = Decimal::from_int(static_cast<std::int64_t>(max_len));
        s.mean_vote_length =
            Decimal::ratio(total, static_cast<std::int64_t>(instance.votes.size()));
    }
    return s;
}

}  // namespace pbtk
