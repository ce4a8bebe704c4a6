#include "pbtk/model.hpp"

#include <algorithm>

#include "pbtk/error.hpp"

namespace pbtk {

std::string_view to_string(VoteType type) {
    switch (type) {
        case VoteType::approval: return "approval";
        case VoteType::ordinal: return "ordinal";
        case VoteType::cumulative: return "cumulative";
        case VoteType::scoring: return "scoring";
    }
    return "approval";
}

std::optional<VoteType> vote_type_from_string(std::string_view name) {
    if (name == "approval") return VoteType::approval;
    if (name == "ordinal") return VoteType::ordinal;
    if (name == "cumulative") return VoteType::cumulative;
    if (name == "scoring") return VoteType::scoring;
    return std::nullopt;
}

void MetaSection::mark_explicit(std::string_view key) {
    auto it = std::lower_bound(explicit_keys.begin(), explicit_keys.end(), key);
    if (it == explicit_keys.end() || *it != key) {
        explicit_keys.insert(it, std::string(key));
    }
}

bool MetaSection::is_explicit(std::string_view key) const {
    return std::binary_search(explicit_keys.begin(), explicit_keys.end(), key);
}

const Project* PbInstance::find_project(std::string_view id) const {
    for (const Project& p : projects) {
        if (p.id == id) return &p;
    }
    return nullptr;
}

MetaSection resolve_defaults(const MetaSection& meta) {
    MetaSection out = meta;
    if (!out.min_length) out.min_length = 1;
    if (!out.max_length) out.max_length = out.num_projects;
    switch (out.vote_type) {
        case VoteType::approval:
            if (!out.min_sum_cost) out.min_sum_cost = Decimal();
            if (!out.max_sum_cost) out.max_sum_cost = Decimal::positive_infinity();
            break;
        case VoteType::ordinal:
            if (!out.scoring_fn) out.scoring_fn = "Borda";
            break;
        case VoteType::cumulative:
            if (!out.max_sum_points) {
                throw Error("MISSING_REQUIRED_KEY",
                            "max_sum_points is required when vote_type is cumulative");
            }
            if (!out.min_points) out.min_points = Decimal();
            if (!out.max_points) out.max_points = *out.max_sum_points;
            if (!out.min_sum_points) out.min_sum_points = Decimal();
            break;
        case VoteType::scoring:
            if (!out.min_points) out.min_points = Decimal::negative_infinity();
            if (!out.max_points) out.max_points = Decimal::positive_infinity();
            if (!out.default_score) out.default_score = Decimal();
            break;
    }
    return out;
}

bool project_id_less(std::string_view a, std::string_view b) {
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (all_digits(a) && all_digits(b)) {
        std::string_view sa = a.substr(std::min(a.find_first_not_of('0'), a.size() - 1));
        std::string_view sb = b.substr(std::min(b.find_first_not_of('0'), b.size() - 1));
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
        return a < b;  // numerically equal ("07" vs "7"): keep a total order
    }
    return a < b;
}

}  // namespace pbtk
