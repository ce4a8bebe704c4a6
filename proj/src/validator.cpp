#include "pbtk/validator.hpp"

#include <algorithm>
#include <unordered_map>

#include "pbtk/error.hpp"

namespace pbtk {

namespace {

const ViolationSubject kMetaSubject{ViolationSubject::Kind::meta, ""};

ViolationSubject project_subject(const std::string& id) {
    return {ViolationSubject::Kind::project, id};
}

ViolationSubject vote_subject(const std::string& id) {
    return {ViolationSubject::Kind::vote, id};
}

// Verbatim date values are fine as long as they look like a date at all:
// YYYY, YYYY-MM, YYYY-MM-DD, DD.MM.YYYY and the slash variants.
bool looks_like_date(const std::string& value) {
    auto digits = [](std::string_view s) {
        return !s.empty() &&
               std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::vector<std::string_view> parts;
    std::string_view rest = value;
    char sep = 0;
    for (char candidate : {'-', '.', '/'}) {
        if (value.find(candidate) != std::string::npos) {
            sep = candidate;
            break;
        }
    }
    if (sep == 0) return digits(value) && value.size() == 4;  // plain year
    while (true) {
        std::size_t at = rest.find(sep);
        parts.push_back(rest.substr(0, at));
        if (at == std::string_view::npos) break;
        rest.remove_prefix(at + 1);
    }
    if (parts.size() != 2 && parts.size() != 3) return false;
    for (std::string_view part : parts) {
        if (!digits(part) || part.size() > 4) return false;
    }
    return parts.front().size() == 4 || parts.back().size() == 4;
}

class Checker {
public:
    explicit Checker(const PbInstance& instance) : in_(instance) {}

    std::vector<Violation> run() {
        resolve_meta();
        check_meta();
        check_projects();
        check_votes();
        return std::move(violations_);
    }

private:
    const PbInstance& in_;
    MetaSection meta_;  // with defaults resolved
    std::vector<Violation> violations_;
    std::unordered_map<std::string, const Project*> projects_by_id_;

    void add(Severity severity, std::string code, ViolationSubject subject,
             std::string message) {
        violations_.push_back(
            {severity, std::move(code), std::move(subject), std::move(message)});
    }

    void resolve_meta() {
        try {
            meta_ = resolve_defaults(in_.meta);
        } catch (const Error& e) {
            meta_ = in_.meta;
            if (!meta_.min_length) meta_.min_length = 1;
            if (!meta_.max_length) meta_.max_length = meta_.num_projects;
            add(Severity::error, e.code(), kMetaSubject, e.what());
        }
    }

    void warn_semicolon(const std::string& value, const ViolationSubject& subject,
                        const std::string& what) {
        if (value.find(';') != std::string::npos) {
            add(Severity::warning, "SEMICOLON_IN_VALUE", subject,
                what + " contains ';', which the file format cannot represent");
        }
    }

    void warn_list_items(const std::vector<std::string>& items,
                         const ViolationSubject& subject, const std::string& what) {
        for (const std::string& item : items) {
            warn_semicolon(item, subject, what);
            if (item.find(',') != std::string::npos) {
                add(Severity::warning, "COMMA_IN_LIST_ITEM", subject,
                    what + " '" + item + "' contains ',', which splits on re-parse");
            }
        }
    }

    void check_meta() {
        const MetaSection& m = in_.meta;
        if (in_.projects.size() != m.num_projects) {
            add(Severity::error, "COUNT_PROJECTS", kMetaSubject,
                "PROJECTS section has " + std::to_string(in_.projects.size()) +
                    " projects but num_projects is " + std::to_string(m.num_projects));
        }
        if (in_.votes.size() != m.num_votes) {
            add(Severity::error, "COUNT_VOTES", kMetaSubject,
                "VOTES section has " + std::to_string(in_.votes.size()) +
                    " votes but num_votes is " + std::to_string(m.num_votes));
        }
        for (const auto& [key, value] : m.extra) {
            add(Severity::warning, "META_UNKNOWN_KEY", kMetaSubject,
                "non-standard META key '" + key + "'");
            warn_semicolon(value, kMetaSubject, "META value for '" + key + "'");
        }
        for (const auto& [label, value] :
             {std::pair<const char*, const std::optional<std::string>&>{"date_begin",
                                                                        m.date_begin},
              {"date_end", m.date_end}}) {
            if (value && !looks_like_date(*value)) {
                add(Severity::warning, "DATE_FORMAT", kMetaSubject,
                    std::string(label) + " '" + *value + "' matches no common date shape");
            }
        }
        for (const std::string& value :
             {m.description, m.country, m.unit, m.instance, m.rule}) {
            warn_semicolon(value, kMetaSubject, "META value");
        }

        auto warn_nonstandard = [&](const std::vector<std::string>& header,
                                    const std::vector<std::string>& standard,
                                    const char* section) {
            for (const std::string& column : header) {
                if (std::find(standard.begin(), standard.end(), column) == standard.end()) {
                    add(Severity::warning, "NONSTANDARD_COLUMN", kMetaSubject,
                        std::string(section) + " column '" + column + "' is non-standard");
                }
            }
        };
        warn_nonstandard(in_.project_header,
                         {"project_id", "cost", "name", "category", "target"}, "PROJECTS");
        warn_nonstandard(in_.vote_header,
                         {"voter_id", "age", "sex", "voting_method", "vote", "points"},
                         "VOTES");

        if (!in_.projects.empty()) {
            Decimal cheapest = in_.projects.front().cost;
            for (const Project& p : in_.projects) {
                if (p.cost < cheapest) cheapest = p.cost;
            }
            if (m.budget < cheapest) {
                add(Severity::warning, "BUDGET_UNDERFUNDED", kMetaSubject,
                    "budget " + m.budget.to_string() + " is below the cheapest project cost " +
                        cheapest.to_string() + "; nothing can be funded");
            }
        }
    }

    void check_projects() {
        for (const Project& p : in_.projects) {
            projects_by_id_.emplace(p.id, &p);
            ViolationSubject subject = project_subject(p.id);
            warn_semicolon(p.id, subject, "project_id");
            if (p.id.find(',') != std::string::npos) {
                add(Severity::warning, "COMMA_IN_LIST_ITEM", subject,
                    "project_id '" + p.id + "' contains ',', which splits inside vote lists");
            }
            if (p.name) warn_semicolon(*p.name, subject, "name");
            if (p.category) {
                if (p.category->empty()) {
                    add(Severity::warning, "EMPTY_CATEGORY", subject,
                        "category is present but holds no labels");
                }
                warn_list_items(*p.category, subject, "category label");
            }
            if (p.target) {
                if (p.target->empty()) {
                    add(Severity::warning, "EMPTY_TARGET", subject,
                        "target is present but holds no labels");
                }
                warn_list_items(*p.target, subject, "target label");
            }
            for (const auto& [key, value] : p.extra) {
                warn_semicolon(value, subject, "field '" + key + "'");
            }
        }
    }

    void check_votes() {
        for (const VoteRecord& v : in_.votes) {
            ViolationSubject subject = vote_subject(v.voter_id);
            check_vote_refs(v, subject);
            check_vote_length(v, subject);
            switch (meta_.vote_type) {
                case VoteType::approval:
                    check_sum_cost(v, subject);
                    check_points_absent(v, subject);
                    break;
                case VoteType::ordinal:
                    check_points_absent(v, subject);
                    break;
                case VoteType::cumulative:
                    check_points(v, subject, /*require_positive=*/true,
                                 /*check_sum=*/true);
                    break;
                case VoteType::scoring:
                    check_points(v, subject, /*require_positive=*/false,
                                 /*check_sum=*/false);
                    break;
            }
            warn_semicolon(v.voter_id, subject, "voter_id");
            warn_list_items(v.vote, subject, "vote entry");
            if (v.sex) warn_semicolon(*v.sex, subject, "sex");
            if (v.voting_method) warn_semicolon(*v.voting_method, subject, "voting_method");
            for (const auto& [key, value] : v.extra) {
                warn_semicolon(value, subject, "field '" + key + "'");
            }
        }
    }

    void check_vote_refs(const VoteRecord& v, const ViolationSubject& subject) {
        for (const std::string& id : v.vote) {
            if (!projects_by_id_.count(id)) {
                add(Severity::error, "UNKNOWN_PROJECT_REF", subject,
                    "vote references unknown project '" + id + "'");
            }
        }
    }

    void check_vote_length(const VoteRecord& v, const ViolationSubject& subject) {
        Count length = static_cast<Count>(v.vote.size());
        if (length < *meta_.min_length || length > *meta_.max_length) {
            add(Severity::error, "VOTE_LEN", subject,
                "vote has " + std::to_string(length) + " entries, allowed range is [" +
                    std::to_string(*meta_.min_length) + ", " +
                    std::to_string(*meta_.max_length) + "]");
        }
    }

    void check_sum_cost(const VoteRecord& v, const ViolationSubject& subject) {
        Decimal sum;
        for (const std::string& id : v.vote) {
            auto it = projects_by_id_.find(id);
            if (it != projects_by_id_.end()) sum = sum + it->second->cost;
        }
        if (sum < *meta_.min_sum_cost || *meta_.max_sum_cost < sum) {
            add(Severity::error, "SUM_COST", subject,
                "approved cost sum " + sum.to_string() + " is outside [" +
                    meta_.min_sum_cost->to_string() + ", " + meta_.max_sum_cost->to_string() +
                    "]");
        }
    }

    void check_points_absent(const VoteRecord& v, const ViolationSubject& subject) {
        if (v.points && !v.points->empty()) {
            add(Severity::error, "POINTS_PRESENT", subject,
                std::string(to_string(meta_.vote_type)) +
                    " votes must not carry a points list");
        }
    }

    void check_points(const VoteRecord& v, const ViolationSubject& subject,
                      bool require_positive, bool check_sum) {
        if (!v.points || v.points->empty()) {
            if (!v.vote.empty()) {
                add(Severity::error, "POINTS_REQUIRED", subject,
                    std::string(to_string(meta_.vote_type)) +
                        " votes must assign points to every listed project");
            }
            return;
        }
        const std::vector<Decimal>& points = *v.points;
        if (points.size() != v.vote.size()) {
            add(Severity::error, "POINTS_LENGTH", subject,
                "points has " + std::to_string(points.size()) + " entries, vote has " +
                    std::to_string(v.vote.size()));
            return;
        }
        Decimal sum;
        for (const Decimal& p : points) {
            bool below = *meta_.min_points > p;
            bool above = p > *meta_.max_points;
            bool nonpositive = require_positive && !(Decimal() < p);
            if (below || above || nonpositive) {
                add(Severity::error, "POINT_RANGE", subject,
                    "point " + p.to_string() +
                        (nonpositive && !below && !above
                             ? " must be strictly positive"
                             : " is outside [" + meta_.min_points->to_string() + ", " +
                                   meta_.max_points->to_string() + "]"));
            }
            sum = sum + p;
        }
        if (check_sum && (sum < *meta_.min_sum_points || *meta_.max_sum_points < sum)) {
            add(Severity::error, "SUM_POINTS", subject,
                "points sum " + sum.to_string() + " is outside [" +
                    meta_.min_sum_points->to_string() + ", " +
                    meta_.max_sum_points->to_string() + "]");
        }
        if (!is_strict_order(v.vote, points)) {
            add(Severity::error, "POINTS_ORDER", subject,
                "vote must be listed in non-increasing order of points");
        }
    }
};

}  // namespace

std::vector<Violation> validate(const PbInstance& instance) {
    return Checker(instance).run();
}

bool is_strict_order(const std::vector<std::string>& vote,
                     const std::vector<Decimal>& points) {
    if (vote.size() != points.size()) {
        throw Error("LENGTH_MISMATCH", "vote has " + std::to_string(vote.size()) +
                                           " entries, points has " +
                                           std::to_string(points.size()));
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1] < points[i]) return false;
    }
    return true;
}

}  // namespace pbtk
