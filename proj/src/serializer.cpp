#include <string>
#include <string_view>
#include <vector>

#include "pbtk/parser.hpp"

namespace pbtk {

namespace {

void append_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += "; ";
        out += fields[i];
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == '\t')) out.pop_back();
    out += '\n';
}

std::string join_list(const std::vector<std::string>& items) {
    std::string joined;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) joined += ',';
        joined += items[i];
    }
    return joined;
}

std::string join_points(const std::vector<Decimal>& points) {
    std::string joined;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) joined += ',';
        joined += points[i].to_string();
    }
    return joined;
}

void append_meta(std::string& out, const MetaSection& m) {
    out += "META\n";
    append_row(out, {"key", "value"});
    append_row(out, {"description", m.description});
    append_row(out, {"country", m.country});
    append_row(out, {"unit", m.unit});
    append_row(out, {"instance", m.instance});
    append_row(out, {"num_projects", std::to_string(m.num_projects)});
    append_row(out, {"num_votes", std::to_string(m.num_votes)});
    append_row(out, {"budget", m.budget.to_string()});
    append_row(out, {"vote_type", std::string(to_string(m.vote_type))});
    append_row(out, {"rule", m.rule});

    auto text_key = [&](std::string_view key, const std::optional<std::string>& slot) {
        if (slot && m.is_explicit(key)) append_row(out, {std::string(key), *slot});
    };
    auto count_key = [&](std::string_view key, const std::optional<Count>& slot) {
        if (slot && m.is_explicit(key)) {
            append_row(out, {std::string(key), std::to_string(*slot)});
        }
    };
    auto decimal_key = [&](std::string_view key, const std::optional<Decimal>& slot) {
        if (slot && m.is_explicit(key)) {
            append_row(out, {std::string(key), slot->to_string()});
        }
    };
    text_key("subunit", m.subunit);
    text_key("date_begin", m.date_begin);
    text_key("date_end", m.date_end);
    text_key("language", m.language);
    text_key("edition", m.edition);
    text_key("district", m.district);
    text_key("comment", m.comment);
    count_key("min_length", m.min_length);
    count_key("max_length", m.max_length);
    decimal_key("min_sum_cost", m.min_sum_cost);
    decimal_key("max_sum_cost", m.max_sum_cost);
    text_key("scoring_fn", m.scoring_fn);
    decimal_key("min_points", m.min_points);
    decimal_key("max_points", m.max_points);
    decimal_key("min_sum_points", m.min_sum_points);
    decimal_key("max_sum_points", m.max_sum_points);
    decimal_key("default_score", m.default_score);
    for (const auto& [key, value] : m.extra) append_row(out, {key, value});
}

std::string extra_value(const ExtraFields& extra, const std::string& column) {
    for (const auto& [key, value] : extra) {
        if (key == column) return value;
    }
    return "";
}

}  // namespace

std::string serialize_canonical(const PbInstance& instance) {
    std::string out;
    append_meta(out, instance.meta);

    out += "PROJECTS\n";
    append_row(out, instance.project_header);
    for (const Project& p : instance.projects) {
        std::vector<std::string> row;
        row.reserve(instance.project_header.size());
        for (const std::string& column : instance.project_header) {
            if (column == "project_id") {
                row.push_back(p.id);
            } else if (column == "cost") {
                row.push_back(p.cost.to_string());
            } else if (column == "name") {
                row.push_back(p.name.value_or(""));
            } else if (column == "category") {
                row.push_back(p.category ? join_list(*p.category) : "");
            } else if (column == "target") {
                row.push_back(p.target ? join_list(*p.target) : "");
            } else {
                row.push_back(extra_value(p.extra, column));
            }
        }
        append_row(out, row);
    }

    out += "VOTES\n";
    append_row(out, instance.vote_header);
    for (const VoteRecord& v : instance.votes) {
        std::vector<std::string> row;
        row.reserve(instance.vote_header.size());
        for (const std::string& column : instance.vote_header) {
            if (column == "voter_id") {
                row.push_back(v.voter_id);
            } else if (column == "age") {
                row.push_back(v.age ? std::to_string(*v.age) : "");
            } else if (column == "sex") {
                row.push_back(v.sex.value_or(""));
            } else if (column == "voting_method") {
                row.push_back(v.voting_method.value_or(""));
            } else if (column == "vote") {
                row.push_back(join_list(v.vote));
            } else if (column == "points") {
                row.push_back(v.points ? join_points(*v.points) : "");
            } else {
                row.push_back(extra_value(v.extra, column));
            }
        }
        append_row(out, row);
    }
    return out;
}

}  // namespace pbtk
