#include "pbtk/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace pbtk {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json subject_json(const ViolationSubject& subject) {
    ordered_json j;
    switch (subject.kind) {
        case ViolationSubject::Kind::meta:
            j["kind"] = "meta";
            break;
        case ViolationSubject::Kind::project:
            j["kind"] = "project";
            j["id"] = subject.id;
            break;
        case ViolationSubject::Kind::vote:
            j["kind"] = "vote";
            j["id"] = subject.id;
            break;
    }
    return j;
}

}  // namespace

std::string subject_to_string(const ViolationSubject& subject) {
    switch (subject.kind) {
        case ViolationSubject::Kind::meta: return "meta";
        case ViolationSubject::Kind::project: return "project " + subject.id;
        case ViolationSubject::Kind::vote: return "vote " + subject.id;
    }
    return "meta";
}

std::string diagnostics_to_text(const std::vector<Diagnostic>& diagnostics) {
    std::ostringstream out;
    for (const Diagnostic& d : diagnostics) {
        out << "line " << d.line;
        if (d.column) out << ":" << *d.column;
        out << ": " << to_string(d.severity) << " " << d.code << ": " << d.message << "\n";
    }
    return out.str();
}

std::string diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
    ordered_json list = ordered_json::array();
    for (const Diagnostic& d : diagnostics) {
        ordered_json j;
        j["severity"] = std::string(to_string(d.severity));
        j["line"] = d.line;
        if (d.column) j["column"] = *d.column;
        j["code"] = d.code;
        j["message"] = d.message;
        list.push_back(std::move(j));
    }
    ordered_json doc;
    doc["diagnostics"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string violations_to_text(const std::vector<Violation>& violations) {
    std::ostringstream out;
    std::size_t errors = 0, warnings = 0;
    for (const Violation& v : violations) {
        (v.severity == Severity::error ? errors : warnings) += 1;
        out << (v.severity == Severity::error ? "ERROR" : "WARNING") << " " << v.code << " "
            << subject_to_string(v.subject) << ": " << v.message << "\n";
    }
    out << errors << " errors, " << warnings << " warnings\n";
    return out.str();
}

std::string violations_to_json(const std::vector<Violation>& violations) {
    std::size_t errors = 0, warnings = 0;
    ordered_json list = ordered_json::array();
    for (const Violation& v : violations) {
        (v.severity == Severity::error ? errors : warnings) += 1;
        ordered_json j;
        j["severity"] = std::string(to_string(v.severity));
        j["code"] = v.code;
        j["subject"] = subject_json(v.subject);
        j["message"] = v.message;
        list.push_back(std::move(j));
    }
    ordered_json doc;
    doc["errors"] = errors;
    doc["warnings"] = warnings;
    doc["violations"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string outcome_to_text(const Outcome& outcome) {
    std::ostringstream out;
    out << "variant: " << to_string(outcome.variant) << "\n";
    out << "tie_break: " << to_string(outcome.tie_break) << "\n";
    out << "scores:\n";
    for (const GreedyDecision& d : outcome.decisions) {
        out << "  " << d.project_id << "; " << d.score.to_string() << "; cost "
            << d.cost.to_string() << "; " << d.action << "\n";
    }
    out << "funded:";
    for (const std::string& id : outcome.funded) out << " " << id;
    out << "\n";
    out << "spent: " << outcome.spent.to_string() << "\n";
    out << "remaining: " << outcome.remaining.to_string() << "\n";
    return out.str();
}

std::string outcome_to_json(const Outcome& outcome) {
    ordered_json doc;
    doc["variant"] = std::string(to_string(outcome.variant));
    doc["tie_break"] = std::string(to_string(outcome.tie_break));
    ordered_json scores = ordered_json::array();
    for (const GreedyDecision& d : outcome.decisions) {
        ordered_json j;
        j["project_id"] = d.project_id;
        j["score"] = d.score.to_string();
        scores.push_back(std::move(j));
    }
    doc["scores"] = std::move(scores);
    doc["funded"] = outcome.funded;
    doc["spent"] = outcome.spent.to_string();
    doc["remaining"] = outcome.remaining.to_string();
    ordered_json skipped = ordered_json::array();
    for (const SkippedProject& s : outcome.skipped) {
        ordered_json j;
        j["project_id"] = s.project_id;
        j["reason"] = s.reason;
        skipped.push_back(std::move(j));
    }
    doc["skipped"] = std::move(skipped);
    return doc.dump(2) + "\n";
}

std::string summary_to_text(const InstanceSummary& s) {
    std::ostringstream out;
    out << "description: " << s.description << "\n";
    out << "country: " << s.country << "\n";
    out << "unit: " << s.unit << "\n";
    out << "instance: " << s.instance << "\n";
    out << "vote_type: " << s.vote_type << "\n";
    out << "rule: " << s.rule << "\n";
    out << "projects: " << s.num_projects << "\n";
    out << "votes: " << s.num_votes << "\n";
    out << "budget: " << s.budget.to_string() << "\n";
    out << "total project cost: " << s.total_project_cost.to_string() << "\n";
    out << "vote length: min " << s.min_vote_length.to_string() << ", max "
        << s.max_vote_length.to_string() << ", mean " << s.mean_vote_length.to_string()
        << "\n";
    if (!s.category_counts.empty()) {
        out << "categories:\n";
        for (const auto& [label, count] : s.category_counts) {
            out << "  " << label << ": " << count << "\n";
        }
    }
    return out.str();
}

std::string summary_to_json(const InstanceSummary& s) {
    ordered_json doc;
    doc["description"] = s.description;
    doc["country"] = s.country;
    doc["unit"] = s.unit;
    doc["instance"] = s.instance;
    doc["vote_type"] = s.vote_type;
    doc["rule"] = s.rule;
    doc["num_projects"] = s.num_projects;
    doc["num_votes"] = s.num_votes;
    doc["budget"] = s.budget.to_string();
    doc["total_project_cost"] = s.total_project_cost.to_string();
    ordered_json lengths;
    lengths["min"] = s.min_vote_length.to_string();
    lengths["max"] = s.max_vote_length.to_string();
    lengths["mean"] = s.mean_vote_length.to_string();
    doc["vote_length"] = std::move(lengths);
    ordered_json categories = ordered_json::object();
    for (const auto& [label, count] : s.category_counts) categories[label] = count;
    doc["category_counts"] = std::move(categories);
    return doc.dump(2) + "\n";
}

}  // namespace pbtk
