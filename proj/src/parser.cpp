#include "pbtk/parser.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>

#include "pbtk/error.hpp"

namespace pbtk {

std::string_view to_string(Severity severity) {
    return severity == Severity::error ? "error" : "warning";
}

std::size_t ParseResult::error_count() const {
    return static_cast<std::size_t>(std::count_if(
        diagnostics.begin(), diagnostics.end(),
        [](const Diagnostic& d) { return d.severity == Severity::error; }));
}

std::size_t ParseResult::warning_count() const {
    return diagnostics.size() - error_count();
}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

struct Field {
    std::string_view value;  // trimmed
    std::size_t column;      // 1-based position of the raw field start
};

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = line.find(';', start);
        std::string_view raw = line.substr(start, semi == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : semi - start);
        fields.push_back({trim(raw), start + 1});
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return fields;
}

// Splits a multi-valued field on ","; items are trimmed and empty items
// dropped (the format has no escaping, so "a,,b" can only be noise).
std::vector<std::string> split_list(std::string_view field) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= field.size()) {
        std::size_t comma = field.find(',', start);
        std::string_view raw = field.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        std::string_view item = trim(raw);
        if (!item.empty()) items.emplace_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t find_invalid_utf8(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    while (i < n) {
        unsigned char b = byte(i);
        if (b < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        unsigned char lo = 0x80, hi = 0xBF;
        if (b >= 0xC2 && b <= 0xDF) {
            len = 2;
        } else if (b >= 0xE0 && b <= 0xEF) {
            len = 3;
            if (b == 0xE0) lo = 0xA0;
            if (b == 0xED) hi = 0x9F;
        } else if (b >= 0xF0 && b <= 0xF4) {
            len = 4;
            if (b == 0xF0) lo = 0x90;
            if (b == 0xF4) hi = 0x8F;
        } else {
            return i;  // 0x80..0xC1 continuation/overlong lead, 0xF5..0xFF
        }
        if (i + len > n) return i;
        if (byte(i + 1) < lo || byte(i + 1) > hi) return i;
        for (std::size_t k = 2; k < len; ++k) {
            if (byte(i + k) < 0x80 || byte(i + k) > 0xBF) return i;
        }
        i += len;
    }
    return std::string_view::npos;
}

std::optional<Count> parse_count(std::string_view text) {
    if (text.empty() || text.size() > 10) return std::nullopt;
    std::uint64_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (value > std::numeric_limits<Count>::max()) return std::nullopt;
    return static_cast<Count>(value);
}

enum class Section { none, meta, projects, votes };

const std::vector<std::string> kStandardProjectColumns = {"project_id", "cost", "name",
                                                          "category", "target"};
const std::vector<std::string> kStandardVoteColumns = {"voter_id", "age",  "sex",
                                                       "voting_method", "vote", "points"};

bool contains(const std::vector<std::string>& v, std::string_view s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParseResult run() {
        std::size_t bad = find_invalid_utf8(text_);
        if (bad != std::string_view::npos) {
            std::size_t line = 1, line_start = 0;
            for (std::size_t i = 0; i < bad; ++i) {
                if (text_[i] == '\n') {
                    ++line;
                    line_start = i + 1;
                }
            }
            error(line, bad - line_start + 1, "INVALID_UTF8",
                  "invalid UTF-8 byte sequence");
            return finish();
        }

        std::size_t pos = 0, line_no = 0;
        while (pos < text_.size()) {
            std::size_t eol = text_.find('\n', pos);
            std::string_view line = text_.substr(
                pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
            ++line_no;
            handle_line(line_no, line);
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }
        last_line_ = line_no == 0 ? 1 : line_no;
        end_of_input();
        return finish();
    }

private:
    std::string_view text_;
    std::vector<Diagnostic> diagnostics_;
    Section current_ = Section::none;
    bool seen_meta_ = false, seen_projects_ = false, seen_votes_ = false;
    std::size_t meta_line_ = 1, projects_line_ = 1, votes_line_ = 1;
    std::size_t last_line_ = 1;
    bool header_pending_ = false;
    bool meta_finalized_ = false;

    PbInstance instance_;
    std::set<std::string, std::less<>> meta_keys_seen_;
    std::set<std::string, std::less<>> obligatory_seen_;
    bool vote_type_ok_ = false;
    std::set<std::string, std::less<>> declared_project_ids_;
    std::set<std::string, std::less<>> voter_ids_;
    bool project_header_ok_ = false;
    bool vote_header_ok_ = false;

    void error(std::size_t line, std::optional<std::size_t> column, std::string code,
               std::string message) {
        diagnostics_.push_back(
            {Severity::error, line, column, std::move(code), std::move(message)});
    }

    void warning(std::size_t line, std::optional<std::size_t> column, std::string code,
                 std::string message) {
        diagnostics_.push_back(
            {Severity::warning, line, column, std::move(code), std::move(message)});
    }

    void handle_line(std::size_t line_no, std::string_view raw) {
        std::string_view line = trim(raw);
        if (line.empty()) return;
        if (line == "META" || line == "PROJECTS" || line == "VOTES") {
            enter_section(line_no, line);
            return;
        }
        switch (current_) {
            case Section::none:
                error(line_no, 1, "CONTENT_OUTSIDE_SECTION",
                      "content before the META section keyword");
                break;
            case Section::meta:
                meta_line_content(line_no, line);
                break;
            case Section::projects:
                projects_line_content(line_no, line);
                break;
            case Section::votes:
                votes_line_content(line_no, line);
                break;
        }
    }

    void enter_section(std::size_t line_no, std::string_view keyword) {
        Section next = keyword == "META"       ? Section::meta
                       : keyword == "PROJECTS" ? Section::projects
                                               : Section::votes;
        bool& seen = next == Section::meta       ? seen_meta_
                     : next == Section::projects ? seen_projects_
                                                 : seen_votes_;
        Section expected = !seen_meta_       ? Section::meta
                           : !seen_projects_ ? Section::projects
                                             : Section::votes;
        if (seen) {
            error(line_no, 1, "SECTION_OUT_OF_ORDER",
                  std::string(keyword) + " section appears more than once");
        } else if (next != expected) {
            error(line_no, 1, "SECTION_OUT_OF_ORDER",
                  std::string(keyword) + " section out of order");
        }
        leave_section(line_no);
        seen = true;
        current_ = next;
        header_pending_ = true;
        (next == Section::meta       ? meta_line_
         : next == Section::projects ? projects_line_
                                     : votes_line_) = line_no;
    }

    void leave_section(std::size_t line_no) {
        if (current_ == Section::meta && !meta_finalized_) {
            finalize_meta(line_no);
        }
        if (current_ != Section::none && header_pending_) {
            std::size_t at = current_ == Section::meta       ? meta_line_
                             : current_ == Section::projects ? projects_line_
                                                             : votes_line_;
            error(at, std::nullopt, "HEADER_MISSING_REQUIRED_COLUMN",
                  section_name(current_) + " section has no header row");
        }
    }

    static std::string section_name(Section s) {
        switch (s) {
            case Section::meta: return "META";
            case Section::projects: return "PROJECTS";
            case Section::votes: return "VOTES";
            default: return "";
        }
    }

    // ---- META ----

    void meta_line_content(std::size_t line_no, std::string_view line) {
        std::vector<Field> fields = split_fields(line);
        if (header_pending_) {
            header_pending_ = false;
            if (fields.size() != 2 || fields[0].value != "key" || fields[1].value != "value") {
                error(line_no, 1, "HEADER_MISSING_REQUIRED_COLUMN",
                      "META header row must be \"key; value\"");
            }
            return;
        }
        if (fields.size() != 2) {
            error(line_no, 1, "ROW_ARITY_MISMATCH",
                  "META row has " + std::to_string(fields.size()) +
                      " fields, expected 2 (key; value)");
            return;
        }
        std::string key(fields[0].value);
        std::string value(fields[1].value);
        if (key.empty()) {
            error(line_no, fields[0].column, "EMPTY_ID", "META key is empty");
            return;
        }
        if (meta_keys_seen_.count(key)) {
            error(line_no, fields[0].column, "DUPLICATE_META_KEY",
                  "META key '" + key + "' appears more than once");
            return;
        }
        meta_keys_seen_.insert(key);
        set_meta_key(line_no, fields[1].column, key, value);
    }

    void set_meta_key(std::size_t line_no, std::size_t col, const std::string& key,
                      const std::string& value) {
        MetaSection& m = instance_.meta;
        auto obligatory_text = [&](std::string& slot) {
            slot = value;
            obligatory_seen_.insert(key);
        };
        auto optional_text = [&](std::optional<std::string>& slot) {
            slot = value;
            m.mark_explicit(key);
        };
        auto count_key = [&](std::optional<Count>& slot) {
            if (auto c = parse_count(value)) {
                slot = *c;
                m.mark_explicit(key);
            } else {
                error(line_no, col, "MALFORMED_NUMBER",
                      key + " must be a non-negative integer, got '" + value + "'");
            }
        };
        auto money_key = [&](std::optional<Decimal>& slot) {
            auto d = Decimal::from_string(value);
            if (d && !d->is_negative()) {
                slot = *d;
                m.mark_explicit(key);
            } else {
                error(line_no, col, "MALFORMED_NUMBER",
                      key + " must be a non-negative decimal, got '" + value + "'");
            }
        };
        auto signed_key = [&](std::optional<Decimal>& slot) {
            if (auto d = Decimal::from_string(value)) {
                slot = *d;
                m.mark_explicit(key);
            } else {
                error(line_no, col, "MALFORMED_NUMBER",
                      key + " must be a decimal, got '" + value + "'");
            }
        };

        if (key == "description") return obligatory_text(m.description);
        if (key == "country") return obligatory_text(m.country);
        if (key == "unit") return obligatory_text(m.unit);
        if (key == "instance") return obligatory_text(m.instance);
        if (key == "rule") return obligatory_text(m.rule);
        if (key == "num_projects") {
            obligatory_seen_.insert(key);
            if (auto c = parse_count(value)) {
                m.num_projects = *c;
            } else {
                error(line_no, col, "MALFORMED_NUMBER",
                      "num_projects must be a non-negative integer, got '" + value + "'");
            }
            return;
        }
        if (key == "num_votes") {
            obligatory_seen_.insert(key);
            if (auto c = parse_count(value)) {
                m.num_votes = *c;
            } else {
                error(line_no, col, "MALFORMED_NUMBER",
                      "num_votes must be a non-negative integer, got '" + value + "'");
            }
            return;
        }
        if (key == "budget") {
            obligatory_seen_.insert(key);
            auto d = Decimal::from_string(value);
            if (d && !d->is_negative()) {
                m.budget = *d;
            } else {
                error(line_no, col, "MALFORMED_NUMBER",
                      "budget must be a non-negative decimal, got '" + value + "'");
            }
            return;
        }
        if (key == "vote_type") {
            obligatory_seen_.insert(key);
            if (auto t = vote_type_from_string(value)) {
                m.vote_type = *t;
                vote_type_ok_ = true;
            } else {
                error(line_no, col, "UNKNOWN_VOTE_TYPE",
                      "vote_type must be approval, ordinal, cumulative or scoring, got '" +
                          value + "'");
            }
            return;
        }
        if (key == "subunit") return optional_text(m.subunit);
        if (key == "district") return optional_text(m.district);
        if (key == "edition") return optional_text(m.edition);
        if (key == "language") return optional_text(m.language);
        if (key == "comment") return optional_text(m.comment);
        if (key == "date_begin") return optional_text(m.date_begin);
        if (key == "date_end") return optional_text(m.date_end);
        if (key == "scoring_fn") return optional_text(m.scoring_fn);
        if (key == "min_length") return count_key(m.min_length);
        if (key == "max_length") return count_key(m.max_length);
        if (key == "min_sum_cost") return money_key(m.min_sum_cost);
        if (key == "max_sum_cost") return money_key(m.max_sum_cost);
        if (key == "max_sum_points") return money_key(m.max_sum_points);
        if (key == "min_points") return signed_key(m.min_points);
        if (key == "max_points") return signed_key(m.max_points);
        if (key == "min_sum_points") return signed_key(m.min_sum_points);
        if (key == "default_score") return signed_key(m.default_score);

        m.extra.emplace_back(key, value);
        warning(line_no, col, "META_UNKNOWN_KEY",
                "non-standard META key '" + key + "' kept verbatim");
    }

    void finalize_meta(std::size_t) {
        meta_finalized_ = true;
        static const char* kObligatory[] = {"description", "country",  "unit",
                                            "instance",    "num_projects", "num_votes",
                                            "budget",      "rule",     "vote_type"};
        bool all_present = true;
        for (const char* key : kObligatory) {
            if (!obligatory_seen_.count(key)) {
                all_present = false;
                error(meta_line_, std::nullopt, "MISSING_REQUIRED_KEY",
                      std::string("obligatory META key '") + key + "' is missing");
            }
        }
        if (all_present && vote_type_ok_) {
            try {
                instance_.meta = resolve_defaults(instance_.meta);
            } catch (const Error& e) {
                error(meta_line_, std::nullopt, e.code(), e.what());
            }
        }
    }

    // ---- PROJECTS ----

    void projects_line_content(std::size_t line_no, std::string_view line) {
        std::vector<Field> fields = split_fields(line);
        if (header_pending_) {
            header_pending_ = false;
            project_header_ok_ = read_header(line_no, fields, instance_.project_header,
                                             {"project_id", "cost"}, {});
            return;
        }
        if (!project_header_ok_) return;
        const auto& header = instance_.project_header;
        if (fields.size() != header.size()) {
            error(line_no, 1, "ROW_ARITY_MISMATCH",
                  "PROJECTS row has " + std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(header.size()));
            return;
        }
        Project project;
        bool valid = true;
        for (std::size_t i = 0; i < header.size(); ++i) {
            const std::string& column = header[i];
            std::string_view value = fields[i].value;
            std::size_t col = fields[i].column;
            if (column == "project_id") {
                if (value.empty()) {
                    error(line_no, col, "EMPTY_ID", "project_id is empty");
                    valid = false;
                } else {
                    project.id = std::string(value);
                }
            } else if (column == "cost") {
                auto d = Decimal::from_string(value);
                if (d && !d->is_negative()) {
                    project.cost = *d;
                } else {
                    error(line_no, col, "MALFORMED_NUMBER",
                          "cost must be a non-negative decimal, got '" + std::string(value) +
                              "'");
                    valid = false;
                }
            } else if (column == "name") {
                if (!value.empty()) project.name = std::string(value);
            } else if (column == "category") {
                if (!value.empty()) project.category = split_list(value);
            } else if (column == "target") {
                if (!value.empty()) project.target = split_list(value);
            } else {
                project.extra.emplace_back(column, std::string(value));
            }
        }
        if (!project.id.empty()) {
            if (declared_project_ids_.count(project.id)) {
                error(line_no, 1, "DUPLICATE_PROJECT_ID",
                      "project_id '" + project.id + "' appears more than once");
                valid = false;
            } else {
                declared_project_ids_.insert(project.id);
            }
        }
        if (valid) instance_.projects.push_back(std::move(project));
    }

    // ---- VOTES ----

    void votes_line_content(std::size_t line_no, std::string_view line) {
        std::vector<Field> fields = split_fields(line);
        if (header_pending_) {
            header_pending_ = false;
            vote_header_ok_ = read_header(line_no, fields, instance_.vote_header, {"voter_id"},
                                          {"vote"});
            return;
        }
        if (!vote_header_ok_) return;
        const auto& header = instance_.vote_header;
        if (fields.size() != header.size()) {
            error(line_no, 1, "ROW_ARITY_MISMATCH",
                  "VOTES row has " + std::to_string(fields.size()) + " fields, header has " +
                      std::to_string(header.size()));
            return;
        }
        VoteRecord record;
        bool valid = true;
        std::size_t points_col = 0;
        std::string_view points_text;
        for (std::size_t i = 0; i < header.size(); ++i) {
            const std::string& column = header[i];
            std::string_view value = fields[i].value;
            std::size_t col = fields[i].column;
            if (column == "voter_id") {
                if (value.empty()) {
                    error(line_no, col, "EMPTY_ID", "voter_id is empty");
                    valid = false;
                } else {
                    record.voter_id = std::string(value);
                }
            } else if (column == "age") {
                if (!value.empty()) {
                    if (auto c = parse_count(value)) {
                        record.age = *c;
                    } else {
                        error(line_no, col, "MALFORMED_NUMBER",
                              "age must be a non-negative integer, got '" + std::string(value) +
                                  "'");
                        valid = false;
                    }
                }
            } else if (column == "sex") {
                if (!value.empty()) record.sex = std::string(value);
            } else if (column == "voting_method") {
                if (!value.empty()) record.voting_method = std::string(value);
            } else if (column == "vote") {
                record.vote = split_list(value);
            } else if (column == "points") {
                points_text = value;
                points_col = col;
            } else {
                record.extra.emplace_back(column, std::string(value));
            }
        }

        std::set<std::string_view> seen_items;
        for (const std::string& id : record.vote) {
            if (!seen_items.insert(id).second) {
                error(line_no, 1, "DUPLICATE_VOTE_ITEM",
                      "vote lists project '" + id + "' more than once");
                valid = false;
            } else if (seen_projects_ && project_header_ok_ &&
                       !declared_project_ids_.count(id)) {
                error(line_no, 1, "UNKNOWN_PROJECT_REF",
                      "vote references unknown project '" + id + "'");
                valid = false;
            }
        }

        if (!points_text.empty()) {
            std::vector<Decimal> points;
            bool points_ok = true;
            for (const std::string& item : split_list(points_text)) {
                if (auto d = Decimal::from_string(item)) {
                    points.push_back(*d);
                } else {
                    error(line_no, points_col, "MALFORMED_NUMBER",
                          "points entry must be a decimal, got '" + item + "'");
                    points_ok = false;
                    valid = false;
                }
            }
            if (points_ok) {
                if (points.size() != record.vote.size()) {
                    error(line_no, points_col, "POINTS_LENGTH_MISMATCH",
                          "points has " + std::to_string(points.size()) +
                              " entries, vote has " + std::to_string(record.vote.size()));
                    valid = false;
                } else {
                    record.points = std::move(points);
                }
            }
        }

        if (!record.voter_id.empty()) {
            if (voter_ids_.count(record.voter_id)) {
                error(line_no, 1, "DUPLICATE_VOTER_ID",
                      "voter_id '" + record.voter_id + "' appears more than once");
                valid = false;
            } else {
                voter_ids_.insert(record.voter_id);
            }
        }
        if (valid) instance_.votes.push_back(std::move(record));
    }

    // Shared header handling: leading columns must appear first in the given
    // order; `anywhere` columns must be present somewhere.
    bool read_header(std::size_t line_no, const std::vector<Field>& fields,
                     std::vector<std::string>& out, std::vector<std::string> leading,
                     std::vector<std::string> anywhere) {
        out.clear();
        bool ok = true;
        std::set<std::string_view> seen;
        for (const Field& f : fields) {
            if (f.value.empty()) {
                error(line_no, f.column, "EMPTY_ID", "header column name is empty");
                ok = false;
                continue;
            }
            if (!seen.insert(f.value).second) {
                error(line_no, f.column, "DUPLICATE_COLUMN",
                      "column '" + std::string(f.value) + "' appears more than once");
                ok = false;
            }
            out.emplace_back(f.value);
        }
        for (std::size_t i = 0; i < leading.size(); ++i) {
            if (!contains(out, leading[i])) {
                error(line_no, 1, "HEADER_MISSING_REQUIRED_COLUMN",
                      "header is missing the '" + leading[i] + "' column");
                ok = false;
            } else if (out.size() <= i || out[i] != leading[i]) {
                error(line_no, 1, "HEADER_COLUMN_ORDER",
                      "'" + leading[i] + "' must be column " + std::to_string(i + 1));
                ok = false;
            }
        }
        for (const std::string& column : anywhere) {
            if (!contains(out, column)) {
                error(line_no, 1, "HEADER_MISSING_REQUIRED_COLUMN",
                      "header is missing the '" + column + "' column");
                ok = false;
            }
        }
        return ok;
    }

    void end_of_input() {
        leave_section(last_line_);
        if (!seen_meta_) {
            error(last_line_, std::nullopt, "SECTION_MISSING", "META section is missing");
        }
        if (!seen_projects_) {
            error(last_line_, std::nullopt, "SECTION_MISSING", "PROJECTS section is missing");
        }
        if (!seen_votes_) {
            error(last_line_, std::nullopt, "SECTION_MISSING", "VOTES section is missing");
        }
    }

    ParseResult finish() {
        std::stable_sort(diagnostics_.begin(), diagnostics_.end(),
                         [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
        ParseResult result;
        result.diagnostics = std::move(diagnostics_);
        bool has_error = std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                                     [](const Diagnostic& d) { return d.severity == Severity::error; });
        if (!has_error) result.instance = std::move(instance_);
        return result;
    }
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

ParseResult parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IO_ERROR", "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error("IO_ERROR", "failed reading '" + path + "'");
    return parse(buffer.str());
}

}  // namespace pbtk
