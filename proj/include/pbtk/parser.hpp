#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbtk/model.hpp"

namespace pbtk {

enum class Severity { error, warning };

std::string_view to_string(Severity severity);

/// One parser finding. `code` is drawn from the closed set documented in the
/// README (SECTION_MISSING, ROW_ARITY_MISMATCH, MALFORMED_NUMBER, ...);
/// `message` is for humans and carries no behavioral meaning.
struct Diagnostic {
    Severity severity = Severity::error;
    std::size_t line = 0;                 // 1-based
    std::optional<std::size_t> column;    // 1-based byte offset within the line
    std::string code;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

struct ParseResult {
    std::optional<PbInstance> instance;   // absent iff at least one error
    std::vector<Diagnostic> diagnostics;  // sorted by line

    bool ok() const { return instance.has_value(); }
    std::size_t error_count() const;
    std::size_t warning_count() const;
};

/// Parses .pb text into an instance.
///
/// The format: three sections introduced by the keywords META, PROJECTS and
/// VOTES on their own lines, in that order. The first content line of each
/// section is its header row. Fields are separated by ";" and trimmed;
/// multi-valued fields (category, target, vote, points) are split on ","
/// with per-item trimming. CRLF input is accepted; blank lines are ignored;
/// a final newline is optional. Unknown META keys and unknown columns are
/// preserved as non-standard fields (unknown META keys warn).
///
/// Never throws on malformed input: problems come back as diagnostics, and
/// the instance is produced only when no error-severity diagnostic was
/// emitted. META defaults are resolved into the returned instance.
ParseResult parse(std::string_view text);

/// Reads and parses a file. Throws Error(IO_ERROR) when unreadable.
ParseResult parse_file(const std::string& path);

/// Canonical byte serialization:
///   - sections in order META, PROJECTS, VOTES, LF line endings, final LF;
///   - field separator "; ", list separator "," without space, no trailing
///     whitespace;
///   - META rows: obligatory keys in fixed order (description, country,
///     unit, instance, num_projects, num_votes, budget, vote_type, rule),
///     then explicitly present optional keys in fixed order, then
///     non-standard keys in original order. Resolved defaults that were not
///     in the source are not written;
///   - PROJECTS and VOTES echo the instance's stored column order;
///   - numbers are normalized (no leading zeros, no trailing fractional
///     zeros).
///
/// Requires an instance satisfying the model invariants (as produced by
/// parse or the generator); canonical output re-parses to an equal instance.
std::string serialize_canonical(const PbInstance& instance);

}  // namespace pbtk
