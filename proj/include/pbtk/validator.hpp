#pragma once

#include <string>
#include <vector>

#include "pbtk/model.hpp"
#include "pbtk/parser.hpp"

namespace pbtk {

/// What a violation is about: the META section as a whole, one project, or
/// one vote. `id` is empty for meta subjects.
struct ViolationSubject {
    enum class Kind { meta, project, vote };
    Kind kind = Kind::meta;
    std::string id;

    bool operator==(const ViolationSubject&) const = default;
};

/// One constraint violation. Codes and their triggering rules are documented
/// in the README; messages are for humans only.
struct Violation {
    Severity severity = Severity::error;
    std::string code;
    ViolationSubject subject;
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Checks an instance against every constraint declared or defaulted in its
/// META section. Never throws and never mutates the instance; problems are
/// returned as values, ordered by file position (meta findings first, then
/// projects in order, then votes in order). An empty list means the
/// instance is fully consistent.
std::vector<Violation> validate(const PbInstance& instance);

/// True iff `points` is non-increasing (ties allowed; an empty list is
/// trivially ordered). Throws Error(LENGTH_MISMATCH) when the two lists
/// differ in length.
bool is_strict_order(const std::vector<std::string>& vote, const std::vector<Decimal>& points);

}  // namespace pbtk
