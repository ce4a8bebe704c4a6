#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbtk/decimal.hpp"

namespace pbtk {

/// Non-negative integer quantity (section sizes, vote lengths, ages).
using Count = std::uint32_t;

enum class VoteType { approval, ordinal, cumulative, scoring };

std::string_view to_string(VoteType type);
std::optional<VoteType> vote_type_from_string(std::string_view name);

/// Ordered list of (key, value) pairs for non-standard fields. Order is the
/// order of first appearance in the source and survives canonicalization.
using ExtraFields = std::vector<std::pair<std::string, std::string>>;

/// The META section. Obligatory keys are plain fields; optional keys are
/// std::optional and may be populated either from the file or by
/// resolve_defaults. `explicit_keys` records which optional typed keys were
/// actually given (kept sorted), so canonical output can tell a written
/// "min_length; 1" apart from the resolved default.
struct MetaSection {
    std::string description;
    std::string country;
    std::string unit;
    std::string instance;
    Count num_projects = 0;
    Count num_votes = 0;
    Decimal budget;
    std::string rule;
    VoteType vote_type = VoteType::approval;

    std::optional<std::string> subunit;
    std::optional<std::string> district;
    std::optional<std::string> edition;
    std::optional<std::string> language;
    std::optional<std::string> comment;
    std::optional<std::string> date_begin;  // stored verbatim, no date syntax enforced
    std::optional<std::string> date_end;

    std::optional<Count> min_length;
    std::optional<Count> max_length;
    std::optional<Decimal> min_sum_cost;
    std::optional<Decimal> max_sum_cost;
    std::optional<Decimal> min_points;
    std::optional<Decimal> max_points;
    std::optional<Decimal> min_sum_points;
    std::optional<Decimal> max_sum_points;
    std::optional<std::string> scoring_fn;
    std::optional<Decimal> default_score;

    ExtraFields extra;
    std::vector<std::string> explicit_keys;

    void mark_explicit(std::string_view key);
    bool is_explicit(std::string_view key) const;

    bool operator==(const MetaSection&) const = default;
};

struct Project {
    std::string id;
    Decimal cost;
    std::optional<std::string> name;
    std::optional<std::vector<std::string>> category;
    std::optional<std::vector<std::string>> target;
    ExtraFields extra;

    bool operator==(const Project&) const = default;
};

struct VoteRecord {
    std::string voter_id;
    std::optional<Count> age;
    std::optional<std::string> sex;           // stored verbatim
    std::optional<std::string> voting_method;
    std::vector<std::string> vote;            // project ids, order significant
    std::optional<std::vector<Decimal>> points;  // parallel to vote when present
    ExtraFields extra;

    bool operator==(const VoteRecord&) const = default;
};

/// One fully parsed .pb file. The header vectors preserve the column order
/// of the source so serialization can echo it.
struct PbInstance {
    MetaSection meta;
    std::vector<Project> projects;
    std::vector<VoteRecord> votes;
    std::vector<std::string> project_header;
    std::vector<std::string> vote_header;

    const Project* find_project(std::string_view id) const;

    bool operator==(const PbInstance&) const = default;
};

/// Populates every optional bound defined for meta.vote_type with its
/// default when absent; present values are untouched and bounds belonging
/// to other vote types stay absent. Defaults:
///   all types:   min_length = 1, max_length = num_projects
///   approval:    min_sum_cost = 0, max_sum_cost = +inf
///   ordinal:     scoring_fn = Borda
///   cumulative:  min_points = 0, max_points = max_sum_points,
///                min_sum_points = 0 (max_sum_points itself is obligatory)
///   scoring:     min_points = -inf, max_points = +inf, default_score = 0
///
/// Idempotent. Throws Error(MISSING_REQUIRED_KEY) when vote_type is
/// cumulative and max_sum_points is absent.
MetaSection resolve_defaults(const MetaSection& meta);

/// Ordering used for deterministic tie-breaking: ids that are both digit
/// strings compare numerically (with a byte-wise fallback so "007" and "7"
/// stay distinct); everything else compares byte-wise.
bool project_id_less(std::string_view a, std::string_view b);

}  // namespace pbtk
