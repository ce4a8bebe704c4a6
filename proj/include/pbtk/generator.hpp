#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbtk/model.hpp"

namespace pbtk {

/// Inclusive integer range for generated amounts.
struct ValueRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool empty() const { return hi < lo; }
    bool operator==(const ValueRange&) const = default;
};

/// Recipe for a synthetic instance. Without a mutation the result passes
/// validation with zero errors; with a mutation it violates exactly the
/// named constraint (collateral findings are possible but the named code is
/// guaranteed). Generation is fully deterministic in the spec, seed
/// included.
struct GeneratorSpec {
    VoteType vote_type = VoteType::approval;
    Count num_projects = 0;
    Count num_votes = 0;
    ValueRange budget{1000, 5000};
    ValueRange cost{50, 1000};
    ValueRange length{1, 5};
    ValueRange points{1, 10};
    std::uint64_t seed = 0;
    std::optional<std::string> mutation;

    bool operator==(const GeneratorSpec&) const = default;
};

/// The validator error codes a mutation can target, i.e. the legal values
/// of GeneratorSpec::mutation.
const std::vector<std::string>& mutation_codes();

/// Builds a deterministic random instance per the spec. Throws
/// Error(INFEASIBLE_SPEC) when the bounds admit no valid instance (zero
/// projects or votes, empty ranges, length bounds above the project count,
/// a mutation that does not apply to the vote type, or a mutation whose
/// precondition the bounds cannot satisfy).
PbInstance generate_random_instance(const GeneratorSpec& spec);

}  // namespace pbtk
