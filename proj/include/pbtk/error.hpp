#pragma once

#include <stdexcept>
#include <string>

namespace pbtk {

/// Exception carrying a stable machine-readable code next to the human
/// message. Codes used by the library:
///
///   MISSING_REQUIRED_KEY   obligatory META key absent where one is required
///   WRONG_VOTE_TYPE        score function called on a mismatched vote type
///   UNSUPPORTED_SCORING_FN ordinal scoring function other than Borda
///   UNSUPPORTED_RULE       aggregation rule other than greedy
///   VALIDATION_REQUIRED    outcome requested for an instance with errors
///   LENGTH_MISMATCH        parallel lists of different length
///   INFEASIBLE_SPEC        generator bounds admit no valid instance
///   DECIMAL_OVERFLOW       exact arithmetic past 18 significant digits
///   NONFINITE_ARITHMETIC   arithmetic on an infinite bound
///   IO_ERROR               file could not be read or written
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace pbtk
