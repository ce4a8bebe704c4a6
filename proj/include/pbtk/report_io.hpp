#pragma once

#include <string>
#include <vector>

#include "pbtk/parser.hpp"
#include "pbtk/rules.hpp"
#include "pbtk/summary.hpp"
#include "pbtk/validator.hpp"

namespace pbtk {

/// Rendering of diagnostics, violation reports, outcomes and summaries.
/// The JSON layouts are the stable machine interface (field names are
/// documented in the README; decimal values are JSON strings so exactness
/// survives the trip). The text forms are for humans and carry no
/// stability guarantee.

std::string subject_to_string(const ViolationSubject& subject);

std::string diagnostics_to_text(const std::vector<Diagnostic>& diagnostics);
std::string diagnostics_to_json(const std::vector<Diagnostic>& diagnostics);

std::string violations_to_text(const std::vector<Violation>& violations);
std::string violations_to_json(const std::vector<Violation>& violations);

std::string outcome_to_text(const Outcome& outcome);
std::string outcome_to_json(const Outcome& outcome);

std::string summary_to_text(const InstanceSummary& summary);
std::string summary_to_json(const InstanceSummary& summary);

}  // namespace pbtk
