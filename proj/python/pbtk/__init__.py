"""Toolkit for participatory budgeting .pb files.

Parsing, validation, canonical serialization, instance generation and the
greedy allocation rule are implemented in C++ and exposed through the
`pbtk._core` extension module.
"""

from ._core import (  # noqa: F401
    Decimal,
    Diagnostic,
    GeneratorSpec,
    GreedyDecision,
    GreedyVariant,
    InstanceSummary,
    MetaSection,
    Outcome,
    ParseResult,
    PbInstance,
    PbtkError,
    Project,
    Severity,
    SkippedProject,
    TieBreak,
    ValueRange,
    Violation,
    ViolationSubject,
    VoteRecord,
    VoteType,
    __version__,
    aggregate_scores,
    approval_scores,
    borda_scores,
    diagnostics_to_json,
    generate_random_instance,
    greedy_outcome,
    is_strict_order,
    mutation_codes,
    parse,
    parse_file,
    points_scores,
    resolve_defaults,
    serialize_canonical,
    summarize,
    validate,
    violations_to_json,
)
