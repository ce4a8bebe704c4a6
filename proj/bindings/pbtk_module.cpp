#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbtk/decimal.hpp"
#include "pbtk/error.hpp"
#include "pbtk/generator.hpp"
#include "pbtk/model.hpp"
#include "pbtk/parser.hpp"
#include "pbtk/report_io.hpp"
#include "pbtk/rules.hpp"
#include "pbtk/summary.hpp"
#include "pbtk/validator.hpp"

namespace py = pybind11;
using namespace pbtk;

namespace {

Decimal decimal_from_object(const py::object& obj) {
    if (py::isinstance<Decimal>(obj)) return obj.cast<Decimal>();
    if (py::isinstance<py::int_>(obj)) return Decimal::from_int(obj.cast<std::int64_t>());
    std::string text = py::str(obj);
    auto d = Decimal::from_string(text);
    if (!d) throw py::value_error("not a valid decimal literal: '" + text + "'");
    return *d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parser, validator, canonical serializer and greedy allocation "
              "rule for participatory budgeting .pb files";

    py::register_exception<Error>(m, "PbtkError");

    py::class_<Decimal>(m, "Decimal")
        .def(py::init([](const py::object& obj) { return decimal_from_object(obj); }),
             py::arg("value"))
        .def_static("positive_infinity", &Decimal::positive_infinity)
        .def_static("negative_infinity", &Decimal::negative_infinity)
        .def("is_finite", &Decimal::is_finite)
        .def("__str__", &Decimal::to_string)
        .def("__repr__", [](const Decimal& d) { return "Decimal('" + d.to_string() + "')"; })
        .def("__float__", &Decimal::to_double)
        .def("__add__", [](const Decimal& a, const py::object& b) {
            return a + decimal_from_object(b);
        })
        .def("__sub__", [](const Decimal& a, const py::object& b) {
            return a - decimal_from_object(b);
        })
        .def("__eq__", [](const Decimal& a, const py::object& b) {
            return a == decimal_from_object(b);
        })
        .def("__lt__", [](const Decimal& a, const py::object& b) {
            return a < decimal_from_object(b);
        })
        .def("__le__", [](const Decimal& a, const py::object& b) {
            return a <= decimal_from_object(b);
        })
        .def("__hash__", [](const Decimal& d) { return py::hash(py::str(d.to_string())); });

    py::enum_<VoteType>(m, "VoteType")
        .value("approval", VoteType::approval)
        .value("ordinal", VoteType::ordinal)
        .value("cumulative", VoteType::cumulative)
        .value("scoring", VoteType::scoring);

    py::enum_<Severity>(m, "Severity")
        .value("error", Severity::error)
        .value("warning", Severity::warning);

    py::enum_<GreedyVariant>(m, "GreedyVariant")
        .value("skip_unaffordable", GreedyVariant::skip_unaffordable)
        .value("stop_at_first_unaffordable", GreedyVariant::stop_at_first_unaffordable);

    py::enum_<TieBreak>(m, "TieBreak")
        .value("by_project_id_ascending", TieBreak::by_project_id_ascending)
        .value("by_cost_ascending_then_id", TieBreak::by_cost_ascending_then_id)
        .value("by_input_order", TieBreak::by_input_order);

    py::class_<MetaSection>(m, "MetaSection")
        .def(py::init<>())
        .def_readwrite("description", &MetaSection::description)
        .def_readwrite("country", &MetaSection::country)
        .def_readwrite("unit", &MetaSection::unit)
        .def_readwrite("instance", &MetaSection::instance)
        .def_readwrite("num_projects", &MetaSection::num_projects)
        .def_readwrite("num_votes", &MetaSection::num_votes)
        .def_readwrite("budget", &MetaSection::budget)
        .def_readwrite("rule", &MetaSection::rule)
        .def_readwrite("vote_type", &MetaSection::vote_type)
        .def_readwrite("subunit", &MetaSection::subunit)
        .def_readwrite("district", &MetaSection::district)
        .def_readwrite("edition", &MetaSection::edition)
        .def_readwrite("language", &MetaSection::language)
        .def_readwrite("comment", &MetaSection::comment)
        .def_readwrite("date_begin", &MetaSection::date_begin)
        .def_readwrite("date_end", &MetaSection::date_end)
        .def_readwrite("min_length", &MetaSection::min_length)
        .def_readwrite("max_length", &MetaSection::max_length)
        .def_readwrite("min_sum_cost", &MetaSection::min_sum_cost)
        .def_readwrite("max_sum_cost", &MetaSection::max_sum_cost)
        .def_readwrite("min_points", &MetaSection::min_points)
        .def_readwrite("max_points", &MetaSection::max_points)
        .def_readwrite("min_sum_points", &MetaSection::min_sum_points)
        .def_readwrite("max_sum_points", &MetaSection::max_sum_points)
        .def_readwrite("scoring_fn", &MetaSection::scoring_fn)
        .def_readwrite("default_score", &MetaSection::default_score)
        .def_readwrite("extra", &MetaSection::extra)
        .def("mark_explicit", &MetaSection::mark_explicit)
        .def("is_explicit", &MetaSection::is_explicit)
        .def(py::self == py::self);

    py::class_<Project>(m, "Project")
        .def(py::init<>())
        .def_readwrite("id", &Project::id)
        .def_readwrite("cost", &Project::cost)
        .def_readwrite("name", &Project::name)
        .def_readwrite("category", &Project::category)
        .def_readwrite("target", &Project::target)
        .def_readwrite("extra", &Project::extra)
        .def(py::self == py::self);

    py::class_<VoteRecord>(m, "VoteRecord")
        .def(py::init<>())
        .def_readwrite("voter_id", &VoteRecord::voter_id)
        .def_readwrite("age", &VoteRecord::age)
        .def_readwrite("sex", &VoteRecord::sex)
        .def_readwrite("voting_method", &VoteRecord::voting_method)
        .def_readwrite("vote", &VoteRecord::vote)
        .def_readwrite("points", &VoteRecord::points)
        .def_readwrite("extra", &VoteRecord::extra)
        .def(py::self == py::self);

    py::class_<PbInstance>(m, "PbInstance")
        .def(py::init<>())
        .def_readwrite("meta", &PbInstance::meta)
        .def_readwrite("projects", &PbInstance::projects)
        .def_readwrite("votes", &PbInstance::votes)
        .def_readwrite("project_header", &PbInstance::project_header)
        .def_readwrite("vote_header", &PbInstance::vote_header)
        .def(py::self == py::self);

    py::class_<Diagnostic>(m, "Diagnostic")
        .def_readonly("severity", &Diagnostic::severity)
        .def_readonly("line", &Diagnostic::line)
        .def_readonly("column", &Diagnostic::column)
        .def_readonly("code", &Diagnostic::code)
        .def_readonly("message", &Diagnostic::message)
        .def("__repr__", [](const Diagnostic& d) {
            return "<Diagnostic " + std::string(to_string(d.severity)) + " " + d.code +
                   " line " + std::to_string(d.line) + ">";
        });

    py::class_<ParseResult>(m, "ParseResult")
        .def_readonly("instance", &ParseResult::instance)
        .def_readonly("diagnostics", &ParseResult::diagnostics)
        .def("ok", &ParseResult::ok)
        .def("error_count", &ParseResult::error_count)
        .def("warning_count", &ParseResult::warning_count);

    py::class_<ViolationSubject>(m, "ViolationSubject")
        .def_readonly("id", &ViolationSubject::id)
        .def_property_readonly("kind", [](const ViolationSubject& s) {
            switch (s.kind) {
                case ViolationSubject::Kind::meta: return "meta";
                case ViolationSubject::Kind::project: return "project";
                case ViolationSubject::Kind::vote: return "vote";
            }
            return "meta";
        })
        .def("__str__", [](const ViolationSubject& s) { return subject_to_string(s); });

    py::class_<Violation>(m, "Violation")
        .def_readonly("severity", &Violation::severity)
        .def_readonly("code", &Violation::code)
        .def_readonly("subject", &Violation::subject)
        .def_readonly("message", &Violation::message)
        .def("__repr__", [](const Violation& v) {
            return "<Violation " + std::string(to_string(v.severity)) + " " + v.code + " " +
                   subject_to_string(v.subject) + ">";
        });

    py::class_<SkippedProject>(m, "SkippedProject")
        .def_readonly("project_id", &SkippedProject::project_id)
        .def_readonly("reason", &SkippedProject::reason);

    py::class_<GreedyDecision>(m, "GreedyDecision")
        .def_readonly("project_id", &GreedyDecision::project_id)
        .def_readonly("score", &GreedyDecision::score)
        .def_readonly("cost", &GreedyDecision::cost)
        .def_readonly("remaining_before", &GreedyDecision::remaining_before)
        .def_readonly("action", &GreedyDecision::action);

    py::class_<Outcome>(m, "Outcome")
        .def_readonly("variant", &Outcome::variant)
        .def_readonly("tie_break", &Outcome::tie_break)
        .def_readonly("scores", &Outcome::scores)
        .def_readonly("funded", &Outcome::funded)
        .def_readonly("spent", &Outcome::spent)
        .def_readonly("remaining", &Outcome::remaining)
        .def_readonly("skipped", &Outcome::skipped)
        .def_readonly("decisions", &Outcome::decisions)
        .def("to_json", &outcome_to_json);

    py::class_<InstanceSummary>(m, "InstanceSummary")
        .def_readonly("description", &InstanceSummary::description)
        .def_readonly("country", &InstanceSummary::country)
        .def_readonly("unit", &InstanceSummary::unit)
        .def_readonly("instance", &InstanceSummary::instance)
        .def_readonly("vote_type", &InstanceSummary::vote_type)
        .def_readonly("rule", &InstanceSummary::rule)
        .def_readonly("num_projects", &InstanceSummary::num_projects)
        .def_readonly("num_votes", &InstanceSummary::num_votes)
        .def_readonly("budget", &InstanceSummary::budget)
        .def_readonly("total_project_cost", &InstanceSummary::total_project_cost)
        .def_readonly("min_vote_length", &InstanceSummary::min_vote_length)
        .def_readonly("max_vote_length", &InstanceSummary::max_vote_length)
        .def_readonly("mean_vote_length", &InstanceSummary::mean_vote_length)
        .def_readonly("category_counts", &InstanceSummary::category_counts)
        .def("to_json", &summary_to_json);

    py::class_<ValueRange>(m, "ValueRange")
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &ValueRange::lo)
        .def_readwrite("hi", &ValueRange::hi);

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init<>())
        .def_readwrite("vote_type", &GeneratorSpec::vote_type)
        .def_readwrite("num_projects", &GeneratorSpec::num_projects)
        .def_readwrite("num_votes", &GeneratorSpec::num_votes)
        .def_readwrite("budget", &GeneratorSpec::budget)
        .def_readwrite("cost", &GeneratorSpec::cost)
        .def_readwrite("length", &GeneratorSpec::length)
        .def_readwrite("points", &GeneratorSpec::points)
        .def_readwrite("seed", &GeneratorSpec::seed)
        .def_readwrite("mutation", &GeneratorSpec::mutation);

    m.def("parse", &parse, py::arg("text"), "Parse .pb text into a ParseResult");
    m.def("parse_file", &parse_file, py::arg("path"));
    m.def("serialize_canonical", &serialize_canonical, py::arg("instance"));
    m.def("resolve_defaults", &resolve_defaults, py::arg("meta"));
    m.def("validate", &validate, py::arg("instance"));
    m.def("is_strict_order", &is_strict_order, py::arg("vote"), py::arg("points"));
    m.def("aggregate_scores", &aggregate_scores, py::arg("instance"));
    m.def("approval_scores", &approval_scores, py::arg("instance"));
    m.def("borda_scores", &borda_scores, py::arg("instance"));
    m.def("points_scores", &points_scores, py::arg("instance"));
    m.def("greedy_outcome", &greedy_outcome, py::arg("instance"),
          py::arg("variant") = GreedyVariant::skip_unaffordable,
          py::arg("tie_break") = TieBreak::by_project_id_ascending);
    m.def("summarize", &summarize, py::arg("instance"));
    m.def("generate_random_instance", &generate_random_instance, py::arg("spec"));
    m.def("mutation_codes", []() { return mutation_codes(); });
    m.def("violations_to_json", &violations_to_json, py::arg("violations"));
    m.def("diagnostics_to_json", &diagnostics_to_json, py::arg("diagnostics"));

#ifdef PBTK_VERSION
    m.attr("__version__") = PBTK_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
