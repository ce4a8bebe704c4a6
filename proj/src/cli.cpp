#include "pbtk/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "pbtk/error.hpp"
#include "pbtk/generator.hpp"
#include "pbtk/parser.hpp"
#include "pbtk/report_io.hpp"
#include "pbtk/rules.hpp"
#include "pbtk/summary.hpp"
#include "pbtk/validator.hpp"

namespace pbtk::cli {

namespace {

// Reads the whole input file, or reports exit_no_input.
std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "pbtk: cannot open '" << path << "' for reading\n";
        return std::nullopt;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        err << "pbtk: failed reading '" << path << "'\n";
        return std::nullopt;
    }
    return text;
}

std::optional<PbInstance> parse_or_report(const std::string& path, const std::string& format,
                                          std::ostream& err, const std::string& text) {
    ParseResult result = parse(text);
    if (!result.ok()) {
        if (format == "json") {
            err << diagnostics_to_json(result.diagnostics);
        } else {
            err << diagnostics_to_text(result.diagnostics);
        }
        err << "pbtk: '" << path << "' failed to parse with " << result.error_count()
            << " errors\n";
        return std::nullopt;
    }
    return std::move(result.instance);
}

bool write_output(const std::string& path, const std::string& content, std::ostream& out,
                  std::ostream& err) {
    if (path.empty() || path == "-") {
        out << content;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "pbtk: cannot open '" << path << "' for writing\n";
        return false;
    }
    file << content;
    file.close();
    if (file.fail()) {
        err << "pbtk: failed writing '" << path << "'\n";
        return false;
    }
    return true;
}

struct Options {
    std::string file;
    std::string format = "text";
    std::string output;
    std::string variant = "skip";
    std::string tie_break = "id";

    GeneratorSpec spec;
    std::string vote_type = "approval";
    std::string mutation;
};

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
    auto text = read_file(opt.file, err);
    if (!text) return exit_no_input;
    auto instance = parse_or_report(opt.file, opt.format, err, *text);
    if (!instance) return exit_data_error;
    std::vector<Violation> violations = validate(*instance);
    out << (opt.format == "json" ? violations_to_json(violations)
                                 : violations_to_text(violations));
    bool has_error = std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
        return v.severity == Severity::error;
    });
    return has_error ? exit_violations : exit_ok;
}

int cmd_info(const Options& opt, std::ostream& out, std::ostream& err) {
    auto text = read_file(opt.file, err);
    if (!text) return exit_no_input;
    auto instance = parse_or_report(opt.file, opt.format, err, *text);
    if (!instance) return exit_data_error;
    InstanceSummary summary = summarize(*instance);
    out << (opt.format == "json" ? summary_to_json(summary) : summary_to_text(summary));
    return exit_ok;
}

int cmd_outcome(const Options& opt, std::ostream& out, std::ostream& err) {
    auto text = read_file(opt.file, err);
    if (!text) return exit_no_input;
    auto instance = parse_or_report(opt.file, opt.format, err, *text);
    if (!instance) return exit_data_error;
    GreedyVariant variant = opt.variant == "stop" ? GreedyVariant::stop_at_first_unaffordable
                                                  : GreedyVariant::skip_unaffordable;
    TieBreak tie_break = opt.tie_break == "cost"    ? TieBreak::by_cost_ascending_then_id
                         : opt.tie_break == "input" ? TieBreak::by_input_order
                                                    : TieBreak::by_project_id_ascending;
    try {
        Outcome outcome = greedy_outcome(*instance, variant, tie_break);
        out << (opt.format == "json" ? outcome_to_json(outcome) : outcome_to_text(outcome));
        return exit_ok;
    } catch (const Error& e) {
        err << "pbtk: " << e.code() << ": " << e.what() << "\n";
        return exit_data_error;
    }
}

int cmd_canonicalize(const Options& opt, std::ostream& out, std::ostream& err) {
    auto text = read_file(opt.file, err);
    if (!text) return exit_no_input;
    auto instance = parse_or_report(opt.file, "text", err, *text);
    if (!instance) return exit_data_error;
    return write_output(opt.output, serialize_canonical(*instance), out, err) ? exit_ok
                                                                              : exit_io_error;
}

int cmd_generate(Options& opt, std::ostream& out, std::ostream& err) {
    if (auto t = vote_type_from_string(opt.vote_type)) {
        opt.spec.vote_type = *t;
    } else {
        err << "pbtk: unknown vote type '" << opt.vote_type << "'\n";
        return exit_usage;
    }
    if (!opt.mutation.empty()) opt.spec.mutation = opt.mutation;
    try {
        PbInstance instance = generate_random_instance(opt.spec);
        return write_output(opt.output, serialize_canonical(instance), out, err)
                   ? exit_ok
                   : exit_io_error;
    } catch (const Error& e) {
        err << "pbtk: " << e.code() << ": " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toolkit for participatory budgeting .pb files"};
    app.name("pbtk");
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Check a .pb file against its META constraints");
    validate_cmd->add_option("file", opt.file, "Input .pb file")->required();
    add_format(validate_cmd);

    CLI::App* info_cmd = app.add_subcommand("info", "Summarize a .pb file");
    info_cmd->add_option("file", opt.file, "Input .pb file")->required();
    add_format(info_cmd);

    CLI::App* outcome_cmd =
        app.add_subcommand("outcome", "Run the greedy allocation rule on a .pb file");
    outcome_cmd->add_option("file", opt.file, "Input .pb file")->required();
    add_format(outcome_cmd);
    outcome_cmd->add_option("--variant", opt.variant, "Greedy variant")
        ->check(CLI::IsMember({"skip", "stop"}))
        ->capture_default_str();
    outcome_cmd->add_option("--tie-break", opt.tie_break, "Tie-break among equal scores")
        ->check(CLI::IsMember({"id", "cost", "input"}))
        ->capture_default_str();

    CLI::App* canonicalize_cmd =
        app.add_subcommand("canonicalize", "Rewrite a .pb file in canonical form");
    canonicalize_cmd->add_option("file", opt.file, "Input .pb file")->required();
    canonicalize_cmd->add_option("-o,--output", opt.output,
                                 "Output file (default: standard output)");

    CLI::App* generate_cmd =
        app.add_subcommand("generate", "Write a deterministic synthetic .pb instance");
    generate_cmd->add_option("--vote-type", opt.vote_type, "approval|ordinal|cumulative|scoring")
        ->required();
    generate_cmd->add_option("--num-projects", opt.spec.num_projects, "Number of projects")
        ->required();
    generate_cmd->add_option("--num-votes", opt.spec.num_votes, "Number of votes")->required();
    generate_cmd->add_option("--seed", opt.spec.seed, "Random seed")->capture_default_str();
    generate_cmd->add_option("--budget-min", opt.spec.budget.lo, "Budget range lower bound")
        ->capture_default_str();
    generate_cmd->add_option("--budget-max", opt.spec.budget.hi, "Budget range upper bound")
        ->capture_default_str();
    generate_cmd->add_option("--cost-min", opt.spec.cost.lo, "Project cost lower bound")
        ->capture_default_str();
    generate_cmd->add_option("--cost-max", opt.spec.cost.hi, "Project cost upper bound")
        ->capture_default_str();
    generate_cmd->add_option("--length-min", opt.spec.length.lo, "Vote length lower bound")
        ->capture_default_str();
    generate_cmd->add_option("--length-max", opt.spec.length.hi, "Vote length upper bound")
        ->capture_default_str();
    generate_cmd->add_option("--points-min", opt.spec.points.lo, "Per-point lower bound")
        ->capture_default_str();
    generate_cmd->add_option("--points-max", opt.spec.points.hi, "Per-point upper bound")
        ->capture_default_str();
    generate_cmd->add_option("--mutation", opt.mutation,
                             "Break exactly one validator constraint (code name)");
    generate_cmd->add_option("-o,--output", opt.output,
                             "Output file (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);  // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    if (validate_cmd->parsed()) return cmd_validate(opt, out, err);
    if (info_cmd->parsed()) return cmd_info(opt, out, err);
    if (outcome_cmd->parsed()) return cmd_outcome(opt, out, err);
    if (canonicalize_cmd->parsed()) return cmd_canonicalize(opt, out, err);
    if (generate_cmd->parsed()) return cmd_generate(opt, out, err);
    return exit_usage;
}

}  // namespace pbtk::cli
