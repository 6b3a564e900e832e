#include "cli.hh"
#include "report.hh"

#include <tba/classify.hh>
#include <tba/construct.hh>
#include <tba/error.hh>
#include <tba/finder.hh>
#include <tba/io.hh>
#include <tba/laws.hh>
#include <tba/terms.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace tba::cli {

namespace
{
    struct Options
    {
        std::string model;
        std::vector<std::string> models;
        std::string law;
        std::string equation;
        std::string format = "text";
        std::string catalog_name;
        std::string presentation;
        std::string formula;
        std::string output;
        std::size_t size = 0;
        bool up_to_iso = false;
        bool classify_each = false;
        bool stats = false;
        bool timing = false;
        double budget_seconds = 0;
        std::uint64_t budget_nodes = 0;
        std::size_t jobs = 1;
        std::size_t split_depth = 2;
        std::size_t max_size = default_max_enumeration_size;
    };

    auto write_or_print(const TernaryAlgebra & m, const std::string & path, std::ostream & out) -> void
    {
        if (path.empty())
            write_model(out, m);
        else
            save_model(m, path);
    }

    auto cmd_axioms(const Options & o, std::ostream & out) -> int
    {
        auto m = load_model(o.model);
        auto report = axiom_suite(m);
        render_laws(out, m, report);
        out << "axioms " << (report.any_violated() ? "fail" : "pass") << '\n';
        return report.any_violated() ? check_failed : success;
    }

    auto cmd_laws(const Options & o, std::ostream & out) -> int
    {
        auto m = load_model(o.model);
        LawReport report;
        if (! o.law.empty()) {
            auto law = find_law(o.law);
            if (! law)
                throw UsageError("unknown law id '" + o.law + "'");
            report.verdicts.push_back(check_law(m, *law));
        }
        else
            report = law_suite(m);
        render_laws(out, m, report);
        return report.any_violated() ? check_failed : success;
    }

    auto cmd_check(const Options & o, std::ostream & out) -> int
    {
        auto m = load_model(o.model);
        auto e = parse_equation(o.equation);
        auto r = check_equation(m, e);
        if (r.holds()) {
            out << "holds: " << to_string(e) << '\n';
            return success;
        }
        out << "counterexample " << format_counterexample(m, *r.counterexample) << '\n';
        return check_failed;
    }

    auto cmd_classify(const Options & o, std::ostream & out) -> int
    {
        auto m = load_model(o.model);
        auto axioms = axiom_suite(m);
        auto report = classify(m);
        LawReport laws;
        if (report.axioms_pass)
            laws = law_suite(m);
        if (o.format == "json")
            out << classification_json(o.model, m, axioms, laws, report).dump(2) << '\n';
        else
            render_classification_text(out, m, axioms, laws, report);
        bool failed = ! report.axioms_pass || ! report.disagreements.empty() || laws.any_violated();
        return failed ? check_failed : success;
    }

    auto cmd_audit(const Options & o, std::ostream & out) -> int
    {
        std::vector<TernaryAlgebra> models;
        for (const auto & path : o.models)
            models.push_back(load_model(path));
        auto audit = equivalence_audit(models);
        std::size_t na = 0;
        for (std::size_t k = 0; k < models.size(); ++k) {
            bool skipped = na < audit.not_applicable.size() && audit.not_applicable[na] == k;
            if (skipped)
                ++na;
            out << "model " << k << ' ' << o.models[k] << ' ' << (skipped ? "not-applicable (axioms fail)" : "checked") << '\n';
        }
        for (const auto & d : audit.disagreements)
            out << "disagreement " << d << '\n';
        out << "disagreements " << audit.disagreements.size() << '\n';
        return audit.disagreements.empty() && audit.not_applicable.empty() ? success : check_failed;
    }

    auto cmd_derive(const Options & o, std::ostream & out) -> int
    {
        render_derived(out, load_model(o.model));
        return success;
    }

    auto cmd_build(const Options & o, std::ostream & out) -> int
    {
        write_or_print(catalog_model(o.catalog_name), o.output, out);
        return success;
    }

    auto cmd_from_near_ring(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        auto p = load_presentation(o.presentation);
        auto kind = parse_formula_kind(o.formula);
        if (auto violations = validate_presentation(p); ! violations.empty()) {
            for (const auto & v : violations)
                err << "presentation violates " << v.law << " at " << v.witness << '\n';
            return check_failed;
        }
        std::vector<std::string> warnings;
        auto m = build_model(p, kind, &warnings);
        for (const auto & w : warnings)
            err << "warning: " << w << '\n';
        write_or_print(m, o.output, out);
        auto axioms = axiom_suite(m);
        for (const auto & v : axioms.verdicts)
            if (v.status == Status::Violated)
                err << "warning: built table fails " << format_verdict(m, v) << '\n';
        return axioms.any_violated() ? check_failed : success;
    }

    auto cmd_enumerate(const Options & o, std::ostream & out, std::ostream & err) -> int
    {
        EnumerateOptions eo;
        eo.size = o.size;
        eo.up_to_iso = o.up_to_iso;
        eo.classify_each = o.classify_each;
        eo.jobs = o.jobs;
        eo.split_depth = o.split_depth;
        eo.max_size = o.max_size;
        if (o.budget_seconds > 0)
            eo.budget.seconds = o.budget_seconds;
        if (o.budget_nodes > 0)
            eo.budget.nodes = o.budget_nodes;
        EnumerationResult result;
        try {
            result = enumerate(eo);
        }
        catch (const BudgetExceeded & e) {
            err << "budget exceeded: " << e.what() << '\n';
            return budget_exceeded;
        }
        render_enumeration(out, result, o.stats);
        if (o.timing)
            err << "seconds " << result.statistics.seconds << '\n';
        if (! o.output.empty()) {
            std::filesystem::create_directories(o.output);
            for (const auto & m : result.models)
                save_model(m, std::filesystem::path(o.output) / (hash_name(m) + ".tba"));
        }
        for (const auto & c : result.classifications)
            if (! c.disagreements.empty())
                return check_failed;
        return success;
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    CLI::App app{"Finite pointed ternary algebras: axioms, laws, classification, construction and enumeration", "tba"};
    app.require_subcommand(1);

    auto axioms = app.add_subcommand("axioms", "Check T1-T4 on a model file");
    axioms->add_option("model", o.model, "Model file")->required();

    auto laws = app.add_subcommand("laws", "Check L1-L10 and EQ1 on a model file");
    laws->add_option("model", o.model, "Model file")->required();
    laws->add_option("--law", o.law, "Check a single law by id (T1..T4, L1..L10, EQ1)");

    auto check = app.add_subcommand("check", "Check an equation universally");
    check->add_option("model", o.model, "Model file")->required();
    check->add_option("--eq", o.equation, "Equation, e.g. \"x*y = y*x\"")->required();

    auto classify_cmd = app.add_subcommand("classify", "Evaluate every theorem condition and classify");
    classify_cmd->add_option("model", o.model, "Model file")->required();
    classify_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto audit = app.add_subcommand("audit", "Audit theorem equivalences across models");
    audit->add_option("models", o.models, "Model files")->required();

    auto derive = app.add_subcommand("derive", "Print the derived operation tables");
    derive->add_option("model", o.model, "Model file")->required();

    auto build = app.add_subcommand("build", "Write a catalog model");
    build->add_option("name", o.catalog_name, "Catalog entry")->required();
    build->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto from_nr = app.add_subcommand("from-near-ring", "Build a model from a near-ring presentation file");
    from_nr->add_option("presentation", o.presentation, "Presentation file")->required();
    from_nr->add_option("--formula", o.formula, "affine|church|ring2|nearring2")->required();
    from_nr->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto enumerate_cmd = app.add_subcommand("enumerate", "Enumerate all models of a given size");
    enumerate_cmd->add_option("--size", o.size, "Carrier size")->required();
    enumerate_cmd->add_flag("--up-to-iso", o.up_to_iso, "Deduplicate by pointed isomorphism");
    enumerate_cmd->add_flag("--classify", o.classify_each, "Classify every emitted model");
    enumerate_cmd->add_option("--budget-seconds", o.budget_seconds, "Wall-clock limit");
    enumerate_cmd->add_option("--budget-nodes", o.budget_nodes, "Search node limit");
    enumerate_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--split-depth", o.split_depth, "Depth at which subtrees become tasks");
    enumerate_cmd->add_option("--max-size", o.max_size, "Largest size accepted");
    enumerate_cmd->add_flag("--stats", o.stats, "Print search node counts");
    enumerate_cmd->add_flag("--timing", o.timing, "Print elapsed seconds to stderr");
    enumerate_cmd->add_option("-o,--output", o.output, "Directory for one model file per class");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (! reversed.empty())
            reversed.pop_back();
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        if (axioms->parsed())
            return cmd_axioms(o, out);
        if (laws->parsed())
            return cmd_laws(o, out);
        if (check->parsed())
            return cmd_check(o, out);
        if (classify_cmd->parsed())
            return cmd_classify(o, out);
        if (audit->parsed())
            return cmd_audit(o, out);
        if (derive->parsed())
            return cmd_derive(o, out);
        if (build->parsed())
            return cmd_build(o, out);
        if (from_nr->parsed())
            return cmd_from_near_ring(o, out, err);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(o, out, err);
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const BudgetExceeded & e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget_exceeded;
    }
    catch (const std::filesystem::filesystem_error & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace tba::cli
