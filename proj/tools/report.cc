#include "report.hh"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace tba::cli {

using nlohmann::ordered_json;

auto format_counterexample(const TernaryAlgebra & m, const Counterexample & cx) -> std::string
{
    auto s = format_assignment(m, cx);
    if (! s.empty())
        s += ' ';
    return s + "lhs=" + m.name(cx.lhs) + " rhs=" + m.name(cx.rhs);
}

auto format_verdict(const TernaryAlgebra & m, const LawVerdict & v) -> std::string
{
    std::string s = v.id + ' ' + to_string(v.status);
    if (v.witness)
        s += ": " + v.witness->equation + " fails at " + format_counterexample(m, v.witness->counterexample);
    return s;
}

auto render_laws(std::ostream & out, const TernaryAlgebra & m, const LawReport & report) -> void
{
    for (const auto & v : report.verdicts)
        out << format_verdict(m, v) << '\n';
}

namespace
{
    auto width(const TernaryAlgebra & m) -> int
    {
        std::size_t w = 1;
        for (const auto & n : m.names())
            w = std::max(w, n.size());
        return static_cast<int>(w);
    }

    auto render_binary(std::ostream & out, const TernaryAlgebra & m, const char * symbol, auto && op) -> void
    {
        const int w = width(m);
        out << std::setw(w) << symbol << " |";
        for (std::size_t b = 0; b < m.size(); ++b)
            out << ' ' << std::setw(w) << m.name(static_cast<Element>(b));
        out << '\n' << std::string(static_cast<std::size_t>(w) + 1, '-') << '+' << std::string(m.size() * static_cast<std::size_t>(w + 1), '-') << '\n';
        for (std::size_t a = 0; a < m.size(); ++a) {
            out << std::setw(w) << m.name(static_cast<Element>(a)) << " |";
            for (std::size_t b = 0; b < m.size(); ++b)
                out << ' ' << std::setw(w) << m.name(op(static_cast<Element>(a), static_cast<Element>(b)));
            out << '\n';
        }
    }

    auto json_counterexample(const TernaryAlgebra & m, const Witness & w) -> ordered_json
    {
        ordered_json assignment = ordered_json::object();
        for (const auto & [name, v] : w.counterexample.assignment)
            assignment[name] = m.name(v);
        return ordered_json{{"equation", w.equation}, {"assignment", assignment}, {"lhs", m.name(w.counterexample.lhs)},
            {"rhs", m.name(w.counterexample.rhs)}};
    }

    auto json_verdicts(const TernaryAlgebra & m, const LawReport & report) -> ordered_json
    {
        auto arr = ordered_json::array();
        for (const auto & v : report.verdicts) {
            ordered_json j{{"id", v.id}, {"status", to_string(v.status)}};
            j["counterexample"] = v.witness ? json_counterexample(m, *v.witness) : ordered_json(nullptr);
            arr.push_back(std::move(j));
        }
        return arr;
    }

    auto json_conditions(const TernaryAlgebra & m, const std::vector<Condition> & conditions) -> ordered_json
    {
        auto arr = ordered_json::array();
        for (const auto & c : conditions) {
            ordered_json j{{"id", c.id}, {"label", c.label}, {"holds", c.holds}};
            j["counterexample"] = c.witness ? json_counterexample(m, *c.witness) : ordered_json(nullptr);
            arr.push_back(std::move(j));
        }
        return arr;
    }

    auto render_conditions(std::ostream & out, const TernaryAlgebra & m, const char * theorem, const std::vector<Condition> & conditions) -> void
    {
        out << theorem << '\n';
        for (const auto & c : conditions) {
            out << "  (" << c.id << ") " << c.label << ' ' << (c.holds ? "true" : "false");
            if (c.witness)
                out << ": " << c.witness->equation << " fails at " << format_counterexample(m, c.witness->counterexample);
            out << '\n';
        }
    }

    auto yes(bool b) -> const char * { return b ? "true" : "false"; }
}

auto render_derived(std::ostream & out, const TernaryAlgebra & m) -> void
{
    auto d = derived_ops(m);
    const int w = width(m);
    out << "~\n";
    for (std::size_t a = 0; a < m.size(); ++a)
        out << std::setw(w) << m.name(static_cast<Element>(a)) << " -> " << m.name(d.complement(static_cast<Element>(a))) << '\n';
    out << '\n';
    render_binary(out, m, "*", [&](Element a, Element b) { return d.times(a, b); });
    out << '\n';
    render_binary(out, m, "@", [&](Element a, Element b) { return d.join(a, b); });
    out << '\n';
    render_binary(out, m, "+", [&](Element a, Element b) { return d.sum(a, b); });
}

auto render_classification_text(std::ostream & out, const TernaryAlgebra & m, const LawReport & axioms, const LawReport & laws,
    const ClassificationReport & report) -> void
{
    out << "size " << m.size() << ", hash " << hash_name(m) << '\n';
    out << "axioms " << (report.axioms_pass ? "pass" : "fail") << '\n';
    render_laws(out, m, axioms);
    if (! report.axioms_pass) {
        out << "classification not applicable: " << report.failing_axiom->id << " violated\n";
        return;
    }
    out << "laws\n";
    for (const auto & v : laws.verdicts)
        out << "  " << format_verdict(m, v) << '\n';
    render_conditions(out, m, "boolean conditions", report.vectors.thm1);
    render_conditions(out, m, "ring2 conditions", report.vectors.thm2);
    render_conditions(out, m, "nearRing2 conditions", report.vectors.thm3);
    out << "verdicts boolean=" << yes(report.verdicts.boolean) << " ring2=" << yes(report.verdicts.ring2)
        << " nearRing2=" << yes(report.verdicts.near_ring2) << '\n';
    if (report.disagreements.empty())
        out << "disagreements none\n";
    for (const auto & d : report.disagreements)
        out << "disagreement " << d << '\n';
}

auto classification_json(const std::string & source, const TernaryAlgebra & m, const LawReport & axioms, const LawReport & laws,
    const ClassificationReport & report) -> ordered_json
{
    ordered_json j;
    j["schema"] = "1";
    j["model"] = ordered_json{{"source", source}, {"size", m.size()}, {"elements", m.names()}, {"zero", m.name(m.zero())},
        {"one", m.name(m.one())}, {"hash", hash_name(m)}};
    j["axioms"] = json_verdicts(m, axioms);
    if (! report.axioms_pass) {
        j["laws"] = nullptr;
        j["vectors"] = nullptr;
        j["verdicts"] = nullptr;
        j["disagreements"] = ordered_json::array();
        j["applicable"] = false;
        return j;
    }
    j["laws"] = json_verdicts(m, laws);
    j["vectors"] = ordered_json{{"boolean", json_conditions(m, report.vectors.thm1)}, {"ring2", json_conditions(m, report.vectors.thm2)},
        {"nearRing2", json_conditions(m, report.vectors.thm3)}};
    j["verdicts"] = ordered_json{{"boolean", report.verdicts.boolean}, {"ring2", report.verdicts.ring2}, {"nearRing2", report.verdicts.near_ring2}};
    j["disagreements"] = report.disagreements;
    j["applicable"] = true;
    return j;
}

auto render_enumeration(std::ostream & out, const EnumerationResult & result, bool show_stats) -> void
{
    out << "size " << result.size << ": " << result.raw_count << " labelled models";
    if (result.up_to_iso)
        out << ", " << result.models.size() << " up to isomorphism";
    out << '\n';
    for (std::size_t i = 0; i < result.models.size(); ++i) {
        const auto & m = result.models[i];
        out << (result.up_to_iso ? "class " : "model ") << i << ' ' << hash_name(m);
        if (result.up_to_iso)
            out << " orbit " << result.orbit_sizes[i];
        if (i < result.classifications.size()) {
            const auto & c = result.classifications[i];
            out << " boolean=" << yes(c.verdicts.boolean) << " ring2=" << yes(c.verdicts.ring2) << " nearRing2=" << yes(c.verdicts.near_ring2);
            if (! c.disagreements.empty())
                out << " DISAGREEMENT";
        }
        out << '\n';
    }
    if (show_stats)
        out << "nodes " << result.statistics.nodes << " propagations " << result.statistics.propagations << " tasks " << result.statistics.tasks
            << '\n';
}

auto hash_name(const TernaryAlgebra & m) -> std::string
{
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << table_hash(m);
    return s.str();
}

} // namespace tba::cli
