#pragma once

#include <tba/classify.hh>
#include <tba/finder.hh>
#include <tba/laws.hh>

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace tba::cli {

auto format_counterexample(const TernaryAlgebra & m, const Counterexample & cx) -> std::string;
auto format_verdict(const TernaryAlgebra & m, const LawVerdict & v) -> std::string;

auto render_laws(std::ostream & out, const TernaryAlgebra & m, const LawReport & report) -> void;
auto render_derived(std::ostream & out, const TernaryAlgebra & m) -> void;

/// Text and JSON forms of a classification carry the same verdicts and
/// counterexamples; JSON follows schema version "1".
auto render_classification_text(std::ostream & out, const TernaryAlgebra & m, const LawReport & axioms, const LawReport & laws,
    const ClassificationReport & report) -> void;
auto classification_json(const std::string & source, const TernaryAlgebra & m, const LawReport & axioms, const LawReport & laws,
    const ClassificationReport & report) -> nlohmann::ordered_json;

auto render_enumeration(std::ostream & out, const EnumerationResult & result, bool show_stats) -> void;

auto hash_name(const TernaryAlgebra & m) -> std::string;

} // namespace tba::cli
