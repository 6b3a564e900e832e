#pragma once

#include <tba/terms.hh>

#include <optional>
#include <string>
#include <vector>

namespace tba {

enum class Scope
{
    /// Hypotheses are quantified over all assignments before the implication.
    Universal,
    /// For each assignment of the shared variables, hypotheses true there
    /// require conclusions true there; other variables stay universal.
    Pointwise
};

/// One implication: if every hypothesis holds then every conclusion holds.
struct Clause
{
    std::vector<Equation> hypotheses;
    std::vector<Equation> conclusions;
    Scope scope = Scope::Universal;
    /// Variables fixed per assignment under Pointwise scope.
    std::vector<std::string> shared_vars;
};

/// A named checkable statement. Holds iff every clause holds, which lets a
/// law carry several implications (L8) or a disjunctive hypothesis split
/// into one clause per alternative (L9). A law is vacuous
/// (HypothesisFailed) when no clause's hypotheses are ever met.
struct Law
{
    std::string id;
    std::string summary;
    std::vector<Clause> clauses;
};

enum class Status
{
    Passed,
    HypothesisFailed,
    Violated
};

auto to_string(Status s) -> std::string;

/// The failing equation of a verdict together with its assignment.
struct Witness
{
    std::string equation;
    Counterexample counterexample;
};

struct LawVerdict
{
    std::string id;
    Status status = Status::Passed;
    std::optional<Witness> witness;
    double seconds = 0.0;
};

struct LawReport
{
    std::vector<LawVerdict> verdicts;

    auto any_violated() const -> bool;
    auto find(std::string_view id) const -> const LawVerdict *;
};

/// T1..T4, in that order.
auto axioms() -> const std::vector<Law> &;

/// L1..L10 followed by EQ1.
auto lemma_laws() -> const std::vector<Law> &;

/// Looks up an axiom or lemma law by id; nullptr if unknown.
auto find_law(std::string_view id) -> const Law *;

auto check_law(const TernaryAlgebra & m, const DerivedOps & d, const Law & law) -> LawVerdict;
auto check_law(const TernaryAlgebra & m, const Law & law) -> LawVerdict;

auto axiom_suite(const TernaryAlgebra & m) -> LawReport;
auto law_suite(const TernaryAlgebra & m) -> LawReport;

/// True iff none of T1..T4 is violated.
auto satisfies_axioms(const TernaryAlgebra & m) -> bool;

} // namespace tba
