#pragma once

#include <tba/laws.hh>

#include <optional>
#include <string>
#include <vector>

namespace tba {

/// One condition of a characterisation theorem, evaluated on a model.
struct Condition
{
    std::string id;    // "i", "ii", ...
    std::string label; // e.g. "booleanAlgebra"
    bool holds = false;
    std::optional<Witness> witness; // first failing item when false
};

struct ConditionVector
{
    /// booleanAlgebra, booleanRing, churchFormula, pAAB, pABB
    std::vector<Condition> thm1;
    /// ring2, ringFormula, leftDistributive
    std::vector<Condition> thm2;
    /// nearRing2, nearRingFormula, charTwo, rightDistributive
    std::vector<Condition> thm3;
};

struct Verdicts
{
    bool boolean = false;
    bool ring2 = false;
    bool near_ring2 = false;

    friend auto operator==(const Verdicts &, const Verdicts &) -> bool = default;
};

struct ClassificationReport
{
    bool axioms_pass = false;
    std::optional<LawVerdict> failing_axiom; // set when axioms_pass is false
    ConditionVector vectors;
    Verdicts verdicts;
    std::vector<std::string> disagreements;
};

/// Conditions (i)-(v) of the Boolean characterisation.
auto thm1_conditions(const TernaryAlgebra & m) -> std::vector<Condition>;
/// Conditions (i)-(iii) of the characteristic-2 ring characterisation.
auto thm2_conditions(const TernaryAlgebra & m) -> std::vector<Condition>;
/// Conditions (i)-(iv) of the characteristic-2 near-ring characterisation.
auto thm3_conditions(const TernaryAlgebra & m) -> std::vector<Condition>;

/// Runs the axiom suite, then every condition, then the audit checks.
/// When an axiom fails only axioms_pass and failing_axiom are meaningful.
auto classify(const TernaryAlgebra & m) -> ClassificationReport;

struct AuditResult
{
    /// "model <k>: <what>", in input order.
    std::vector<std::string> disagreements;
    /// Input positions skipped because an axiom fails.
    std::vector<std::size_t> not_applicable;
};

/// Checks that each theorem's conditions agree on every model.
auto equivalence_audit(const std::vector<TernaryAlgebra> & models) -> AuditResult;

} // namespace tba
