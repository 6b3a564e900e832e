#pragma once

#include <tba/algebra.hh>

#include <optional>
#include <string>
#include <vector>

namespace tba {

/// Finite additive and multiplicative tables with designated zero and one.
/// Tables are row-major: add[a * n + b] = a + b.
struct NearRingPresentation
{
    std::vector<std::string> names;
    Element zero = 0;
    Element one = 1;
    std::vector<Element> add;
    std::vector<Element> mul;

    auto size() const -> std::size_t { return names.size(); }
    auto sum(Element a, Element b) const -> Element { return add[std::size_t{a} * size() + b]; }
    auto product(Element a, Element b) const -> Element { return mul[std::size_t{a} * size() + b]; }

    /// Additive inverse; throws UsageError if there is none.
    auto negate(Element a) const -> Element;
};

struct PresentationViolation
{
    std::string law;
    std::string witness;
};

/// Checks: (A,+,0) an Abelian group, (A,*,1) a monoid, right
/// distributivity, a*0 = 0. Returns every violated requirement with the
/// first witnessing tuple; an empty list means valid.
auto validate_presentation(const NearRingPresentation & p) -> std::vector<PresentationViolation>;

enum class FormulaKind
{
    /// a + b*(c - a)
    Affine,
    /// (~b*a) o (b*c), with ~b = 1+b and x o y = x + y*(x+1)
    Church,
    /// (~b*a) + (b*c), with ~b = 1+b
    Ring2,
    /// a + b*(a+c)
    NearRing2
};

auto to_string(FormulaKind k) -> std::string;
/// Throws UsageError for anything but affine|church|ring2|nearring2.
auto parse_formula_kind(std::string_view s) -> FormulaKind;

/// p(a, b, c) of the chosen formula, evaluated in the presentation.
auto formula_value(const NearRingPresentation & p, FormulaKind kind, Element a, Element b, Element c) -> Element;

/// Tabulates the chosen formula into a ternary algebra.
///
/// The presentation must validate, and the non-affine kinds need a+a = 0.
/// Ring2 on a presentation without left distributivity is allowed but adds
/// a warning, since the result may fail T3. An affine result always
/// satisfies T1-T4; a failure there throws std::logic_error.
auto build_model(const NearRingPresentation & p, FormulaKind kind, std::vector<std::string> * warnings = nullptr) -> TernaryAlgebra;

/// Whether the derived operations of m reproduce the presentation.
struct SourceComparison
{
    bool dot_agrees = true;
    bool plus_agrees = true;
    bool bar_agrees = true; // bar a against 1 - a
    std::optional<std::string> first_dot_mismatch;
    std::optional<std::string> first_plus_mismatch;
    std::optional<std::string> first_bar_mismatch;
};

/// m must be build_model(p, Affine) or share its carrier labels.
auto derived_vs_source(const NearRingPresentation & p, const TernaryAlgebra & m) -> SourceComparison;

/// gf2, gf2^1 .. gf2^4, gf4, dualnum2, z4affine, ut2gf2, n4paper.
auto catalog_names() -> std::vector<std::string>;

/// The (near-)ring behind a catalog entry. z4affine yields Z/4.
auto catalog_presentation(std::string_view name) -> NearRingPresentation;

/// The catalog model: Boolean entries through the church formula, the
/// rest through the affine formula.
auto catalog_model(std::string_view name) -> TernaryAlgebra;

} // namespace tba
