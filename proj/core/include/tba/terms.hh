#pragma once

#include <tba/algebra.hh>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tba {

/// Abstract syntax over {p, 0, 1, ~, *, @, +} and variables.
///
/// Concrete syntax: `~` is the complement, `*` is a.b, `@` is a o b and `+`
/// is the derived sum. Precedence is ~ > * > @ > +, binary operators are
/// left-associative.
struct Term
{
    enum class Kind
    {
        Zero,
        One,
        Var,
        P,
        Bar,
        Dot,
        Circ,
        Plus
    };

    Kind kind = Kind::Zero;
    std::string name;       // Var only
    std::vector<Term> args; // 3 for P, 1 for Bar, 2 for binary ops

    static auto zero() -> Term { return Term{Kind::Zero, {}, {}}; }
    static auto one() -> Term { return Term{Kind::One, {}, {}}; }
    static auto var(std::string n) -> Term { return Term{Kind::Var, std::move(n), {}}; }
    static auto p(Term a, Term b, Term c) -> Term;
    static auto bar(Term t) -> Term;
    static auto dot(Term l, Term r) -> Term;
    static auto circ(Term l, Term r) -> Term;
    static auto plus(Term l, Term r) -> Term;

    friend auto operator==(const Term &, const Term &) -> bool = default;
};

/// Sorted, duplicate-free variable names occurring in a term.
auto variables(const Term & t) -> std::vector<std::string>;

/// Printed with the minimum parentheses needed to parse back to the same tree.
auto to_string(const Term & t) -> std::string;

using Assignment = std::map<std::string, Element, std::less<>>;

/// lhs = rhs, with the union of variables sorted lexicographically.
class Equation
{
public:
    Equation(Term lhs, Term rhs);

    auto lhs() const -> const Term & { return _lhs; }
    auto rhs() const -> const Term & { return _rhs; }
    auto vars() const -> const std::vector<std::string> & { return _vars; }

    /// Evaluate both sides with slot i bound to vars()[i].
    auto evaluate(const TernaryAlgebra & m, const DerivedOps & d, std::span<const Element> slots) const -> std::pair<Element, Element>;

    friend auto operator==(const Equation & a, const Equation & b) -> bool { return a._lhs == b._lhs && a._rhs == b._rhs; }

private:
    struct Instruction
    {
        Term::Kind kind;
        std::size_t slot;
    };

    Term _lhs, _rhs;
    std::vector<std::string> _vars;
    std::vector<Instruction> _lhs_code, _rhs_code;

    static auto compile(const Term & t, const std::vector<std::string> & vars, std::vector<Instruction> & code) -> void;
    static auto run(const std::vector<Instruction> & code, const TernaryAlgebra & m, const DerivedOps & d, std::span<const Element> slots) -> Element;
};

auto to_string(const Equation & e) -> std::string;

/// Parse a term or, if there is a top-level '=', an equation. Throws ParseError.
auto parse(std::string_view src) -> std::variant<Term, Equation>;
auto parse_term(std::string_view src) -> Term;
auto parse_equation(std::string_view src) -> Equation;

/// Throws UsageError on an unbound variable.
auto eval_term(const TernaryAlgebra & m, const Term & t, const Assignment & asg) -> Element;

struct Counterexample
{
    std::vector<std::pair<std::string, Element>> assignment;
    Element lhs = 0;
    Element rhs = 0;
};

struct CheckOutcome
{
    std::optional<Counterexample> counterexample;

    auto holds() const -> bool { return ! counterexample.has_value(); }
};

/// Universal check over every assignment, in lexicographic order of the
/// sorted variable list (first variable most significant). Variables bound
/// in `fixed` are held at their given values. The first failing assignment
/// is reported.
auto check_equation(const TernaryAlgebra & m, const Equation & e, const Assignment & fixed = {}) -> CheckOutcome;
auto check_equation(const TernaryAlgebra & m, const DerivedOps & d, const Equation & e, const Assignment & fixed = {}) -> CheckOutcome;

/// "x=u y=v" using the model's labels.
auto format_assignment(const TernaryAlgebra & m, const Counterexample & cx) -> std::string;

} // namespace tba
