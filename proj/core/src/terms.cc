#include <tba/error.hh>
#include <tba/terms.hh>

#include <algorithm>
#include <cctype>
#include <set>

namespace tba {

auto Term::p(Term a, Term b, Term c) -> Term
{
    return Term{Kind::P, {}, {std::move(a), std::move(b), std::move(c)}};
}

auto Term::bar(Term t) -> Term
{
    return Term{Kind::Bar, {}, {std::move(t)}};
}

auto Term::dot(Term l, Term r) -> Term
{
    return Term{Kind::Dot, {}, {std::move(l), std::move(r)}};
}

auto Term::circ(Term l, Term r) -> Term
{
    return Term{Kind::Circ, {}, {std::move(l), std::move(r)}};
}

auto Term::plus(Term l, Term r) -> Term
{
    return Term{Kind::Plus, {}, {std::move(l), std::move(r)}};
}

namespace
{
    auto collect(const Term & t, std::set<std::string> & out) -> void
    {
        if (t.kind == Term::Kind::Var)
            out.insert(t.name);
        for (const auto & a : t.args)
            collect(a, out);
    }

    auto precedence(Term::Kind k) -> int
    {
        switch (k) {
            case Term::Kind::Plus: return 1;
            case Term::Kind::Circ: return 2;
            case Term::Kind::Dot: return 3;
            default: return 4;
        }
    }

    auto print(const Term & t, std::string & out) -> void
    {
        using K = Term::Kind;
        switch (t.kind) {
            case K::Zero: out += '0'; return;
            case K::One: out += '1'; return;
            case K::Var: out += t.name; return;
            case K::P:
                out += "p(";
                print(t.args[0], out);
                out += ", ";
                print(t.args[1], out);
                out += ", ";
                print(t.args[2], out);
                out += ')';
                return;
            case K::Bar: {
                out += '~';
                bool wrap = precedence(t.args[0].kind) < 4;
                if (wrap) out += '(';
                print(t.args[0], out);
                if (wrap) out += ')';
                return;
            }
            case K::Dot:
            case K::Circ:
            case K::Plus: {
                int prec = precedence(t.kind);
                bool wrap_left = precedence(t.args[0].kind) < prec;
                bool wrap_right = precedence(t.args[1].kind) <= prec;
                if (wrap_left) out += '(';
                print(t.args[0], out);
                if (wrap_left) out += ')';
                out += t.kind == K::Dot ? "*" : t.kind == K::Circ ? " @ " : " + ";
                if (wrap_right) out += '(';
                print(t.args[1], out);
                if (wrap_right) out += ')';
                return;
            }
        }
    }

    class Parser
    {
    public:
        explicit Parser(std::string_view src) :
            _src(src)
        {
        }

        auto parse_any() -> std::variant<Term, Equation>
        {
            Term lhs = parse_sum();
            skip_space();
            if (at_end())
                return lhs;
            if (peek() != '=')
                fail("expected '=' or end of input");
            ++_pos;
            Term rhs = parse_sum();
            skip_space();
            if (! at_end())
                fail("unexpected '" + std::string(1, peek()) + "' after equation");
            return Equation{std::move(lhs), std::move(rhs)};
        }

    private:
        std::string_view _src;
        std::size_t _pos = 0;

        auto at_end() const -> bool { return _pos >= _src.size(); }
        auto peek() const -> char { return _src[_pos]; }

        [[noreturn]] auto fail(const std::string & msg) const -> void
        {
            if (at_end())
                throw ParseError("syntax error at end of input: " + msg, 0);
            throw ParseError("syntax error at column " + std::to_string(_pos + 1) + ": " + msg, _pos + 1);
        }

        auto skip_space() -> void
        {
            while (! at_end() && std::isspace(static_cast<unsigned char>(peek())))
                ++_pos;
        }

        auto accept(char c) -> bool
        {
            skip_space();
            if (! at_end() && peek() == c) {
                ++_pos;
                return true;
            }
            return false;
        }

        auto expect(char c) -> void
        {
            if (! accept(c))
                fail(std::string("expected '") + c + "'");
        }

        auto parse_sum() -> Term
        {
            Term t = parse_circ();
            while (accept('+'))
                t = Term::plus(std::move(t), parse_circ());
            return t;
        }

        auto parse_circ() -> Term
        {
            Term t = parse_prod();
            while (accept('@'))
                t = Term::circ(std::move(t), parse_prod());
            return t;
        }

        auto parse_prod() -> Term
        {
            Term t = parse_unary();
            while (accept('*'))
                t = Term::dot(std::move(t), parse_unary());
            return t;
        }

        auto parse_unary() -> Term
        {
            if (accept('~'))
                return Term::bar(parse_unary());
            return parse_atom();
        }

        auto parse_atom() -> Term
        {
            skip_space();
            if (at_end())
                fail("expected a term");
            char c = peek();
            if (c == '0' || c == '1') {
                ++_pos;
                return c == '0' ? Term::zero() : Term::one();
            }
            if (c == '(') {
                ++_pos;
                Term t = parse_sum();
                expect(')');
                return t;
            }
            if (std::islower(static_cast<unsigned char>(c))) {
                std::size_t start = _pos;
                while (! at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++_pos;
                std::string ident{_src.substr(start, _pos - start)};
                if (ident != "p")
                    return Term::var(std::move(ident));
                if (! accept('(')) {
                    _pos = start;
                    fail("'p' is reserved for the ternary operation and cannot be a variable");
                }
                std::vector<Term> args;
                args.push_back(parse_sum());
                while (accept(','))
                    args.push_back(parse_sum());
                std::size_t close = _pos;
                expect(')');
                if (args.size() != 3) {
                    _pos = close;
                    fail("p expects 3 arguments, got " + std::to_string(args.size()));
                }
                return Term::p(std::move(args[0]), std::move(args[1]), std::move(args[2]));
            }
            fail("unexpected '" + std::string(1, c) + "'");
        }
    };
}

auto variables(const Term & t) -> std::vector<std::string>
{
    std::set<std::string> names;
    collect(t, names);
    return {names.begin(), names.end()};
}

auto to_string(const Term & t) -> std::string
{
    std::string out;
    print(t, out);
    return out;
}

Equation::Equation(Term lhs, Term rhs) :
    _lhs(std::move(lhs)),
    _rhs(std::move(rhs))
{
    std::set<std::string> names;
    collect(_lhs, names);
    collect(_rhs, names);
    _vars.assign(names.begin(), names.end());
    compile(_lhs, _vars, _lhs_code);
    compile(_rhs, _vars, _rhs_code);
}

auto Equation::compile(const Term & t, const std::vector<std::string> & vars, std::vector<Instruction> & code) -> void
{
    for (const auto & a : t.args)
        compile(a, vars, code);
    std::size_t slot = 0;
    if (t.kind == Term::Kind::Var)
        slot = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), t.name) - vars.begin());
    code.push_back({t.kind, slot});
}

auto Equation::run(const std::vector<Instruction> & code, const TernaryAlgebra & m, const DerivedOps & d, std::span<const Element> slots) -> Element
{
    // Postfix evaluation; depth never exceeds the code length.
    Element inline_stack[64] = {};
    std::vector<Element> heap_stack;
    Element * stack = inline_stack;
    if (code.size() > 64) {
        heap_stack.resize(code.size());
        stack = heap_stack.data();
    }
    std::size_t top = 0;
    using K = Term::Kind;
    for (const auto & ins : code) {
        switch (ins.kind) {
            case K::Zero: stack[top++] = m.zero(); break;
            case K::One: stack[top++] = m.one(); break;
            case K::Var: stack[top++] = slots[ins.slot]; break;
            case K::P:
                top -= 2;
                stack[top - 1] = m.p(stack[top - 1], stack[top], stack[top + 1]);
                break;
            case K::Bar: stack[top - 1] = d.complement(stack[top - 1]); break;
            case K::Dot:
                --top;
                stack[top - 1] = d.times(stack[top - 1], stack[top]);
                break;
            case K::Circ:
                --top;
                stack[top - 1] = d.join(stack[top - 1], stack[top]);
                break;
            case K::Plus:
                --top;
                stack[top - 1] = d.sum(stack[top - 1], stack[top]);
                break;
        }
    }
    return stack[0];
}

auto Equation::evaluate(const TernaryAlgebra & m, const DerivedOps & d, std::span<const Element> slots) const -> std::pair<Element, Element>
{
    return {run(_lhs_code, m, d, slots), run(_rhs_code, m, d, slots)};
}

auto to_string(const Equation & e) -> std::string
{
    return to_string(e.lhs()) + " = " + to_string(e.rhs());
}

auto parse(std::string_view src) -> std::variant<Term, Equation>
{
    return Parser{src}.parse_any();
}

auto parse_term(std::string_view src) -> Term
{
    auto r = parse(src);
    if (auto t = std::get_if<Term>(&r))
        return std::move(*t);
    throw ParseError("expected a term, found an equation", 0);
}

auto parse_equation(std::string_view src) -> Equation
{
    auto r = parse(src);
    if (auto e = std::get_if<Equation>(&r))
        return std::move(*e);
    throw ParseError("syntax error at end of input: expected '='", 0);
}

namespace
{
    auto eval_tree(const TernaryAlgebra & m, const DerivedOps & d, const Term & t, const Assignment & asg) -> Element
    {
        using K = Term::Kind;
        switch (t.kind) {
            case K::Zero: return m.zero();
            case K::One: return m.one();
            case K::Var: {
                auto it = asg.find(t.name);
                if (it == asg.end())
                    throw UsageError("unbound variable '" + t.name + "'");
                if (it->second >= m.size())
                    throw UsageError("variable '" + t.name + "' bound to an out-of-range element");
                return it->second;
            }
            case K::P: return m.p(eval_tree(m, d, t.args[0], asg), eval_tree(m, d, t.args[1], asg), eval_tree(m, d, t.args[2], asg));
            case K::Bar: return d.complement(eval_tree(m, d, t.args[0], asg));
            case K::Dot: return d.times(eval_tree(m, d, t.args[0], asg), eval_tree(m, d, t.args[1], asg));
            case K::Circ: return d.join(eval_tree(m, d, t.args[0], asg), eval_tree(m, d, t.args[1], asg));
            case K::Plus: return d.sum(eval_tree(m, d, t.args[0], asg), eval_tree(m, d, t.args[1], asg));
        }
        return 0;
    }
}

auto eval_term(const TernaryAlgebra & m, const Term & t, const Assignment & asg) -> Element
{
    return eval_tree(m, derived_ops(m), t, asg);
}

auto check_equation(const TernaryAlgebra & m, const Equation & e, const Assignment & fixed) -> CheckOutcome
{
    return check_equation(m, derived_ops(m), e, fixed);
}

auto check_equation(const TernaryAlgebra & m, const DerivedOps & d, const Equation & e, const Assignment & fixed) -> CheckOutcome
{
    const auto & vars = e.vars();
    const auto n = m.size();
    std::vector<Element> slots(vars.size(), 0);
    std::vector<std::size_t> free_slots;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = fixed.find(vars[i]);
        if (it == fixed.end()) {
            free_slots.push_back(i);
            continue;
        }
        if (it->second >= n)
            throw UsageError("variable '" + vars[i] + "' bound to an out-of-range element");
        slots[i] = it->second;
    }

    while (true) {
        auto [l, r] = e.evaluate(m, d, slots);
        if (l != r) {
            Counterexample cx;
            for (std::size_t i = 0; i < vars.size(); ++i)
                cx.assignment.emplace_back(vars[i], slots[i]);
            cx.lhs = l;
            cx.rhs = r;
            return CheckOutcome{std::move(cx)};
        }
        // Odometer over the free slots, last variable least significant.
        std::size_t k = free_slots.size();
        while (true) {
            if (k == 0)
                return {};
            auto i = free_slots[--k];
            if (++slots[i] < n)
                break;
            slots[i] = 0;
        }
    }
}

auto format_assignment(const TernaryAlgebra & m, const Counterexample & cx) -> std::string
{
    std::string out;
    for (const auto & [name, v] : cx.assignment) {
        if (! out.empty())
            out += ' ';
        out += name + '=' + m.name(v);
    }
    return out;
}

} // namespace tba
