#include <tba/error.hh>
#include <tba/laws.hh>

#include <chrono>
#include <initializer_list>

namespace tba {

namespace
{
    auto equations(std::initializer_list<const char *> sources) -> std::vector<Equation>
    {
        std::vector<Equation> result;
        for (auto s : sources)
            result.push_back(parse_equation(s));
        return result;
    }

    auto implies(std::vector<Equation> hypotheses, std::vector<Equation> conclusions) -> Clause
    {
        return Clause{std::move(hypotheses), std::move(conclusions), Scope::Universal, {}};
    }

    auto plain(std::string id, std::string summary, std::initializer_list<const char *> conclusions) -> Law
    {
        return Law{std::move(id), std::move(summary), {implies({}, equations(conclusions))}};
    }

    auto lattice_laws() -> std::vector<Equation>
    {
        return equations({
            "a*b = b*a", "a@b = b@a",
            "(a*b)*c = a*(b*c)", "(a@b)@c = a@(b@c)",
            "a*a = a", "a@a = a",
            "a@(a*b) = a", "a*(a@b) = a",
            "a*(b@c) = (a*b)@(a*c)", "a@(b*c) = (a@b)*(a@c)",
            "a*1 = a", "a@0 = a", "a*0 = 0", "a@1 = 1",
        });
    }

    auto build_axioms() -> std::vector<Law>
    {
        return {
            plain("T1", "p(0,a,1) = a", {"p(0,a,1) = a"}),
            plain("T2", "p(a,b,a) = a", {"p(a,b,a) = a"}),
            plain("T3", "p(a,p(b1,b2,b3),c) = p(p(a,b1,c),b2,p(a,b3,c))", {"p(a,p(b1,b2,b3),c) = p(p(a,b1,c),b2,p(a,b3,c))"}),
            plain("T4", "p(a,0,b) = a = p(b,1,a)", {"p(a,0,b) = a", "p(b,1,a) = a"}),
        };
    }

    auto build_lemma_laws() -> std::vector<Law>
    {
        std::vector<Law> laws;
        laws.push_back(plain("L1", "complement swaps the constants and is an involution", {"~1 = 0", "~0 = 1", "~~a = a"}));
        laws.push_back(plain("L2", "complement and p; p(a,b,c) = p(c,~b,a)", {"~p(a,b,c) = p(~a,b,~c)", "p(a,b,c) = p(c,~b,a)"}));
        laws.push_back(plain("L3", "complement dualises * and @ and passes through +",
            {"~(a*b) = ~b@~a", "~(a@b) = ~b*~a", "~(a+b) = ~a+b", "~(a+b) = a+~b"}));
        laws.push_back(plain("L4", "(A,*,1), (A,@,0) and (A,+,0) are monoids",
            {"(a*b)*c = a*(b*c)", "a*1 = a", "1*a = a",
             "(a@b)@c = a@(b@c)", "a@0 = a", "0@a = a",
             "(a+b)+c = a+(b+c)", "a+0 = a", "0+a = a"}));
        laws.push_back(plain("L5", "0 absorbs under *, 1 absorbs under @", {"a*0 = 0", "0*a = 0", "a@1 = 1", "1@a = 1"}));
        laws.push_back(plain("L6", "a+1 = ~a = 1+a and 1+1 = 0", {"a+1 = ~a", "1+a = ~a", "1+1 = 0"}));

        laws.push_back(Law{"L7", "if p(0,a,b) = p(a,a,b) then * and @ commute with a*~a = 0, a@~a = 1",
            {implies(equations({"p(0,a,b) = p(a,a,b)"}), equations({"a*b = b*a", "a@b = b@a", "a*~a = 0", "a@~a = 1"}))}});

        // The @ half is false element by element (the 4-element near-ring has
        // ~v@v = 1 but v@v = 1), so only the * half is read pointwise.
        laws.push_back(Law{"L8", "~a*a = 0 implies a*a = a; ~a@a = 1 implies a@a = a",
            {Clause{equations({"~a*a = 0"}), equations({"a*a = a"}), Scope::Pointwise, {"a"}},
             implies(equations({"~a@a = 1"}), equations({"a@a = a"}))}});

        laws.push_back(Law{"L9", "a commutative idempotent * or @ makes (A,@,*,0,1) a bounded distributive lattice",
            {implies(equations({"a*b = b*a", "a*a = a"}), lattice_laws()),
             implies(equations({"a@b = b@a", "a@a = a"}), lattice_laws())}});

        laws.push_back(Law{"L10", "a+a = 0 implies + commutes and (a+b)*c = a*c+b*c",
            {implies(equations({"a+a = 0"}), equations({"a+b = b+a", "(a+b)*c = a*c + b*c"}))}});

        laws.push_back(Law{"EQ1", "a+a = 0 implies a+p(a,b,c) = p(p(a,a,~a),b,p(a,c,~a)) = b*(a+c)",
            {implies(equations({"a+a = 0"}),
                equations({"a + p(a,b,c) = p(a,p(a,b,c),~a)", "a + p(a,b,c) = p(p(a,a,~a),b,p(a,c,~a))", "a + p(a,b,c) = b*(a+c)"}))}});
        return laws;
    }

    enum class ClauseResult
    {
        Holds,
        Vacuous,
        Violated
    };

    auto check_universal(const TernaryAlgebra & m, const DerivedOps & d, const Clause & clause, std::optional<Witness> & witness) -> ClauseResult
    {
        for (const auto & h : clause.hypotheses)
            if (auto r = check_equation(m, d, h); ! r.holds()) {
                witness = Witness{to_string(h), *r.counterexample};
                return ClauseResult::Vacuous;
            }
        for (const auto & c : clause.conclusions)
            if (auto r = check_equation(m, d, c); ! r.holds()) {
                witness = Witness{to_string(c), *r.counterexample};
                return ClauseResult::Violated;
            }
        return ClauseResult::Holds;
    }

    auto check_pointwise(const TernaryAlgebra & m, const DerivedOps & d, const Clause & clause, const std::vector<std::string> & shared,
        std::optional<Witness> & witness) -> ClauseResult
    {
        const auto n = m.size();
        std::vector<Element> values(shared.size(), 0);
        bool engaged = false;
        std::optional<Witness> first_hypothesis_failure;
        while (true) {
            Assignment fixed;
            for (std::size_t i = 0; i < shared.size(); ++i)
                fixed[shared[i]] = values[i];

            bool hypotheses_hold = true;
            for (const auto & h : clause.hypotheses)
                if (auto r = check_equation(m, d, h, fixed); ! r.holds()) {
                    if (! first_hypothesis_failure)
                        first_hypothesis_failure = Witness{to_string(h), *r.counterexample};
                    hypotheses_hold = false;
                    break;
                }
            if (hypotheses_hold) {
                engaged = true;
                for (const auto & c : clause.conclusions)
                    if (auto r = check_equation(m, d, c, fixed); ! r.holds()) {
                        witness = Witness{to_string(c), *r.counterexample};
                        return ClauseResult::Violated;
                    }
            }

            std::size_t k = shared.size();
            while (true) {
                if (k == 0) {
                    if (engaged)
                        return ClauseResult::Holds;
                    witness = first_hypothesis_failure;
                    return ClauseResult::Vacuous;
                }
                --k;
                if (++values[k] < n)
                    break;
                values[k] = 0;
            }
        }
    }
}

auto to_string(Status s) -> std::string
{
    switch (s) {
        case Status::Passed: return "passed";
        case Status::HypothesisFailed: return "hypothesis-failed";
        case Status::Violated: return "violated";
    }
    return "?";
}

auto LawReport::any_violated() const -> bool
{
    for (const auto & v : verdicts)
        if (v.status == Status::Violated)
            return true;
    return false;
}

auto LawReport::find(std::string_view id) const -> const LawVerdict *
{
    for (const auto & v : verdicts)
        if (v.id == id)
            return &v;
    return nullptr;
}

auto axioms() -> const std::vector<Law> &
{
    static const std::vector<Law> catalog = build_axioms();
    return catalog;
}

auto lemma_laws() -> const std::vector<Law> &
{
    static const std::vector<Law> catalog = build_lemma_laws();
    return catalog;
}

auto find_law(std::string_view id) -> const Law *
{
    for (const auto * list : {&axioms(), &lemma_laws()})
        for (const auto & law : *list)
            if (law.id == id)
                return &law;
    return nullptr;
}

auto check_law(const TernaryAlgebra & m, const DerivedOps & d, const Law & law) -> LawVerdict
{
    auto start = std::chrono::steady_clock::now();
    LawVerdict verdict{law.id, Status::Passed, std::nullopt, 0.0};
    bool all_vacuous = ! law.clauses.empty();
    std::optional<Witness> vacuous_witness;
    for (const auto & clause : law.clauses) {
        std::optional<Witness> w;
        auto r = clause.scope == Scope::Universal ? check_universal(m, d, clause, w) : check_pointwise(m, d, clause, clause.shared_vars, w);
        if (r == ClauseResult::Violated) {
            verdict.status = Status::Violated;
            verdict.witness = std::move(w);
            all_vacuous = false;
            break;
        }
        if (r == ClauseResult::Vacuous) {
            if (! vacuous_witness)
                vacuous_witness = std::move(w);
        }
        else
            all_vacuous = false;
    }
    if (verdict.status != Status::Violated && all_vacuous) {
        verdict.status = Status::HypothesisFailed;
        verdict.witness = std::move(vacuous_witness);
    }
    verdict.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

auto check_law(const TernaryAlgebra & m, const Law & law) -> LawVerdict
{
    return check_law(m, derived_ops(m), law);
}

namespace
{
    auto run_suite(const TernaryAlgebra & m, const std::vector<Law> & laws) -> LawReport
    {
        auto d = derived_ops(m);
        LawReport report;
        for (const auto & law : laws)
            report.verdicts.push_back(check_law(m, d, law));
        return report;
    }
}

auto axiom_suite(const TernaryAlgebra & m) -> LawReport
{
    return run_suite(m, axioms());
}

auto law_suite(const TernaryAlgebra & m) -> LawReport
{
    return run_suite(m, lemma_laws());
}

auto satisfies_axioms(const TernaryAlgebra & m) -> bool
{
    return ! axiom_suite(m).any_violated();
}

} // namespace tba
