#include <tba/classify.hh>

#include <initializer_list>

namespace tba {

namespace
{
    struct Requirement
    {
        std::vector<Equation> equations;
        bool needs_inverses = false;
    };

    auto equations(std::initializer_list<const char *> sources) -> std::vector<Equation>
    {
        std::vector<Equation> result;
        for (auto s : sources)
            result.push_back(parse_equation(s));
        return result;
    }

    auto append(std::vector<Equation> & to, std::vector<Equation> from) -> void
    {
        to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
    }

    // Every a has some b with a+b = 0 = b+a.
    auto inverse_witness(const TernaryAlgebra & m, const DerivedOps & d) -> std::optional<Witness>
    {
        for (std::size_t a = 0; a < m.size(); ++a) {
            bool found = false;
            for (std::size_t b = 0; b < m.size() && ! found; ++b)
                found = d.sum(static_cast<Element>(a), static_cast<Element>(b)) == m.zero()
                    && d.sum(static_cast<Element>(b), static_cast<Element>(a)) == m.zero();
            if (! found) {
                Counterexample cx;
                cx.assignment.emplace_back("a", static_cast<Element>(a));
                cx.lhs = static_cast<Element>(a);
                cx.rhs = m.zero();
                return Witness{"exists b: a + b = 0 = b + a", cx};
            }
        }
        return std::nullopt;
    }

    auto evaluate(const TernaryAlgebra & m, const DerivedOps & d, std::string id, std::string label, const Requirement & req) -> Condition
    {
        Condition c{std::move(id), std::move(label), true, std::nullopt};
        for (const auto & e : req.equations)
            if (auto r = check_equation(m, d, e); ! r.holds()) {
                c.holds = false;
                c.witness = Witness{to_string(e), *r.counterexample};
                return c;
            }
        if (req.needs_inverses)
            if (auto w = inverse_witness(m, d)) {
                c.holds = false;
                c.witness = std::move(w);
            }
        return c;
    }

    auto lattice() -> std::vector<Equation>
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

    auto additive_group() -> std::vector<Equation>
    {
        return equations({"(a+b)+c = a+(b+c)", "a+0 = a", "0+a = a", "a+a = 0"});
    }

    auto multiplicative_monoid() -> std::vector<Equation>
    {
        return equations({"(a*b)*c = a*(b*c)", "a*1 = a", "1*a = a"});
    }

    struct Requirements
    {
        Requirement boolean_algebra, boolean_ring, church, paab, pabb;
        Requirement ring2, ring_formula, left_distributive;
        Requirement near_ring2, near_ring_formula, char_two, right_distributive;
        Requirement plus_commutes;

        Requirements()
        {
            boolean_algebra.equations = lattice();
            append(boolean_algebra.equations, equations({"a*~a = 0", "a@~a = 1"}));

            boolean_ring.equations = additive_group();
            append(boolean_ring.equations, equations({"a+b = b+a"}));
            append(boolean_ring.equations, multiplicative_monoid());
            append(boolean_ring.equations, equations({"a*(b+c) = a*b + a*c", "(a+b)*c = a*c + b*c", "a*a = a"}));
            boolean_ring.needs_inverses = true;

            church.equations = equations({"p(a,b,c) = (~b*a) @ (b*c)"});
            paab.equations = equations({"p(a,a,b) = a*b"});
            pabb.equations = equations({"p(a,b,b) = a@b"});

            ring2.equations = additive_group();
            append(ring2.equations, equations({"a+b = b+a"}));
            append(ring2.equations, multiplicative_monoid());
            append(ring2.equations, equations({"a*(b+c) = a*b + a*c", "(a+b)*c = a*c + b*c"}));
            ring2.needs_inverses = true;
            ring_formula.equations = equations({"p(a,b,c) = (~b*a) + (b*c)"});
            left_distributive.equations = equations({"a*(b+c) = a*b + a*c"});

            near_ring2.equations = additive_group();
            append(near_ring2.equations, multiplicative_monoid());
            append(near_ring2.equations, equations({"(a+b)*c = a*c + b*c"}));
            near_ring2.needs_inverses = true;
            near_ring_formula.equations = equations({"p(a,b,c) = a + (b*(a+c))"});
            char_two.equations = equations({"a+a = 0"});
            right_distributive.equations = equations({"(a+b)*c = a*c + b*c"});

            plus_commutes.equations = equations({"a+b = b+a"});
        }
    };

    auto requirements() -> const Requirements &
    {
        static const Requirements r;
        return r;
    }

    auto thm1(const TernaryAlgebra & m, const DerivedOps & d) -> std::vector<Condition>
    {
        const auto & r = requirements();
        return {
            evaluate(m, d, "i", "booleanAlgebra", r.boolean_algebra),
            evaluate(m, d, "ii", "booleanRing", r.boolean_ring),
            evaluate(m, d, "iii", "churchFormula", r.church),
            evaluate(m, d, "iv", "pAAB", r.paab),
            evaluate(m, d, "v", "pABB", r.pabb),
        };
    }

    auto thm2(const TernaryAlgebra & m, const DerivedOps & d) -> std::vector<Condition>
    {
        const auto & r = requirements();
        return {
            evaluate(m, d, "i", "ring2", r.ring2),
            evaluate(m, d, "ii", "ringFormula", r.ring_formula),
            evaluate(m, d, "iii", "leftDistributive", r.left_distributive),
        };
    }

    auto thm3(const TernaryAlgebra & m, const DerivedOps & d) -> std::vector<Condition>
    {
        const auto & r = requirements();
        return {
            evaluate(m, d, "i", "nearRing2", r.near_ring2),
            evaluate(m, d, "ii", "nearRingFormula", r.near_ring_formula),
            evaluate(m, d, "iii", "charTwo", r.char_two),
            evaluate(m, d, "iv", "rightDistributive", r.right_distributive),
        };
    }

    auto all_true(const std::vector<Condition> & v) -> bool
    {
        for (const auto & c : v)
            if (! c.holds)
                return false;
        return true;
    }

    auto uniform(const std::vector<Condition> & v) -> bool
    {
        for (const auto & c : v)
            if (c.holds != v.front().holds)
                return false;
        return true;
    }

    auto describe(const std::string & theorem, const std::vector<Condition> & v) -> std::string
    {
        std::string s = theorem + " conditions disagree:";
        for (const auto & c : v)
            s += " (" + c.id + ")=" + (c.holds ? "T" : "F");
        return s;
    }
}

auto thm1_conditions(const TernaryAlgebra & m) -> std::vector<Condition>
{
    return thm1(m, derived_ops(m));
}

auto thm2_conditions(const TernaryAlgebra & m) -> std::vector<Condition>
{
    return thm2(m, derived_ops(m));
}

auto thm3_conditions(const TernaryAlgebra & m) -> std::vector<Condition>
{
    return thm3(m, derived_ops(m));
}

auto classify(const TernaryAlgebra & m) -> ClassificationReport
{
    ClassificationReport report;
    auto axiom_report = axiom_suite(m);
    for (const auto & v : axiom_report.verdicts)
        if (v.status == Status::Violated) {
            report.failing_axiom = v;
            return report;
        }
    report.axioms_pass = true;

    auto d = derived_ops(m);
    report.vectors.thm1 = thm1(m, d);
    report.vectors.thm2 = thm2(m, d);
    report.vectors.thm3 = thm3(m, d);

    report.verdicts.boolean = all_true(report.vectors.thm1);
    report.verdicts.ring2 = all_true(report.vectors.thm2);
    report.verdicts.near_ring2 = all_true(report.vectors.thm3);

    if (! uniform(report.vectors.thm1))
        report.disagreements.push_back(describe("boolean", report.vectors.thm1));
    if (! uniform(report.vectors.thm2))
        report.disagreements.push_back(describe("ring2", report.vectors.thm2));
    if (! uniform(report.vectors.thm3))
        report.disagreements.push_back(describe("nearRing2", report.vectors.thm3));

    if (report.verdicts.boolean && ! report.verdicts.ring2)
        report.disagreements.push_back("nesting: boolean holds but ring2 does not");
    if (report.verdicts.ring2 && ! report.verdicts.near_ring2)
        report.disagreements.push_back("nesting: ring2 holds but nearRing2 does not");

    // The near-ring condition does not assume + commutes; it must follow.
    if (report.vectors.thm3.front().holds)
        if (auto r = check_equation(m, d, requirements().plus_commutes.equations.front()); ! r.holds())
            report.disagreements.push_back("nearRing2 holds but + is not commutative at " + format_assignment(m, *r.counterexample));

    return report;
}

auto equivalence_audit(const std::vector<TernaryAlgebra> & models) -> AuditResult
{
    AuditResult result;
    for (std::size_t k = 0; k < models.size(); ++k) {
        auto report = classify(models[k]);
        if (! report.axioms_pass) {
            result.not_applicable.push_back(k);
            continue;
        }
        for (const auto & d : report.disagreements)
            result.disagreements.push_back("model " + std::to_string(k) + ": " + d);
    }
    return result;
}

} // namespace tba
