#include <tba/construct.hh>
#include <tba/error.hh>
#include <tba/laws.hh>

#include <stdexcept>

namespace tba {

auto NearRingPresentation::negate(Element a) const -> Element
{
    for (std::size_t b = 0; b < size(); ++b)
        if (sum(a, static_cast<Element>(b)) == zero)
            return static_cast<Element>(b);
    throw UsageError("element '" + names[a] + "' has no additive inverse");
}

namespace
{
    auto label(const NearRingPresentation & p, std::initializer_list<std::pair<const char *, std::size_t>> values) -> std::string
    {
        std::string s;
        for (auto [n, v] : values) {
            if (! s.empty())
                s += ' ';
            s += std::string(n) + '=' + p.names[v];
        }
        return s;
    }

    auto check_shape(const NearRingPresentation & p) -> void
    {
        const auto n = p.size();
        if (n < 2 || n > max_carrier_size)
            throw UsageError("presentation size out of range");
        if (p.zero >= n || p.one >= n)
            throw UsageError("presentation constant out of range");
        if (p.add.size() != n * n || p.mul.size() != n * n)
            throw UsageError("presentation tables not total");
        for (auto v : p.add)
            if (v >= n)
                throw UsageError("addition entry out of range");
        for (auto v : p.mul)
            if (v >= n)
                throw UsageError("multiplication entry out of range");
    }

    auto is_char_two(const NearRingPresentation & p) -> bool
    {
        for (std::size_t a = 0; a < p.size(); ++a)
            if (p.sum(static_cast<Element>(a), static_cast<Element>(a)) != p.zero)
                return false;
        return true;
    }

    auto is_left_distributive(const NearRingPresentation & p) -> bool
    {
        const auto n = p.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    auto ea = static_cast<Element>(a), eb = static_cast<Element>(b), ec = static_cast<Element>(c);
                    if (p.product(ea, p.sum(eb, ec)) != p.sum(p.product(ea, eb), p.product(ea, ec)))
                        return false;
                }
        return true;
    }
}

auto validate_presentation(const NearRingPresentation & p) -> std::vector<PresentationViolation>
{
    check_shape(p);
    const auto n = p.size();
    std::vector<PresentationViolation> out;
    auto first_pair = [&](auto && bad) -> std::optional<std::string> {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (bad(static_cast<Element>(a), static_cast<Element>(b)))
                    return label(p, {{"a", a}, {"b", b}});
        return std::nullopt;
    };
    auto first_triple = [&](auto && bad) -> std::optional<std::string> {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (bad(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c)))
                        return label(p, {{"a", a}, {"b", b}, {"c", c}});
        return std::nullopt;
    };
    auto record = [&](const char * law, std::optional<std::string> w) {
        if (w)
            out.push_back({law, *w});
    };

    record("(a+b)+c = a+(b+c)", first_triple([&](Element a, Element b, Element c) { return p.sum(p.sum(a, b), c) != p.sum(a, p.sum(b, c)); }));
    record("a+0 = a = 0+a", first_pair([&](Element a, Element) { return p.sum(a, p.zero) != a || p.sum(p.zero, a) != a; }));
    {
        std::optional<std::string> w;
        for (std::size_t a = 0; a < n && ! w; ++a) {
            bool found = false;
            for (std::size_t b = 0; b < n && ! found; ++b)
                found = p.sum(static_cast<Element>(a), static_cast<Element>(b)) == p.zero
                    && p.sum(static_cast<Element>(b), static_cast<Element>(a)) == p.zero;
            if (! found)
                w = label(p, {{"a", a}});
        }
        record("exists b: a+b = 0 = b+a", w);
    }
    record("a+b = b+a", first_pair([&](Element a, Element b) { return p.sum(a, b) != p.sum(b, a); }));
    record("(a*b)*c = a*(b*c)", first_triple([&](Element a, Element b, Element c) { return p.product(p.product(a, b), c) != p.product(a, p.product(b, c)); }));
    record("a*1 = a = 1*a", first_pair([&](Element a, Element) { return p.product(a, p.one) != a || p.product(p.one, a) != a; }));
    record("(a+b)*c = a*c + b*c", first_triple([&](Element a, Element b, Element c) {
        return p.product(p.sum(a, b), c) != p.sum(p.product(a, c), p.product(b, c));
    }));
    record("a*0 = 0", first_pair([&](Element a, Element) { return p.product(a, p.zero) != p.zero; }));
    return out;
}

auto to_string(FormulaKind k) -> std::string
{
    switch (k) {
        case FormulaKind::Affine: return "affine";
        case FormulaKind::Church: return "church";
        case FormulaKind::Ring2: return "ring2";
        case FormulaKind::NearRing2: return "nearring2";
    }
    return "?";
}

auto parse_formula_kind(std::string_view s) -> FormulaKind
{
    for (auto k : {FormulaKind::Affine, FormulaKind::Church, FormulaKind::Ring2, FormulaKind::NearRing2})
        if (to_string(k) == s)
            return k;
    throw UsageError("unknown formula '" + std::string(s) + "' (expected affine|church|ring2|nearring2)");
}

auto formula_value(const NearRingPresentation & p, FormulaKind kind, Element a, Element b, Element c) -> Element
{
    switch (kind) {
        case FormulaKind::Affine:
            return p.sum(a, p.product(b, p.sum(c, p.negate(a))));
        case FormulaKind::Church: {
            auto left = p.product(p.sum(p.one, b), a);
            auto right = p.product(b, c);
            return p.sum(left, p.product(right, p.sum(left, p.one)));
        }
        case FormulaKind::Ring2:
            return p.sum(p.product(p.sum(p.one, b), a), p.product(b, c));
        case FormulaKind::NearRing2:
            return p.sum(a, p.product(b, p.sum(a, c)));
    }
    return 0;
}

auto build_model(const NearRingPresentation & p, FormulaKind kind, std::vector<std::string> * warnings) -> TernaryAlgebra
{
    if (auto violations = validate_presentation(p); ! violations.empty())
        throw UsageError("presentation is not a unitary Abelian right near-ring with a*0 = 0: " + violations.front().law + " fails at "
            + violations.front().witness);
    if (kind != FormulaKind::Affine && ! is_char_two(p))
        throw UsageError("formula " + to_string(kind) + " needs a presentation with a+a = 0");
    if (kind == FormulaKind::Ring2 && ! is_left_distributive(p) && warnings)
        warnings->push_back("presentation is not left distributive; the ring2 formula may violate the axioms");

    const auto n = p.size();
    std::vector<Element> table(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                table[(a * n + b) * n + c] = formula_value(p, kind, static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c));
    TernaryAlgebra m{p.names, p.zero, p.one, std::move(table)};
    if (kind == FormulaKind::Affine && ! satisfies_axioms(m))
        throw std::logic_error("affine construction produced a table violating T1-T4");
    return m;
}

auto derived_vs_source(const NearRingPresentation & p, const TernaryAlgebra & m) -> SourceComparison
{
    if (m.size() != p.size())
        throw UsageError("model and presentation sizes differ");
    auto d = derived_ops(m);
    SourceComparison cmp;
    const auto n = p.size();
    for (std::size_t a = 0; a < n; ++a) {
        auto ea = static_cast<Element>(a);
        if (d.complement(ea) != p.sum(p.one, p.negate(ea)) && cmp.bar_agrees) {
            cmp.bar_agrees = false;
            cmp.first_bar_mismatch = "a=" + p.names[a];
        }
        for (std::size_t b = 0; b < n; ++b) {
            auto eb = static_cast<Element>(b);
            if (d.times(ea, eb) != p.product(ea, eb) && cmp.dot_agrees) {
                cmp.dot_agrees = false;
                cmp.first_dot_mismatch = "a=" + p.names[a] + " b=" + p.names[b];
            }
            if (d.sum(ea, eb) != p.sum(ea, eb) && cmp.plus_agrees) {
                cmp.plus_agrees = false;
                cmp.first_plus_mismatch = "a=" + p.names[a] + " b=" + p.names[b];
            }
        }
    }
    return cmp;
}

namespace
{
    template <typename Add, typename Mul>
    auto tabulate(std::vector<std::string> names, Element zero, Element one, Add && add, Mul && mul) -> NearRingPresentation
    {
        NearRingPresentation p;
        const auto n = names.size();
        p.names = std::move(names);
        p.zero = zero;
        p.one = one;
        p.add.resize(n * n);
        p.mul.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                p.add[a * n + b] = static_cast<Element>(add(a, b));
                p.mul[a * n + b] = static_cast<Element>(mul(a, b));
            }
        return p;
    }

    // Bit-vectors of length k with xor and and; labels list bits high to low.
    auto boolean_ring(unsigned k) -> NearRingPresentation
    {
        const std::size_t n = std::size_t{1} << k;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) {
            std::string s;
            for (unsigned bit = k; bit-- > 0;)
                s += ((i >> bit) & 1) ? '1' : '0';
            names.push_back(s);
        }
        return tabulate(std::move(names), 0, static_cast<Element>(n - 1), [](std::size_t a, std::size_t b) { return a ^ b; },
            [](std::size_t a, std::size_t b) { return a & b; });
    }

    // Polynomials c0 + c1 x with bit 0 = c0, bit 1 = c1, reduced by x^2 = r.
    auto quadratic(std::vector<std::string> names, std::size_t reduction) -> NearRingPresentation
    {
        return tabulate(std::move(names), 0, 1, [](std::size_t a, std::size_t b) { return a ^ b; }, [reduction](std::size_t a, std::size_t b) {
            std::size_t r = 0;
            if (b & 1) r ^= a;
            if (b & 2) r ^= a << 1;
            if (r & 4) r = (r & 3) ^ reduction;
            return r;
        });
    }

    auto z4() -> NearRingPresentation
    {
        return tabulate({"0", "1", "2", "3"}, 0, 1, [](std::size_t a, std::size_t b) { return (a + b) % 4; },
            [](std::size_t a, std::size_t b) { return (a * b) % 4; });
    }

    // [[a, b], [0, d]] over GF(2); index a*4 + b*2 + d, label "abd".
    auto ut2gf2() -> NearRingPresentation
    {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < 8; ++i)
            names.push_back(std::string{char('0' + ((i >> 2) & 1)), char('0' + ((i >> 1) & 1)), char('0' + (i & 1))});
        return tabulate(std::move(names), 0, 5, [](std::size_t x, std::size_t y) { return x ^ y; }, [](std::size_t x, std::size_t y) {
            std::size_t a = (x >> 2) & 1, b = (x >> 1) & 1, d = x & 1;
            std::size_t a2 = (y >> 2) & 1, b2 = (y >> 1) & 1, d2 = y & 1;
            return ((a & a2) << 2) | (((a & b2) ^ (b & d2)) << 1) | (d & d2);
        });
    }

    auto n4paper() -> NearRingPresentation
    {
        // Carrier 0, u, v, 1; addition is the Klein four-group.
        NearRingPresentation p;
        p.names = {"0", "u", "v", "1"};
        p.zero = 0;
        p.one = 3;
        p.add = {
            0, 1, 2, 3,
            1, 0, 3, 2,
            2, 3, 0, 1,
            3, 2, 1, 0,
        };
        p.mul = {
            0, 0, 0, 0,
            0, 0, 0, 1,
            0, 1, 2, 2,
            0, 1, 2, 3,
        };
        return p;
    }

    auto boolean_power(std::string_view name) -> std::optional<unsigned>
    {
        if (name == "gf2")
            return 1;
        if (name.size() == 5 && name.substr(0, 4) == "gf2^" && name[4] >= '1' && name[4] <= '4')
            return static_cast<unsigned>(name[4] - '0');
        return std::nullopt;
    }
}

auto catalog_names() -> std::vector<std::string>
{
    return {"gf2", "gf2^1", "gf2^2", "gf2^3", "gf2^4", "gf4", "dualnum2", "z4affine", "ut2gf2", "n4paper"};
}

auto catalog_presentation(std::string_view name) -> NearRingPresentation
{
    if (auto k = boolean_power(name))
        return boolean_ring(*k);
    if (name == "gf4")
        return quadratic({"0", "1", "w", "w2"}, 3);
    if (name == "dualnum2")
        return quadratic({"0", "1", "x", "x1"}, 0);
    if (name == "z4affine")
        return z4();
    if (name == "ut2gf2")
        return ut2gf2();
    if (name == "n4paper")
        return n4paper();
    throw UsageError("unknown catalog entry '" + std::string(name) + "'");
}

auto catalog_model(std::string_view name) -> TernaryAlgebra
{
    auto kind = boolean_power(name) ? FormulaKind::Church : FormulaKind::Affine;
    return build_model(catalog_presentation(name), kind);
}

} // namespace tba
