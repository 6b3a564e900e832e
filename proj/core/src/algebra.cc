#include <tba/algebra.hh>
#include <tba/error.hh>

#include <algorithm>
#include <numeric>

namespace tba {

namespace
{
    auto validate(const std::vector<std::string> & names, Element zero, Element one, const std::vector<Element> & table) -> void
    {
        const std::size_t n = names.size();
        if (n < 2)
            throw UsageError("carrier must have at least two elements");
        if (n > max_carrier_size)
            throw UsageError("carrier has more than " + std::to_string(max_carrier_size) + " elements");
        if (zero >= n || one >= n)
            throw UsageError("constant index out of range");
        if (zero == one)
            throw UsageError("zero and one must be distinct");
        if (table.size() != n * n * n)
            throw UsageError("table not total: expected " + std::to_string(n * n * n) + " entries, got " + std::to_string(table.size()));
        for (auto v : table)
            if (v >= n)
                throw UsageError("table entry out of range");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (names[i] == names[j])
                    throw UsageError("duplicate element label '" + names[i] + "'");
    }

    // Rest of the carrier in index order, constants removed.
    auto non_constants(const TernaryAlgebra & m) -> std::vector<Element>
    {
        std::vector<Element> rest;
        for (std::size_t e = 0; e < m.size(); ++e)
            if (e != m.zero() && e != m.one())
                rest.push_back(static_cast<Element>(e));
        return rest;
    }
}

TernaryAlgebra::TernaryAlgebra(std::vector<std::string> names, Element zero, Element one, std::vector<Element> table) :
    _names(std::move(names)),
    _zero(zero),
    _one(one),
    _table(std::move(table))
{
    validate(_names, _zero, _one, _table);
}

auto TernaryAlgebra::eval_p(std::size_t a, std::size_t b, std::size_t c) const -> Element
{
    const auto n = size();
    if (a >= n || b >= n || c >= n)
        throw UsageError("element index out of range");
    return p(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c));
}

auto TernaryAlgebra::find(std::string_view label) const -> Element
{
    for (std::size_t i = 0; i < _names.size(); ++i)
        if (_names[i] == label)
            return static_cast<Element>(i);
    throw UsageError("unknown element label '" + std::string(label) + "'");
}

auto numeric_names(std::size_t n) -> std::vector<std::string>
{
    std::vector<std::string> result;
    result.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        result.push_back(std::to_string(i));
    return result;
}

auto derived_ops(const TernaryAlgebra & m) -> DerivedOps
{
    const auto n = m.size();
    DerivedOps d;
    d.size = n;
    d.bar.resize(n);
    d.dot.resize(n * n);
    d.circ.resize(n * n);
    d.plus.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        d.bar[a] = m.p(m.one(), static_cast<Element>(a), m.zero());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
            d.dot[a * n + b] = m.p(m.zero(), ea, eb);
            d.circ[a * n + b] = m.p(ea, eb, m.one());
            d.plus[a * n + b] = m.p(ea, eb, d.bar[a]);
        }
    return d;
}

auto Relabeling::identity(std::size_t n) -> Relabeling
{
    Relabeling r;
    r.perm.resize(n);
    std::iota(r.perm.begin(), r.perm.end(), Element{0});
    return r;
}

auto Relabeling::is_bijection() const -> bool
{
    std::vector<bool> seen(perm.size(), false);
    for (auto v : perm) {
        if (v >= perm.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

auto relabel(const TernaryAlgebra & m, const Relabeling & sigma) -> TernaryAlgebra
{
    const auto n = m.size();
    if (sigma.perm.size() != n || ! sigma.is_bijection())
        throw UsageError("relabeling is not a bijection on the carrier");
    const auto & s = sigma.perm;
    if (s[m.zero()] != m.zero() || s[m.one()] != m.one())
        throw UsageError("relabeling must fix zero and one");

    std::vector<std::string> names(n);
    std::vector<Element> table(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        names[s[a]] = m.name(static_cast<Element>(a));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                table[(std::size_t{s[a]} * n + s[b]) * n + s[c]] = s[m.p(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c))];
    }
    return TernaryAlgebra{std::move(names), m.zero(), m.one(), std::move(table)};
}

auto canonical_form(const TernaryAlgebra & m) -> TernaryAlgebra
{
    const auto n = m.size();
    if (n > max_canonical_size)
        throw UsageError("canonical form is limited to carriers of size " + std::to_string(max_canonical_size));

    auto rest = non_constants(m);

    // order[k] is the original element placed at canonical index k.
    std::vector<Element> order;
    order.push_back(m.zero());
    order.push_back(m.one());
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<Element> forward(n), best_order, best_table, candidate(n * n * n);
    bool have_best = false;
    do {
        std::copy(rest.begin(), rest.end(), order.begin() + 2);
        for (std::size_t k = 0; k < n; ++k)
            forward[order[k]] = static_cast<Element>(k);

        // Build the candidate cell by cell, abandoning it once it exceeds best.
        bool smaller = ! have_best, abandoned = false;
        std::size_t idx = 0;
        for (std::size_t x = 0; x < n && ! abandoned; ++x)
            for (std::size_t y = 0; y < n && ! abandoned; ++y)
                for (std::size_t z = 0; z < n; ++z, ++idx) {
                    Element v = forward[m.p(order[x], order[y], order[z])];
                    candidate[idx] = v;
                    if (! smaller) {
                        if (v < best_table[idx])
                            smaller = true;
                        else if (v > best_table[idx]) {
                            abandoned = true;
                            break;
                        }
                    }
                }
        if (! abandoned && smaller) {
            best_table = candidate;
            best_order = order;
            have_best = true;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));

    std::vector<std::string> names(n);
    for (std::size_t k = 0; k < n; ++k)
        names[k] = m.name(best_order[k]);
    return TernaryAlgebra{std::move(names), 0, 1, std::move(best_table)};
}

auto automorphism_count(const TernaryAlgebra & m) -> std::size_t
{
    const auto n = m.size();
    auto rest = non_constants(m);
    auto image = rest;
    std::vector<Element> s(n);
    s[m.zero()] = m.zero();
    s[m.one()] = m.one();
    std::size_t count = 0;
    do {
        for (std::size_t k = 0; k < rest.size(); ++k)
            s[rest[k]] = image[k];
        bool automorphic = true;
        for (std::size_t a = 0; a < n && automorphic; ++a)
            for (std::size_t b = 0; b < n && automorphic; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    auto ea = static_cast<Element>(a), eb = static_cast<Element>(b), ec = static_cast<Element>(c);
                    if (m.p(s[a], s[b], s[c]) != s[m.p(ea, eb, ec)]) {
                        automorphic = false;
                        break;
                    }
                }
        if (automorphic)
            ++count;
    } while (std::next_permutation(image.begin(), image.end()));
    return count;
}

auto table_hash(const TernaryAlgebra & m) -> std::uint64_t
{
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    mix(m.size());
    mix(m.zero());
    mix(m.one());
    for (auto v : m.table())
        mix(v);
    return h;
}

} // namespace tba
