#include "helpers.hh"

#include <tba/algebra.hh>
#include <tba/construct.hh>
#include <tba/error.hh>
#include <tba/laws.hh>

#include <doctest.h>

using namespace tba;

TEST_CASE("eval_p reads the table")
{
    auto gf2 = catalog_model("gf2");
    CHECK(gf2.eval_p(0, 1, 1) == 1);
    CHECK(gf2.eval_p(1, 0, 0) == 1);

    auto n4 = catalog_model("n4paper");
    auto u = n4.find("u"), v = n4.find("v"), zero = n4.zero();
    // u + v(u + 0) from the two tables
    auto r = oracle::n4();
    CHECK(r.add[1][r.mul[2][r.add[1][0]]] == 0);
    CHECK(n4.eval_p(u, v, zero) == zero);

    CHECK_THROWS_AS(n4.eval_p(4, 0, 0), UsageError);
    CHECK_THROWS_AS(n4.eval_p(0, 0, 7), UsageError);
}

TEST_CASE("constructor rejects malformed models")
{
    CHECK_THROWS_AS(TernaryAlgebra({"0"}, 0, 0, {0}), UsageError);
    CHECK_THROWS_AS(TernaryAlgebra({"0", "1"}, 0, 0, std::vector<Element>(8, 0)), UsageError);
    CHECK_THROWS_AS(TernaryAlgebra({"0", "1"}, 0, 1, std::vector<Element>(7, 0)), UsageError);
    CHECK_THROWS_AS(TernaryAlgebra({"0", "1"}, 0, 1, std::vector<Element>(8, 2)), UsageError);
    CHECK_THROWS_AS(TernaryAlgebra({"x", "x"}, 0, 1, std::vector<Element>(8, 0)), UsageError);
    CHECK_THROWS_AS(TernaryAlgebra({"0", "1"}, 0, 2, std::vector<Element>(8, 0)), UsageError);
}

TEST_CASE("derived operations")
{
    auto gf2 = catalog_model("gf2");
    auto d2 = derived_ops(gf2);
    CHECK(d2.complement(gf2.zero()) == gf2.one());
    CHECK(d2.complement(gf2.one()) == gf2.zero());

    auto n4 = catalog_model("n4paper");
    auto d = derived_ops(n4);
    auto u = n4.find("u"), v = n4.find("v");
    CHECK(d.complement(u) == v);
    CHECK(d.join(u, v) == n4.one());
    CHECK(d.join(v, u) == v);

    SUBCASE("defining formulas")
    {
        for (std::size_t a = 0; a < n4.size(); ++a) {
            auto ea = static_cast<Element>(a);
            CHECK(d.complement(ea) == n4.p(n4.one(), ea, n4.zero()));
            for (std::size_t b = 0; b < n4.size(); ++b) {
                auto eb = static_cast<Element>(b);
                CHECK(d.times(ea, eb) == n4.p(n4.zero(), ea, eb));
                CHECK(d.join(ea, eb) == n4.p(ea, eb, n4.one()));
                CHECK(d.sum(ea, eb) == n4.p(ea, eb, d.complement(ea)));
            }
        }
    }
}

TEST_CASE("relabel")
{
    auto n4 = catalog_model("n4paper");
    CHECK(relabel(n4, Relabeling::identity(4)) == n4);

    auto u = n4.find("u"), v = n4.find("v"), zero = n4.zero();
    auto sigma = Relabeling::identity(4);
    std::swap(sigma.perm[u], sigma.perm[v]);
    auto swapped = relabel(n4, sigma);
    CHECK(swapped != n4);
    CHECK(n4.p(zero, u, v) == zero); // u.v = 0
    CHECK(swapped.p(zero, u, v) == v); // sigma(v.u) = sigma(u) = v
    CHECK(swapped.name(v) == "u");

    auto bad = Relabeling::identity(4);
    bad.perm[1] = 2;
    CHECK_THROWS_AS(relabel(n4, bad), UsageError);
    auto moves_one = Relabeling::identity(4);
    std::swap(moves_one.perm[n4.one()], moves_one.perm[u]);
    CHECK_THROWS_AS(relabel(n4, moves_one), UsageError);
    CHECK_THROWS_AS(relabel(n4, Relabeling::identity(3)), UsageError);
}

TEST_CASE("canonical form")
{
    auto gf2 = catalog_model("gf2");
    CHECK(canonical_form(gf2).table().size() == 8);
    CHECK(std::ranges::equal(canonical_form(gf2).table(), gf2.table()));

    auto n4 = catalog_model("n4paper");
    auto sigma = Relabeling::identity(4);
    std::swap(sigma.perm[1], sigma.perm[2]);
    CHECK(canonical_form(n4) == canonical_form(relabel(n4, sigma)));
    CHECK(canonical_form(catalog_model("gf4")) != canonical_form(n4));

    SUBCASE("matches the oracle canonicaliser")
    {
        for (const auto & name : testing::acceptance_catalog()) {
            auto m = catalog_model(name);
            auto expected = oracle::canonical(testing::to_oracle(m), static_cast<int>(m.size()), m.zero(), m.one());
            auto c = canonical_form(m);
            CHECK(testing::to_oracle(c) == expected);
            CHECK(c.zero() == 0);
            CHECK(c.one() == 1);
        }
    }

    SUBCASE("invariant under random constant-fixing relabelings")
    {
        std::mt19937 rng(7);
        for (const auto & name : {"gf2^2", "gf4", "dualnum2", "n4paper", "ut2gf2"}) {
            auto m = catalog_model(name);
            auto c = canonical_form(m);
            for (int i = 0; i < 10; ++i)
                CHECK(testing::to_oracle(canonical_form(relabel(m, testing::random_relabeling(m, rng)))) == testing::to_oracle(c));
        }
    }

    SUBCASE("does not depend on where the constants sit")
    {
        auto m = catalog_model("n4paper"); // one at index 3
        CHECK(m.one() == 3);
        auto c = canonical_form(m);
        CHECK(canonical_form(c) == c);
    }
}

TEST_CASE("automorphisms and orbit sizes")
{
    CHECK(automorphism_count(catalog_model("n4paper")) == 1);
    CHECK(automorphism_count(catalog_model("gf4")) == 2); // Frobenius
    CHECK(automorphism_count(catalog_model("gf2^2")) == 2);
    CHECK(automorphism_count(catalog_model("gf2^3")) == 6);
}

TEST_CASE("table hash is stable")
{
    auto a = catalog_model("n4paper");
    CHECK(table_hash(a) == table_hash(catalog_model("n4paper")));
    CHECK(table_hash(a) != table_hash(catalog_model("gf4")));
}

TEST_CASE("lemma identities hold on axiom-verified catalog models")
{
    for (const auto & name : catalog_names()) {
        auto m = catalog_model(name);
        REQUIRE(satisfies_axioms(m));
        auto d = derived_ops(m);
        const auto n = m.size();
        CAPTURE(name);
        CHECK(d.complement(m.zero()) == m.one());
        CHECK(d.complement(m.one()) == m.zero());
        CHECK(d.sum(m.one(), m.one()) == m.zero());
        bool ok = true;
        for (std::size_t ia = 0; ia < n; ++ia) {
            auto a = static_cast<Element>(ia);
            ok = ok && d.complement(d.complement(a)) == a;
            ok = ok && d.times(a, m.zero()) == m.zero() && d.times(m.zero(), a) == m.zero();
            ok = ok && d.join(a, m.one()) == m.one() && d.join(m.one(), a) == m.one();
            ok = ok && d.sum(a, m.one()) == d.complement(a) && d.sum(m.one(), a) == d.complement(a);
            for (std::size_t ib = 0; ib < n; ++ib) {
                auto b = static_cast<Element>(ib);
                ok = ok && d.complement(d.times(a, b)) == d.join(d.complement(b), d.complement(a));
                ok = ok && d.complement(d.join(a, b)) == d.times(d.complement(b), d.complement(a));
                ok = ok && d.complement(d.sum(a, b)) == d.sum(d.complement(a), b);
                ok = ok && d.complement(d.sum(a, b)) == d.sum(a, d.complement(b));
                for (std::size_t ic = 0; ic < n; ++ic) {
                    auto c = static_cast<Element>(ic);
                    ok = ok && m.p(a, b, c) == m.p(c, d.complement(b), a);
                    ok = ok && d.complement(m.p(a, b, c)) == m.p(d.complement(a), b, d.complement(c));
                }
            }
        }
        CHECK(ok);
    }
}
