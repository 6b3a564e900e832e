#pragma once

#include "oracle.hh"

#include <tba/algebra.hh>
#include <tba/construct.hh>

#include <random>
#include <string>
#include <vector>

namespace testing {

inline auto to_oracle(const tba::TernaryAlgebra & m) -> oracle::Table
{
    return {m.table().begin(), m.table().end()};
}

inline auto from_oracle(const oracle::Table & t, int n, int zero = 0, int one = 1) -> tba::TernaryAlgebra
{
    return tba::TernaryAlgebra{tba::numeric_names(static_cast<std::size_t>(n)), static_cast<tba::Element>(zero), static_cast<tba::Element>(one),
        std::vector<tba::Element>(t.begin(), t.end())};
}

/// Uniform random bijection fixing zero and one.
inline auto random_relabeling(const tba::TernaryAlgebra & m, std::mt19937 & rng) -> tba::Relabeling
{
    std::vector<tba::Element> rest;
    for (std::size_t e = 0; e < m.size(); ++e)
        if (e != m.zero() && e != m.one())
            rest.push_back(static_cast<tba::Element>(e));
    auto image = rest;
    std::shuffle(image.begin(), image.end(), rng);
    auto sigma = tba::Relabeling::identity(m.size());
    for (std::size_t k = 0; k < rest.size(); ++k)
        sigma.perm[rest[k]] = image[k];
    return sigma;
}

/// Catalog entries exercised by the acceptance criteria.
inline auto acceptance_catalog() -> std::vector<std::string>
{
    return {"gf2", "gf2^2", "gf2^3", "gf4", "dualnum2", "z4affine", "ut2gf2", "n4paper"};
}

} // namespace testing
