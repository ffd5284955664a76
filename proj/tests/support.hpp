#pragma once

#include <random>
#include <string>
#include <vector>

#include "m0n/polynomial.hpp"
#include "m0n/text.hpp"

namespace testing {

inline m0n::Polynomial poly(const std::string& s, int n)
{
    return m0n::parse_polynomial(s, n);
}

inline m0n::Monomial mono(const std::string& s, int n)
{
    return m0n::parse_monomial(s, n);
}

inline std::string nf_text(const m0n::Polynomial& p)
{
    return m0n::render(p);
}

/// Product of `degree` generators drawn uniformly.
inline m0n::Monomial random_monomial(int n, int degree, std::mt19937_64& rng)
{
    const auto gens = m0n::generators(n);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    m0n::Monomial m;
    for (int k = 0; k < degree; ++k)
        m = m * m0n::Monomial::of(gens[pick(rng)]);
    return m;
}

/// Integer combination of a few random monomials of one degree.
inline m0n::Polynomial random_polynomial(int n, int degree, std::mt19937_64& rng, int terms = 3)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    m0n::Polynomial p;
    for (int t = 0; t < terms; ++t)
        p.add_term(random_monomial(n, degree, rng), coeff(rng));
    return p;
}

}  // namespace testing
