#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "m0n/integer.hpp"
#include "m0n/monomial.hpp"

namespace m0n {

/// Finite integer combination of monomials in the free ring on the
/// generators a_i, D_I.  Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, Coeff>;

    Polynomial() = default;
    Polynomial(const Monomial& m, Coeff c = 1) { add_term(m, c); }  // NOLINT: implicit by design of the algebra
    static Polynomial constant(Coeff c) { return Polynomial(Monomial(), c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, Coeff c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(Coeff c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, Coeff c) { return a *= c; }
    friend Polynomial operator*(Coeff c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Monomial& m);

    /// Terms of exactly this degree.
    Polynomial homogeneous_part(int degree) const;
    /// Sorted list of degrees that carry a term.
    std::vector<int> degrees() const;
    /// Degree of a homogeneous polynomial; -1 for zero; throws if mixed.
    int homogeneous_degree() const;

    /// Terms sorted ascending in the monomial order.
    std::vector<std::pair<Monomial, Coeff>> sorted_terms(OrderConvention c = kDefaultConvention) const;

    bool operator==(const Polynomial&) const = default;

private:
    Terms terms_;
};

/// Exact distributive product.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

Polynomial pow(const Polynomial& p, int e);

/// Canonical text, terms ascending in the monomial order:
/// "a1*a2 - D{1,2,3}^2", "0" for zero.
std::string render(const Polynomial& p, OrderConvention c = kDefaultConvention);

}  // namespace m0n
