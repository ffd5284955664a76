#include "m0n/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

Coeff Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Coeff c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, checked_mul(c, -1));
    return *this;
}

Polynomial& Polynomial::operator*=(Coeff c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v = checked_mul(v, c);
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    r *= -1;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, checked_mul(ca, cb));
    return r;
}

Polynomial operator*(const Polynomial& a, const Monomial& m)
{
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        r.terms_.emplace(ma * m, ca);
    return r;
}

Polynomial Polynomial::homogeneous_part(int degree) const
{
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree)
            r.terms_.emplace(m, c);
    return r;
}

std::vector<int> Polynomial::degrees() const
{
    std::vector<int> out;
    for (const auto& [m, c] : terms_)
        out.push_back(m.degree());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Polynomial::homogeneous_degree() const
{
    const auto ds = degrees();
    if (ds.empty())
        return -1;
    if (ds.size() > 1)
        throw std::invalid_argument("polynomial is not homogeneous");
    return ds.front();
}

std::vector<std::pair<Monomial, Coeff>> Polynomial::sorted_terms(OrderConvention c) const
{
    std::vector<std::pair<Monomial, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [c](const auto& x, const auto& y) { return monomial_less(x.first, y.first, c); });
    return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q)
{
    return p * q;
}

Polynomial pow(const Polynomial& p, int e)
{
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    Polynomial r = Polynomial::constant(1);
    for (int k = 0; k < e; ++k)
        r = r * p;
    return r;
}

std::string render(const Polynomial& p, OrderConvention c)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, coeff] : p.sorted_terms(c)) {
        Coeff mag = coeff < 0 ? -coeff : coeff;
        if (first)
            out += coeff < 0 ? "-" : "";
        else
            out += coeff < 0 ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += std::to_string(mag);
        else {
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += render(m);
        }
    }
    return out;
}

}  // namespace m0n
